#!/usr/bin/env python3
"""Runs an SMT-LIB 2.6 file through the cvc5 Python bindings and prints the
solver's responses, standing in for the cvc5 binary."""
import sys

import cvc5
from cvc5 import InputParser, SymbolManager


def main(path):
    tm = cvc5.TermManager()
    solver = cvc5.Solver(tm)
    symbols = SymbolManager(tm)
    parser = InputParser(solver, symbols)
    parser.setFileInput(cvc5.InputLanguage.SMT_LIB_2_6, path)
    while True:
        cmd = parser.nextCommand()
        if cmd.isNull():
            break
        out = cmd.invoke(solver, symbols)
        if out:
            sys.stdout.write(out)
            sys.stdout.flush()


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: cvc5_driver.py FILE.smt2")
    main(sys.argv[1])
