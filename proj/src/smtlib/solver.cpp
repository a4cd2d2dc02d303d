#include "nraprove/smtlib/solver.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/smtlib/sexpr.hpp"

#include <json.hpp>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <functional>
#include <poll.h>
#include <signal.h>
#include <sstream>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

namespace nraprove::smtlib {

std::string_view status_name(SolverStatus s) {
  switch (s) {
  case SolverStatus::Sat: return "sat";
  case SolverStatus::Unsat: return "unsat";
  case SolverStatus::Unknown: return "unknown";
  case SolverStatus::Timeout: return "timeout";
  case SolverStatus::Error: return "error";
  }
  return "error";
}

std::optional<SolverStatus> parse_status_name(std::string_view name) {
  for (auto s : {SolverStatus::Sat, SolverStatus::Unsat, SolverStatus::Unknown, SolverStatus::Timeout,
                 SolverStatus::Error})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Rational> decimal_value(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto dot = text.find('.');
  std::string digits = dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty()) return std::nullopt;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  Integer num(digits);
  Integer den = 1;
  if (dot != std::string::npos) mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> value_of(const SExpr& e) {
  if (!e.is_list) return decimal_value(e.atom);
  if (e.items.size() == 2 && e.items[0].is_atom("-")) {
    auto v = value_of(e.items[1]);
    if (v) return Rational(-*v);
    return std::nullopt;
  }
  if (e.items.size() == 3 && e.items[0].is_atom("/")) {
    auto n = value_of(e.items[1]);
    auto d = value_of(e.items[2]);
    if (!n || !d || sgn(*d) == 0) return std::nullopt;
    return Rational(*n / *d);
  }
  return std::nullopt;
}

// Searches PATH the way execvp would, so the child only needs execv.
std::string resolve_executable(const std::string& name) {
  if (name.find('/') != std::string::npos) return name;
  const char* path = std::getenv("PATH");
  std::string_view dirs = path ? path : "/usr/local/bin:/usr/bin:/bin";
  while (true) {
    auto colon = dirs.find(':');
    std::string dir(dirs.substr(0, colon));
    if (dir.empty()) dir = ".";
    std::string candidate = dir + "/" + name;
    if (::access(candidate.c_str(), X_OK) == 0) return candidate;
    if (colon == std::string_view::npos) break;
    dirs.remove_prefix(colon + 1);
  }
  return {};
}

class TempScript {
public:
  explicit TempScript(std::string_view content) {
    std::string tmpl = (std::filesystem::temp_directory_path() / "nraprove-XXXXXX.smt2").string();
    int fd = ::mkstemps(tmpl.data(), 5);
    if (fd < 0) throw Error("cannot create temporary script: " + std::string(std::strerror(errno)));
    path_ = tmpl;
    std::size_t off = 0;
    while (off < content.size()) {
      ssize_t n = ::write(fd, content.data() + off, content.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        ::close(fd);
        throw Error("cannot write " + path_ + ": " + std::strerror(errno));
      }
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempScript() { ::unlink(path_.c_str()); }
  TempScript(const TempScript&) = delete;
  TempScript& operator=(const TempScript&) = delete;

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct Pipe {
  int read = -1;
  int write = -1;
  Pipe() {
    int fds[2];
    if (::pipe2(fds, O_CLOEXEC) != 0) throw Error(std::string("pipe: ") + std::strerror(errno));
    read = fds[0];
    write = fds[1];
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  void close_read() {
    if (read >= 0) ::close(read);
    read = -1;
  }
  void close_write() {
    if (write >= 0) ::close(write);
    write = -1;
  }
};

// Reads what is available; returns false at end of stream.
bool drain(int fd, std::string& sink) {
  char buf[4096];
  while (true) {
    ssize_t n = ::read(fd, buf, sizeof buf);
    if (n > 0) {
      sink.append(buf, static_cast<std::size_t>(n));
      continue;
    }
    if (n == 0) return false;
    if (errno == EINTR) continue;
    return errno == EAGAIN || errno == EWOULDBLOCK;
  }
}

} // namespace

SolverStatus parse_status(std::string_view output) {
  std::size_t start = 0;
  while (start <= output.size()) {
    auto end = output.find('\n', start);
    std::string_view line = trim(output.substr(start, end == std::string_view::npos ? output.npos : end - start));
    if (line == "sat") return SolverStatus::Sat;
    if (line == "unsat") return SolverStatus::Unsat;
    if (line == "unknown") return SolverStatus::Unknown;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return SolverStatus::Error;
}

Model parse_model(std::string_view output) {
  Model model;
  std::vector<SExpr> exprs;
  try {
    exprs = parse_sexprs(output);
  } catch (const ParseError&) {
    return model;
  }
  std::function<void(const SExpr&)> walk = [&](const SExpr& e) {
    if (!e.is_list) return;
    if (e.items.size() == 5 && e.items[0].is_atom("define-fun") && !e.items[1].is_list &&
        e.items[2].is_list && e.items[2].items.empty()) {
      model[e.items[1].atom] = to_string(e.items[4]);
      return;
    }
    for (const auto& c : e.items) walk(c);
  };
  for (const auto& e : exprs) walk(e);
  return model;
}

std::optional<Rational> model_value(std::string_view text) {
  try {
    auto exprs = parse_sexprs(text);
    if (exprs.size() != 1) return std::nullopt;
    return value_of(exprs.front());
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

SolverResult run_solver(std::string_view script, const SolverConfig& cfg, double timeout_s) {
  using Clock = std::chrono::steady_clock;
  SolverResult result;
  if (cfg.command.empty()) {
    result.detail = "solver '" + cfg.name + "' has an empty command";
    result.spawn_failed = true;
    return result;
  }

  TempScript file(script);
  std::vector<std::string> args;
  bool substituted = false;
  for (const auto& a : cfg.command) {
    if (a == "{file}") {
      args.push_back(file.path());
      substituted = true;
    } else {
      args.push_back(a);
    }
  }
  if (!substituted) args.push_back(file.path());

  std::string exe = resolve_executable(args.front());
  if (exe.empty()) {
    result.detail = "cannot find executable '" + args.front() + "'";
    result.spawn_failed = true;
    return result;
  }
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);

  Pipe out, err, exec_status;
  int devnull = ::open("/dev/null", O_RDONLY | O_CLOEXEC);

  auto start = Clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    if (devnull >= 0) ::close(devnull);
    result.detail = std::string("fork: ") + std::strerror(errno);
    result.spawn_failed = true;
    return result;
  }
  if (pid == 0) {
    // Child: async-signal-safe calls only.
    ::setpgid(0, 0);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::dup2(out.write, STDOUT_FILENO);
    ::dup2(err.write, STDERR_FILENO);
    ::execv(exe.c_str(), argv.data());
    int code = errno;
    ssize_t ignored = ::write(exec_status.write, &code, sizeof code);
    (void)ignored;
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  if (devnull >= 0) ::close(devnull);
  out.close_write();
  err.close_write();
  exec_status.close_write();

  int exec_errno = 0;
  ssize_t got;
  do {
    got = ::read(exec_status.read, &exec_errno, sizeof exec_errno);
  } while (got < 0 && errno == EINTR);
  if (got == static_cast<ssize_t>(sizeof exec_errno)) {
    ::waitpid(pid, nullptr, 0);
    result.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    result.detail = "cannot execute '" + exe + "': " + std::strerror(exec_errno);
    result.spawn_failed = true;
    return result;
  }

  ::fcntl(out.read, F_SETFL, O_NONBLOCK);
  ::fcntl(err.read, F_SETFL, O_NONBLOCK);
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout_s));
  bool out_open = true, err_open = true, exited = false, timed_out = false;
  int wstatus = 0;

  while (true) {
    if (!exited) {
      pid_t w = ::waitpid(pid, &wstatus, WNOHANG);
      if (w == pid) exited = true;
    }
    if (exited) {
      // Descendants may still hold the pipes; collect what is buffered and stop.
      if (out_open) drain(out.read, result.output);
      if (err_open) drain(err.read, result.error_output);
      break;
    }
    auto now = Clock::now();
    if (now >= deadline) {
      timed_out = true;
      break;
    }
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
    int wait_ms = static_cast<int>(std::min<long long>(std::max<long long>(remaining, 1), 20));
    pollfd fds[2];
    nfds_t n = 0;
    if (out_open) fds[n++] = {out.read, POLLIN, 0};
    if (err_open) fds[n++] = {err.read, POLLIN, 0};
    if (n == 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(wait_ms));
      continue;
    }
    ::poll(fds, n, wait_ms);
    if (out_open) out_open = drain(out.read, result.output);
    if (err_open) err_open = drain(err.read, result.error_output);
  }

  // Nothing from this run may outlive it.
  ::kill(-pid, SIGKILL);
  if (!exited) ::waitpid(pid, &wstatus, 0);
  result.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();

  if (timed_out) {
    result.status = SolverStatus::Timeout;
    result.detail = "wall-clock limit of " + std::to_string(timeout_s) + " s reached";
    return result;
  }

  result.status = parse_status(result.output);
  if (result.status == SolverStatus::Error) {
    std::ostringstream os;
    if (WIFEXITED(wstatus))
      os << "exit code " << WEXITSTATUS(wstatus);
    else if (WIFSIGNALED(wstatus))
      os << "killed by signal " << WTERMSIG(wstatus);
    os << " without a status line";
    std::string_view tail = trim(result.error_output.empty() ? result.output : result.error_output);
    if (!tail.empty()) os << ": " << tail.substr(0, 500);
    result.detail = os.str();
  } else if (result.status == SolverStatus::Sat && cfg.models) {
    result.model = parse_model(result.output);
  }
  return result;
}

std::vector<SolverConfig> parse_solver_configs(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("solver config: ") + e.what());
  }
  if (!j.is_array()) throw Error("solver config: expected a JSON array");
  std::vector<SolverConfig> out;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("cmd"))
      throw Error("solver config: each entry needs \"name\" and \"cmd\"");
    SolverConfig cfg;
    cfg.name = entry.at("name").get<std::string>();
    cfg.command = entry.at("cmd").get<std::vector<std::string>>();
    cfg.models = entry.value("models", false);
    if (cfg.command.empty()) throw Error("solver config: empty command for '" + cfg.name + "'");
    out.push_back(std::move(cfg));
  }
  return out;
}

std::vector<SolverConfig> load_solver_configs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read solver config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_solver_configs(ss.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::vector<SolverConfig> default_solver_configs() {
  return {
      {"z3", {"z3", "-smt2", "{file}"}, true},
      {"cvc5", {"cvc5", "{file}"}, true},
      {"yices", {"yices-smt2", "{file}"}, true},
  };
}

} // namespace nraprove::smtlib
