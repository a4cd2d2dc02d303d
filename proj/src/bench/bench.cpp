#include "nraprove/bench/bench.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/induction/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace nraprove::bench {

using smtlib::SolverStatus;

namespace {

double round_ms(double t) { return std::round(t * 1000.0) / 1000.0; }

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

} // namespace

std::vector<BenchRecord> run_benchmark(const std::vector<ProblemSpec>& problems,
                                       const std::vector<smtlib::SolverConfig>& solvers,
                                       const std::vector<Strategy>& strategies, double timeout_s, unsigned jobs,
                                       const BenchOptions& opts) {
  if (jobs < 1) throw Error("jobs must be at least 1");

  struct Task {
    std::size_t script;  // index into scripts, or npos when compilation failed
    const smtlib::SolverConfig* solver;
  };
  std::vector<std::string> scripts;
  std::vector<Task> tasks;
  std::vector<BenchRecord> records;
  for (const auto& p : problems) {
    for (Strategy s : strategies) {
      std::size_t script = std::string::npos;
      try {
        QueryOptions q;
        q.strategy = s;
        q.reduce_radicals = opts.reduce_radicals;
        q.comments = {"problem: " + p.name, "query: refutation r=" + std::to_string(opts.r)};
        scripts.push_back(compile_query(build_refutation(p, opts.r), q));
        script = scripts.size() - 1;
      } catch (const Error&) {
      }
      for (const auto& cfg : solvers) {
        tasks.push_back({script, &cfg});
        records.push_back({p.name, std::string(strategy_name(s)), cfg.name, SolverStatus::Error, 0.0});
      }
    }
  }

  // Each worker owns the slots it claims, so no further locking is needed.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      if (tasks[i].script == std::string::npos) continue;
      smtlib::SolverConfig cfg = *tasks[i].solver;
      cfg.models = false;
      try {
        auto res = smtlib::run_solver(scripts[tasks[i].script], cfg, timeout_s);
        records[i].status = res.status;
        records[i].time_s = round_ms(res.wall_time_s);
      } catch (const std::exception&) {
        records[i].status = SolverStatus::Error;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return records;
}

SurvivalSeries survival_series(const std::vector<BenchRecord>& records, std::string_view solver) {
  std::vector<double> times;
  for (const auto& r : records)
    if (r.solver == solver && r.status != SolverStatus::Timeout && r.status != SolverStatus::Error)
      times.push_back(r.time_s);
  std::sort(times.begin(), times.end());
  SurvivalSeries s{std::string(solver), {}};
  double total = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    total += times[k];
    s.points.emplace_back(k + 1, total);
  }
  return s;
}

std::vector<std::string> solver_names(const std::vector<BenchRecord>& records) {
  std::vector<std::string> names;
  for (const auto& r : records)
    if (std::find(names.begin(), names.end(), r.solver) == names.end()) names.push_back(r.solver);
  return names;
}

std::string_view label_name(ScatterLabel l) {
  switch (l) {
  case ScatterLabel::Sat: return "SAT";
  case ScatterLabel::Unsat: return "UNSAT";
  case ScatterLabel::Unresolved: return "unresolved";
  case ScatterLabel::Disagreement: return "DISAGREEMENT";
  }
  return "unresolved";
}

namespace {

bool decisive(SolverStatus s) { return s == SolverStatus::Sat || s == SolverStatus::Unsat; }

ScatterLabel consensus(SolverStatus a, SolverStatus b) {
  if (decisive(a) && decisive(b) && a != b) return ScatterLabel::Disagreement;
  SolverStatus s = decisive(a) ? a : b;
  if (s == SolverStatus::Sat) return ScatterLabel::Sat;
  if (s == SolverStatus::Unsat) return ScatterLabel::Unsat;
  return ScatterLabel::Unresolved;
}

} // namespace

std::vector<ScatterPoint> scatter_series(const std::vector<BenchRecord>& records, std::string_view solver_a,
                                         std::string_view solver_b, double timeout_s) {
  using Key = std::pair<std::string, std::string>;
  std::map<Key, const BenchRecord*> by_a, by_b;
  std::vector<Key> order;
  for (const auto& r : records) {
    Key key{r.problem, r.strategy};
    if (r.solver == solver_a) {
      if (!by_a.count(key) && !by_b.count(key)) order.push_back(key);
      by_a[key] = &r;
    } else if (r.solver == solver_b) {
      if (!by_a.count(key) && !by_b.count(key)) order.push_back(key);
      by_b[key] = &r;
    }
  }
  if (by_a.empty()) throw MissingSolver(std::string(solver_a));
  if (by_b.empty()) throw MissingSolver(std::string(solver_b));
  auto plotted = [&](const BenchRecord& r) { return r.status == SolverStatus::Timeout ? timeout_s : r.time_s; };
  std::vector<ScatterPoint> out;
  for (const auto& key : order) {
    auto a = by_a.find(key), b = by_b.find(key);
    if (a == by_a.end() || b == by_b.end()) continue;
    out.push_back({key.first + "/" + key.second, plotted(*a->second), plotted(*b->second),
                   consensus(a->second->status, b->second->status)});
  }
  return out;
}

std::vector<std::string> soundness_disagreements(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::set<SolverStatus>> seen;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& r : records) {
    auto key = std::make_pair(r.problem, r.strategy);
    if (!seen.count(key)) order.push_back(key);
    if (decisive(r.status)) seen[key].insert(r.status);
  }
  std::vector<std::string> out;
  for (const auto& key : order)
    if (seen[key].size() > 1) out.push_back(key.first + "/" + key.second);
  return out;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// RFC 4180 records; quoted fields may span lines.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::string_view kHeader = "problem,strategy,solver,status,time_s";

} // namespace

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : records) {
    out += csv_field(r.problem) + ',' + csv_field(r.strategy) + ',' + csv_field(r.solver) + ',' +
           std::string(smtlib::status_name(r.status)) + ',' + fmt("%.3f", r.time_s) + '\n';
  }
  return out;
}

std::vector<BenchRecord> records_from_csv(std::string_view text) {
  auto rows = parse_csv(text);
  if (rows.empty()) return {};
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
  if (header != kHeader) throw Error("unexpected CSV header '" + header + "'");
  std::vector<BenchRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string where = "CSV record " + std::to_string(i);
    if (row.size() != 5) throw Error(where + ": expected 5 fields, got " + std::to_string(row.size()));
    auto status = smtlib::parse_status_name(row[3]);
    if (!status) throw Error(where + ": unknown status '" + row[3] + "'");
    double t;
    try {
      std::size_t used = 0;
      t = std::stod(row[4], &used);
      if (used != row[4].size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw Error(where + ": bad time '" + row[4] + "'");
    }
    out.push_back({row[0], row[1], row[2], *status, t});
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error("error writing " + path.string());
}

void write_records_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
  write_text_file(path, records_to_csv(records));
}

std::vector<BenchRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return records_from_csv(ss.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string status_matrix_csv(const std::vector<BenchRecord>& records) {
  auto solvers = solver_names(records);
  std::vector<std::pair<std::string, std::string>> rows;
  std::map<std::pair<std::string, std::string>, std::map<std::string, SolverStatus>> cells;
  for (const auto& r : records) {
    auto key = std::make_pair(r.problem, r.strategy);
    if (!cells.count(key)) rows.push_back(key);
    cells[key][r.solver] = r.status;
  }
  std::string out = "problem,strategy";
  for (const auto& s : solvers) out += ',' + csv_field(s);
  out += '\n';
  for (const auto& key : rows) {
    out += csv_field(key.first) + ',' + csv_field(key.second);
    for (const auto& s : solvers) {
      auto it = cells[key].find(s);
      out += ',';
      if (it != cells[key].end()) out += smtlib::status_name(it->second);
    }
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kWidth = 640, kHeight = 440, kLeft = 70, kRight = 20, kTop = 30, kBottom = 60;
constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string svg_open(std::string_view title) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<title>" << xml_escape(title) << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight << "\" height=\""
     << kHeight - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  return os.str();
}

struct Axis {
  double lo, hi;
  bool log;
  double pixel_lo, pixel_hi;

  double map(double v) const {
    double a = log ? std::log10(v) : v, l = log ? std::log10(lo) : lo, h = log ? std::log10(hi) : hi;
    return pixel_lo + (a - l) / (h - l) * (pixel_hi - pixel_lo);
  }
};

std::vector<double> linear_ticks(double hi) {
  double step = std::pow(10.0, std::floor(std::log10(hi)));
  if (hi / step < 3) step /= 2;
  std::vector<double> ticks;
  for (double v = 0; v <= hi * 1.0000001; v += step) ticks.push_back(v);
  return ticks;
}

std::string tick_label(double v) {
  if (v != 0 && (std::fabs(v) < 0.01 || std::fabs(v) >= 1e5)) return fmt("%.0e", v);
  std::string s = fmt("%.2f", v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string axes(const Axis& x, const Axis& y, const std::vector<double>& xt, const std::vector<double>& yt,
                 std::string_view xlabel, std::string_view ylabel) {
  std::ostringstream os;
  for (double v : xt)
    os << "<line x1=\"" << fmt("%.2f", x.map(v)) << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
       << fmt("%.2f", x.map(v)) << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"black\"/>"
       << "<text x=\"" << fmt("%.2f", x.map(v)) << "\" y=\"" << kHeight - kBottom + 18
       << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
  for (double v : yt)
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt("%.2f", y.map(v)) << "\" x2=\"" << kLeft << "\" y2=\""
       << fmt("%.2f", y.map(v)) << "\" stroke=\"black\"/>"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt("%.2f", y.map(v) + 4) << "\" text-anchor=\"end\">"
       << tick_label(v) << "</text>\n";
  os << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 20 << "\" text-anchor=\"middle\">"
     << xml_escape(xlabel) << "</text>\n";
  os << "<text transform=\"translate(18," << (kTop + kHeight - kBottom) / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(ylabel) << "</text>\n";
  return os.str();
}

} // namespace

std::string survival_svg(const std::vector<SurvivalSeries>& series) {
  std::size_t max_k = 1;
  double max_t = 0.0;
  for (const auto& s : series)
    for (const auto& [k, t] : s.points) {
      max_k = std::max(max_k, k);
      max_t = std::max(max_t, t);
    }
  if (max_t <= 0.0) max_t = 1.0;
  Axis x{0, static_cast<double>(max_k), false, kLeft, kWidth - kRight};
  Axis y{0, max_t * 1.05, false, kHeight - kBottom, kTop};
  std::vector<double> xt;
  const double step = std::max<double>(1.0, std::ceil(max_k / 10.0));
  for (double k = 0; k <= max_k; k += step) xt.push_back(k);

  std::ostringstream os;
  os << svg_open("survival plot") << axes(x, y, xt, linear_ticks(max_t), "problems solved (k)", "cumulative time (s)");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    const auto& s = series[i];
    os << "<g class=\"series\" data-solver=\"" << xml_escape(s.solver) << "\">\n";
    if (!s.points.empty()) {
      os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
      for (std::size_t j = 0; j < s.points.size(); ++j)
        os << (j ? " " : "") << fmt("%.2f", x.map(s.points[j].first)) << ','
           << fmt("%.2f", y.map(s.points[j].second));
      os << "\"/>\n";
    }
    for (const auto& [k, t] : s.points)
      os << "<circle cx=\"" << fmt("%.2f", x.map(k)) << "\" cy=\"" << fmt("%.2f", y.map(t)) << "\" r=\"3\" fill=\""
         << colour << "\" data-k=\"" << k << "\" data-t=\"" << fmt("%.3f", t) << "\"/>\n";
    os << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 16 + 16 * i << "\" fill=\"" << colour << "\">"
       << xml_escape(s.solver) << " (" << s.points.size() << " solved)</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string scatter_svg(const std::vector<ScatterPoint>& points, std::string_view solver_a,
                        std::string_view solver_b, double timeout_s) {
  constexpr double kFloor = 1e-3;
  double lo = timeout_s > 0 ? timeout_s : 1.0, hi = timeout_s > 0 ? timeout_s : 1.0;
  for (const auto& p : points) {
    lo = std::min({lo, std::max(p.time_a, kFloor), std::max(p.time_b, kFloor)});
    hi = std::max({hi, p.time_a, p.time_b});
  }
  lo = std::pow(10.0, std::floor(std::log10(lo)));
  hi = std::pow(10.0, std::ceil(std::log10(hi)));
  if (hi <= lo) hi = lo * 10;
  const double side = std::min(kWidth - kLeft - kRight, kHeight - kTop - kBottom);
  Axis x{lo, hi, true, kLeft, kLeft + side};
  Axis y{lo, hi, true, kTop + side, kTop};
  std::vector<double> ticks;
  for (double v = lo; v <= hi * 1.0000001; v *= 10) ticks.push_back(v);

  std::ostringstream os;
  os << svg_open("scatter plot") << axes(x, y, ticks, ticks, std::string(solver_a) + " time (s)",
                                         std::string(solver_b) + " time (s)");
  os << "<line x1=\"" << x.map(lo) << "\" y1=\"" << y.map(lo) << "\" x2=\"" << x.map(hi) << "\" y2=\"" << y.map(hi)
     << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  auto colour = [](ScatterLabel l) {
    switch (l) {
    case ScatterLabel::Sat: return "blue";
    case ScatterLabel::Unsat: return "red";
    case ScatterLabel::Disagreement: return "black";
    case ScatterLabel::Unresolved: break;
    }
    return "gray";
  };
  for (const auto& p : points) {
    double px = x.map(std::max(p.time_a, kFloor)), py = y.map(std::max(p.time_b, kFloor));
    os << "<circle cx=\"" << fmt("%.2f", px) << "\" cy=\"" << fmt("%.2f", py) << "\" r=\"4\" fill=\""
       << colour(p.label) << "\" fill-opacity=\"0.7\" data-problem=\"" << xml_escape(p.problem) << "\" data-label=\""
       << label_name(p.label) << "\"><title>" << xml_escape(p.problem) << "</title></circle>\n";
  }
  const double lx = kLeft + side + 20;
  os << "<text x=\"" << lx << "\" y=\"" << kTop + 14 << "\" fill=\"blue\">SAT</text>\n"
     << "<text x=\"" << lx << "\" y=\"" << kTop + 30 << "\" fill=\"red\">UNSAT</text>\n"
     << "<text x=\"" << lx << "\" y=\"" << kTop + 46 << "\" fill=\"gray\">unresolved</text>\n"
     << "<text x=\"" << lx << "\" y=\"" << kTop + 62 << "\" fill=\"black\">sat/unsat clash</text>\n"
     << "<text x=\"" << lx << "\" y=\"" << kTop + 86 << "\">timeouts drawn at " << tick_label(timeout_s)
     << " s</text>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace nraprove::bench
