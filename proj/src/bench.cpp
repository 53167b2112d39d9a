#include "mser/bench.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fcntl.h>
#include <map>
#include <sstream>
#include <thread>

namespace mser {

namespace fs = std::filesystem;

std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::OK: return "OK";
    case RunStatus::OOT: return "OOT";
    case RunStatus::ERROR: return "ERROR";
  }
  return "ERROR";
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  for (std::string item; std::getline(ss, item, ',');)
    if (auto t = trim(item); !t.empty()) out.push_back(t);
  return out;
}

bool parse_bool(const std::string& v, std::size_t line) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError("line " + std::to_string(line) + ": expected a boolean, got '" + v + "'");
}

double parse_number(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + v + "'");
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

}  // namespace

BenchConfig parse_bench_config(std::string_view text, const std::string& base_dir) {
  BenchConfig c;
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? p : (fs::path(base_dir) / path).lexically_normal().string();
  };
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(n) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "ontology" || key == "ontologies") {
      for (auto& p : split_list(value)) c.ontologies.push_back(resolve(p));
    } else if (key == "query" || key == "queries") {
      for (auto& p : split_list(value)) c.queries.push_back(resolve(p));
    } else if (key == "timeout" || key == "timeout_s") {
      c.timeout_s = parse_number(value, n);
    } else if (key == "repeat") {
      c.repeat = static_cast<int>(parse_number(value, n));
    } else if (key == "demand" || key == "demand_mode") {
      c.demand_mode = parse_bool(value, n);
    } else if (key == "output" || key == "output_csv") {
      c.output_csv = resolve(value);
    } else if (key == "parallel") {
      c.parallel = static_cast<unsigned>(parse_number(value, n));
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(parse_number(value, n));
    } else {
      throw ConfigError("line " + std::to_string(n) + ": unknown key '" + key + "'");
    }
  }
  if (c.timeout_s <= 0) throw ConfigError("timeout must be positive");
  if (c.repeat < 1) throw ConfigError("repeat must be at least 1");
  if (c.parallel < 1) throw ConfigError("parallel must be at least 1");
  if (c.ontologies.empty()) throw ConfigError("no ontology given");
  if (c.queries.empty()) throw ConfigError("no query given");
  return c;
}

ChildResult run_child(const std::vector<std::string>& argv, double timeout_s) {
  ChildResult r;
  // built before fork: the child must not allocate when the parent has threads
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  int fds[2];
  // close-on-exec so siblings started in parallel do not hold our pipe open
  if (pipe2(fds, O_CLOEXEC) != 0) return r;
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    return r;
  }
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    int devnull = open("/dev/null", O_WRONLY);
    if (devnull >= 0) dup2(devnull, STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execv(args[0], args.data());
    _exit(127);
  }
  close(fds[1]);
  auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
  char buf[65536];
  bool timed_out = false;
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    int ready = poll(&p, 1, static_cast<int>(std::min<long long>(left, 1000)));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) continue;
    ssize_t got = read(fds[0], buf, sizeof buf);
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) break;
    r.out.append(buf, static_cast<std::size_t>(got));
  }
  close(fds[0]);
  int status = 0;
  if (timed_out) {
    kill(pid, SIGKILL);
    waitpid(pid, &status, 0);
    r.status = RunStatus::OOT;
    return r;
  }
  // stdout closed; the child may still be exiting
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
    r.status = r.exit_code == 0 ? RunStatus::OK : RunStatus::ERROR;
  }
  return r;
}

BenchRow bench_once(const std::string& exe, const std::string& ontology, const std::string& query,
                    const BenchConfig& cfg) {
  BenchRow row;
  row.dataset = stem(ontology);
  row.query = stem(query);
  std::vector<std::string> argv{exe, "query", ontology, query, "--report-time", "--summary",
                                "--threads", std::to_string(cfg.threads)};
  if (cfg.demand_mode) argv.push_back("--demand");
  auto child = run_child(argv, cfg.timeout_s);
  row.status = child.status;
  if (child.status != RunStatus::OK) return row;

  // the stats line: "# load_ms=.. translate_ms=.. saturate_ms=.. answer_ms=.. answers=.."
  std::map<std::string, std::string> kv;
  std::istringstream in(child.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# ", 0) != 0) continue;
    std::istringstream fields(line.substr(2));
    for (std::string f; fields >> f;)
      if (auto eq = f.find('='); eq != std::string::npos) kv[f.substr(0, eq)] = f.substr(eq + 1);
  }
  try {
    row.load_ms = std::stod(kv.at("load_ms"));
    row.translate_ms = std::stod(kv.at("translate_ms"));
    row.saturate_ms = std::stod(kv.at("saturate_ms"));
    row.answer_ms = std::stod(kv.at("answer_ms"));
    row.answers = std::stoull(kv.at("answers"));
  } catch (const std::exception&) {
    row = BenchRow{row.dataset, row.query, {}, {}, {}, {}, {}, RunStatus::ERROR};
  }
  return row;
}

BenchRow aggregate(const std::vector<BenchRow>& runs) {
  BenchRow out;
  if (runs.empty()) return out;
  out.dataset = runs[0].dataset;
  out.query = runs[0].query + "@median";
  bool all_ok = std::all_of(runs.begin(), runs.end(), [](const BenchRow& r) { return r.status == RunStatus::OK; });
  bool any_oot = std::any_of(runs.begin(), runs.end(), [](const BenchRow& r) { return r.status == RunStatus::OOT; });
  out.status = all_ok ? RunStatus::OK : any_oot ? RunStatus::OOT : RunStatus::ERROR;

  auto median = [&](std::optional<double> BenchRow::*field) -> std::optional<double> {
    std::vector<double> v;
    for (const auto& r : runs)
      if (r.status == RunStatus::OK && (r.*field)) v.push_back(*(r.*field));
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
  };
  out.load_ms = median(&BenchRow::load_ms);
  out.translate_ms = median(&BenchRow::translate_ms);
  out.saturate_ms = median(&BenchRow::saturate_ms);
  out.answer_ms = median(&BenchRow::answer_ms);
  for (const auto& r : runs)
    if (r.status == RunStatus::OK && r.answers) {
      out.answers = r.answers;
      break;
    }
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg, const std::string& exe) {
  struct Pair {
    std::string ontology, query;
  };
  std::vector<Pair> pairs;
  for (const auto& o : cfg.ontologies)
    for (const auto& q : cfg.queries) pairs.push_back({o, q});

  std::vector<std::vector<BenchRow>> runs(pairs.size(), std::vector<BenchRow>(cfg.repeat));
  // one round per repeat, so two runs of the same pair never overlap
  for (int rep = 0; rep < cfg.repeat; ++rep) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
        runs[i][rep] = bench_once(exe, pairs[i].ontology, pairs[i].query, cfg);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::min<std::size_t>(cfg.parallel, pairs.size()); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
  }

  std::vector<BenchRow> out;
  for (const auto& r : runs) out.insert(out.end(), r.begin(), r.end());
  for (const auto& r : runs) out.push_back(aggregate(r));
  return out;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  auto num = [](const std::optional<double>& v) {
    if (!v) return std::string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return std::string(buf);
  };
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << field(r.dataset) << ',' << field(r.query) << ',' << num(r.load_ms) << ',' << num(r.translate_ms) << ','
       << num(r.saturate_ms) << ',' << num(r.answer_ms) << ',' << (r.answers ? std::to_string(*r.answers) : "")
       << ',' << status_name(r.status) << '\n';
  }
}

}  // namespace mser
