#include "iman/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "iman/discover.hpp"
#include "iman/metrics.hpp"

namespace iman {

std::string NoiseSpec::label() const {
  if (kind == Kind::kUniformRandom) return "uniform";
  std::ostringstream out;
  out << "twopoint:" << p << ":" << position;
  return out.str();
}

NoiseSpec parse_noise_spec(const std::string& text) {
  NoiseSpec spec;
  if (text == "uniform") return spec;
  if (text.rfind("twopoint:", 0) == 0) {
    spec.kind = NoiseSpec::Kind::kTwoPoint;
    const std::string rest = text.substr(9);
    const std::size_t colon = rest.find(':');
    try {
      spec.p = std::stod(rest.substr(0, colon));
      if (colon != std::string::npos) spec.position = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse noise spec '" + text + "'");
    }
    if (spec.p <= 0.0 || spec.p >= 1.0) {
      throw std::invalid_argument("two-point noise needs p in (0,1)");
    }
    return spec;
  }
  throw std::invalid_argument("unknown noise spec '" + text +
                              "' (expected uniform | twopoint:P[:POS])");
}

Distribution make_noise(const NoiseSpec& spec, Modulus m, Rng& rng) {
  if (spec.kind == NoiseSpec::Kind::kUniformRandom) return uniform_random_noise(m, rng);
  return two_point_noise(m, spec.p, spec.position);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::stringstream ss(s);
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

}  // namespace

std::vector<BenchCell> parse_grid(const std::string& spec) {
  std::vector<int> ds, ms, ns;
  std::vector<double> pas = {0.5};
  std::vector<NoiseSpec> noises = {NoiseSpec{}};

  for (const std::string& item : split(spec, ';')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("grid entry '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::vector<std::string> values = split(item.substr(eq + 1), ',');
    if (values.empty()) throw std::invalid_argument("grid key '" + key + "' has no values");
    try {
      if (key == "d" || key == "m" || key == "n") {
        std::vector<int>& target = key == "d" ? ds : key == "m" ? ms : ns;
        target.clear();
        for (const std::string& v : values) target.push_back(std::stoi(v));
      } else if (key == "pa") {
        pas.clear();
        for (const std::string& v : values) pas.push_back(std::stod(v));
      } else if (key == "noise") {
        noises.clear();
        for (const std::string& v : values) noises.push_back(parse_noise_spec(v));
      } else {
        throw std::invalid_argument("unknown grid key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse grid entry '" + item + "'");
    }
  }
  if (ds.empty() || ms.empty() || ns.empty()) {
    throw std::invalid_argument("grid must set d, m and n");
  }

  std::vector<BenchCell> cells;
  for (int d : ds)
    for (int m : ms)
      for (int n : ns)
        for (double pa : pas)
          for (const NoiseSpec& noise : noises) cells.push_back({d, m, n, pa, noise});
  return cells;
}

int bench_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("IMAN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

namespace {

struct TrialOutcome {
  bool failed = false;
  double ero = 0.0;
  double acc = 0.0;
  double ct_ms = 0.0;
};

TrialOutcome run_trial(const BenchCell& cell, std::uint64_t seed, std::uint64_t stream,
                       double alpha) {
  Rng rng(seed, stream);
  const Modulus m(cell.m);
  const Distribution noise = make_noise(cell.noise, m, rng);
  const auto b = random_dag(cell.d, cell.p_a, rng);
  auto tables = random_functions(b, m, rng);
  const CausalModel model = make_model(m, b, std::move(tables), noise);
  const Dataset data = sample(model, cell.n, rng);

  TrialOutcome out;
  try {
    const auto start = std::chrono::steady_clock::now();
    const DiscoveryResult result = discover(data.rows, m, alpha);
    const auto stop = std::chrono::steady_clock::now();
    out.ct_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    const auto truth = observed_adjacency(model.adjacency, data.permutation);
    out.ero = ero(truth, result.adjacency());
    out.acc = acc(truth, result.adjacency());
  } catch (const InsufficientDataError&) {
    out.failed = true;
  }
  return out;
}

}  // namespace

BenchCellResult run_bench_cell(const BenchCell& cell, int trials, std::uint64_t seed,
                               std::size_t cell_index, double alpha, int threads) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialOutcome> outcomes(static_cast<size_t>(trials));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
      const std::uint64_t stream =
          (static_cast<std::uint64_t>(cell_index) << 32) | static_cast<std::uint64_t>(t);
      outcomes[static_cast<size_t>(t)] = run_trial(cell, seed, stream, alpha);
    }
  };

  const int n_threads = std::min(std::max(threads, 1), trials);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  BenchCellResult r;
  r.cell = cell;
  r.trials = trials;
  double sum_ero = 0.0, sum_acc = 0.0, sum_ct = 0.0;
  int ok = 0;
  for (const TrialOutcome& o : outcomes) {
    if (o.failed) {
      ++r.failures;
      continue;
    }
    sum_ero += o.ero;
    sum_acc += o.acc;
    sum_ct += o.ct_ms;
    ++ok;
  }
  if (ok > 0) {
    r.mean_ero = sum_ero / ok;
    r.mean_acc = sum_acc / ok;
    r.mean_ct_ms = sum_ct / ok;
  }
  return r;
}

std::string bench_report_header() { return "d,m,n,pa,noise,trials,ero,acc,ct_ms,failures"; }

std::string bench_report_row(const BenchCellResult& r) {
  std::ostringstream out;
  out << r.cell.d << ',' << r.cell.m << ',' << r.cell.n << ',' << r.cell.p_a << ','
      << r.cell.noise.label() << ',' << r.trials << ',' << r.mean_ero << ',' << r.mean_acc
      << ',' << r.mean_ct_ms << ',' << r.failures;
  return out.str();
}

}  // namespace iman
