// steinerdiam: Steiner metrics, extremal-value classification, predicate
// verification scans, extremal family generation, and a brute-force reference
// solver, over graph6 streams.  JSON-lines on stdout, diagnostics on stderr.
//
// Exit codes: 0 clean, 1 verification found counterexamples, 2 input or
// usage error.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "steiner/characterization.hpp"
#include "steiner/families.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph6.hpp"
#include "steiner/steiner_distance.hpp"

namespace {

using steiner::Graph;
using ojson = nlohmann::ordered_json;

constexpr std::size_t kChunkLines = 2048;
constexpr char kGraph6Header[] = ">>graph6<<";

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Pulls graph6 lines off a stream: skips blank lines, trims CR, and strips
// the optional ">>graph6<<" header prefix from the first line.
class LineSource {
 public:
  explicit LineSource(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (first_) {
        first_ = false;
        if (line.rfind(kGraph6Header, 0) == 0) line.erase(0, sizeof(kGraph6Header) - 1);
      }
      if (line.empty()) continue;
      return line;
    }
    return std::nullopt;
  }

 private:
  std::istream& in_;
  bool first_ = true;
};

std::vector<std::string> next_chunk(LineSource& src, std::size_t limit) {
  std::vector<std::string> chunk;
  while (chunk.size() < limit) {
    auto line = src.next();
    if (!line) break;
    chunk.push_back(std::move(*line));
  }
  return chunk;
}

// Applies fn to every line of one chunk on `jobs` workers; results come back
// in input order, so output is deterministic at any parallelism degree.
template <typename Fn>
std::vector<std::string> map_chunk(const std::vector<std::string>& chunk,
                                   std::size_t base_index, int jobs, Fn&& fn) {
  std::vector<std::string> out(chunk.size());
  std::size_t width = std::min<std::size_t>(jobs < 1 ? 1 : jobs, chunk.size());
  if (width <= 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) out[i] = fn(base_index + i, chunk[i]);
    return out;
  }
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= chunk.size()) break;
      out[i] = fn(base_index + i, chunk[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(width);
  for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

struct InputStream {
  std::ifstream file;
  std::istream* stream = nullptr;
};

bool open_input(const std::string& path, InputStream& in) {
  if (path.empty() || path == "-") {
    in.stream = &std::cin;
    return true;
  }
  in.file.open(path);
  if (!in.file) return false;
  in.stream = &in.file;
  return true;
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Shared scan driver for compute/classify: chunked parallel map over the
// input, records emitted in input order, exit 2 if any record carried an
// error field.
template <typename Fn>
int stream_records(const std::string& input, int jobs, Fn&& fn) {
  InputStream in;
  if (!open_input(input, in)) {
    std::cerr << "steinerdiam: cannot open '" << input << "'\n";
    return 2;
  }
  LineSource src(*in.stream);
  std::atomic<bool> had_error{false};
  std::size_t base = 0;
  while (true) {
    auto chunk = next_chunk(src, kChunkLines);
    if (chunk.empty()) break;
    auto records = map_chunk(chunk, base, jobs, [&](std::size_t idx, const std::string& line) {
      return fn(idx, line, had_error);
    });
    for (const auto& r : records)
      if (!r.empty()) std::cout << r << '\n';
    base += chunk.size();
  }
  return had_error.load() ? 2 : 0;
}

enum class Metric { kSdiam, kSrad, kEcc, kCenter, kWiener, kAvg };

Metric metric_from_string(const std::string& name) {
  if (name == "sdiam") return Metric::kSdiam;
  if (name == "srad") return Metric::kSrad;
  if (name == "ecc") return Metric::kEcc;
  if (name == "center") return Metric::kCenter;
  if (name == "wiener") return Metric::kWiener;
  return Metric::kAvg;
}

int run_compute(const std::string& input, int jobs, int k, const std::string& metric_name) {
  Metric metric = metric_from_string(metric_name);
  return stream_records(input, jobs, [&](std::size_t idx, const std::string& line,
                                         std::atomic<bool>& had_error) {
    ojson j;
    j["index"] = idx;
    try {
      Graph g = steiner::decode_graph6(line);
      j["n"] = g.order();
      j["k"] = k;
      j["metric"] = metric_name;
      switch (metric) {
        case Metric::kSdiam:
          j["value"] = steiner::steiner_profile(g, k).diameter;
          break;
        case Metric::kSrad:
          j["value"] = steiner::steiner_profile(g, k).radius;
          break;
        case Metric::kEcc:
          j["value"] = steiner::steiner_profile(g, k).eccentricity;
          break;
        case Metric::kCenter:
          j["value"] = steiner::steiner_profile(g, k).center;
          break;
        case Metric::kWiener:
          j["value"] = steiner::steiner_wiener_index(g, k);
          break;
        case Metric::kAvg:
          j["value"] = steiner::to_string(steiner::average_steiner_distance(g, k));
          break;
      }
    } catch (const std::exception& e) {
      j["error"] = e.what();
      had_error.store(true);
    }
    return j.dump();
  });
}

int run_classify(const std::string& input, int jobs) {
  return stream_records(input, jobs, [&](std::size_t idx, const std::string& line,
                                         std::atomic<bool>& had_error) {
    ojson j;
    j["index"] = idx;
    j["graph6"] = line;
    try {
      Graph g = steiner::decode_graph6(line);
      steiner::ClassificationRecord r = steiner::classify(g);
      j["n"] = r.n;
      j["min_degree"] = r.min_degree;
      j["sdiam4"] = r.sdiam4;
      j["value_is_3"] = r.value_is_3;
      j["value_is_4"] = r.value_is_4.value;
      j["value_is_nminus1"] = r.value_is_nminus1;
      j["consistent"] = r.consistent;
    } catch (const std::exception& e) {
      j["error"] = e.what();
      had_error.store(true);
    }
    return j.dump();
  });
}

int run_verify(const std::string& input, int jobs, const std::string& which, int k) {
  InputStream in;
  if (!open_input(input, in)) {
    std::cerr << "steinerdiam: cannot open '" << input << "'\n";
    return 2;
  }
  auto t0 = std::chrono::steady_clock::now();
  LineSource src(*in.stream);
  std::atomic<bool> had_error{false};
  std::atomic<long long> processed{0};
  std::atomic<long long> counterexamples{0};

  bool do3 = which == "thm2" || which == "all";
  bool do4 = which == "thm3" || which == "all";
  bool doN = which == "lemma1" || which == "all";

  auto fn = [&](std::size_t, const std::string& line, std::atomic<bool>& err) -> std::string {
    std::string buf;
    try {
      Graph g = steiner::decode_graph6(line);
      int n = g.order();
      std::optional<int> sdiam4;
      auto diameter4 = [&] {
        if (!sdiam4) sdiam4 = steiner::steiner_profile(g, 4).diameter;
        return *sdiam4;
      };
      auto report = [&](const char* check, bool predicate, int sd, int target) {
        if (predicate == (sd == target)) return;
        ojson c;
        c["graph6"] = line;
        c["check"] = check;
        c["expected"] = predicate;
        c["got"] = sd == target;
        c["sdiam"] = sd;
        c["target"] = target;
        if (!buf.empty()) buf += '\n';
        buf += c.dump();
        counterexamples.fetch_add(1);
      };
      if (do3) report("thm2", steiner::predicate_sdiam4_is_3(g), diameter4(), 3);
      if (do4) report("thm3", steiner::predicate_sdiam4_is_4(g).value, diameter4(), 4);
      if (doN) {
        int sd = k == 4 ? diameter4() : steiner::steiner_profile(g, k).diameter;
        report("lemma1", steiner::predicate_sdiam_k_is_nminus1(g, k), sd, n - 1);
      }
      processed.fetch_add(1);
    } catch (const std::exception& e) {
      ojson j;
      j["graph6"] = line;
      j["error"] = e.what();
      if (!buf.empty()) buf += '\n';
      buf += j.dump();
      err.store(true);
    }
    return buf;
  };

  std::size_t base = 0;
  while (true) {
    auto chunk = next_chunk(src, kChunkLines);
    if (chunk.empty()) break;
    auto records = map_chunk(chunk, base, jobs, [&](std::size_t idx, const std::string& line) {
      return fn(idx, line, had_error);
    });
    for (const auto& r : records)
      if (!r.empty()) std::cout << r << '\n';
    base += chunk.size();
  }

  ojson summary;
  summary["graphs_processed"] = processed.load();
  summary["counterexamples"] = counterexamples.load();
  std::cout << summary.dump() << '\n';
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cerr << "verify " << which << ": " << processed.load() << " graphs, "
            << counterexamples.load() << " counterexamples, " << ms.count() << " ms\n";
  if (had_error.load()) return 2;
  return counterexamples.load() > 0 ? 1 : 0;
}

int run_generate(const std::string& family_name, int n, const std::string& params_csv, bool sweep) {
  auto family = steiner::family_from_string(family_name);
  if (!family) {
    std::cerr << "steinerdiam: unknown family '" << family_name << "'\n";
    return 2;
  }
  if (sweep == !params_csv.empty()) {
    std::cerr << "steinerdiam: give exactly one of --params and --sweep\n";
    return 2;
  }
  if (sweep) {
    std::unordered_set<std::string> seen;
    for (const auto& p : steiner::sweep_params(*family, n)) {
      std::string g6 = steiner::encode_graph6(steiner::generate_family(p));
      if (seen.insert(g6).second) std::cout << g6 << '\n';
    }
    return 0;
  }
  steiner::FamilyParams p;
  p.family = *family;
  p.n = n;
  try {
    std::vector<int> values = parse_int_csv(params_csv);
    int arity = steiner::family_arity(*family);
    if (static_cast<int>(values.size()) != arity)
      throw std::invalid_argument(std::string(steiner::family_name(*family)) + " takes " +
                                  std::to_string(arity) + " parameters");
    int* slot[4] = {&p.a, &p.b, &p.c, &p.d};
    for (int i = 0; i < arity; ++i) *slot[i] = values[i];
    if (auto bad = steiner::check_params(p)) throw std::invalid_argument(*bad);
    std::cout << steiner::encode_graph6(steiner::generate_family(p)) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "steinerdiam: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int run_oracle(const std::string& input, const std::string& terminals_csv, int max_order) {
  InputStream in;
  if (!open_input(input, in)) {
    std::cerr << "steinerdiam: cannot open '" << input << "'\n";
    return 2;
  }
  LineSource src(*in.stream);
  auto line = src.next();
  if (!line) {
    std::cerr << "steinerdiam: no graph on input\n";
    return 2;
  }
  try {
    Graph g = steiner::decode_graph6(*line);
    steiner::VertexSet terminals = parse_int_csv(terminals_csv);
    steiner::SteinerResult r = steiner::steiner_distance_oracle(g, terminals, max_order);
    if (r.reachable())
      std::cout << *r.value << '\n';
    else
      std::cout << "unreachable\n";
  } catch (const std::exception& e) {
    std::cerr << "steinerdiam: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Steiner distances and Steiner k-diameters of small graphs: "
               "metrics, extremal-value classification, verification scans, and "
               "extremal family generation over graph6 streams"};
  app.require_subcommand(1);

  std::string c_input, c_metric = "sdiam";
  int c_k = 4, c_jobs = default_jobs();
  auto* compute = app.add_subcommand("compute", "One Steiner metric per input graph");
  compute->add_option("--input", c_input, "graph6 file, '-' or absent for stdin");
  compute->add_option("--k", c_k, "terminal-set size")->check(CLI::Range(1, 62));
  compute->add_option("--metric", c_metric, "sdiam|srad|ecc|center|wiener|avg")
      ->check(CLI::IsMember({"sdiam", "srad", "ecc", "center", "wiener", "avg"}));
  compute->add_option("--jobs", c_jobs, "parallel workers")->check(CLI::PositiveNumber);

  std::string l_input;
  int l_jobs = default_jobs();
  auto* classify = app.add_subcommand(
      "classify", "Extremal-value classification record per input graph (n >= 5)");
  classify->add_option("--input", l_input, "graph6 file, '-' or absent for stdin");
  classify->add_option("--jobs", l_jobs, "parallel workers")->check(CLI::PositiveNumber);

  std::string v_input, v_which;
  int v_k = 4, v_jobs = default_jobs();
  auto* verify = app.add_subcommand(
      "verify", "Scan a stream of connected graphs for predicate/metric mismatches");
  verify->add_option("--input", v_input, "graph6 file, '-' or absent for stdin");
  verify
      ->add_option("--which", v_which,
                   "thm2 (value-3 test), thm3 (value-4 test), lemma1 (value n-1 test), or all")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "lemma1", "all"}));
  verify->add_option("--k", v_k, "terminal-set size for the value n-1 test")
      ->check(CLI::Range(3, 62));
  verify->add_option("--jobs", v_jobs, "parallel workers")->check(CLI::PositiveNumber);

  std::string g_family, g_params;
  int g_n = 0;
  bool g_sweep = false;
  auto* generate = app.add_subcommand("generate", "Emit extremal family members as graph6");
  generate->add_option("--family", g_family, "H1|H2|H3|H4|T|DELTA|DELTA_PRIME|G1|G2|G3")
      ->required();
  generate->add_option("--n", g_n, "graph order")->required()->check(CLI::Range(1, 1000000));
  generate->add_option("--params", g_params, "comma-separated a,b,c,d (as many as the family uses)");
  generate->add_flag("--sweep", g_sweep, "emit every valid parameter tuple for this order");

  std::string o_input, o_terminals;
  int o_max_n = steiner::kDefaultMaxOracleOrder;
  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force Steiner distance of one graph (reference implementation)");
  oracle->add_option("--input", o_input, "graph6 file, '-' or absent for stdin");
  oracle->add_option("--terminals", o_terminals, "comma-separated vertex list")->required();
  oracle->add_option("--max-oracle-n", o_max_n, "refuse graphs larger than this")
      ->check(CLI::Range(1, 62));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*compute) return run_compute(c_input, c_jobs, c_k, c_metric);
  if (*classify) return run_classify(l_input, l_jobs);
  if (*verify) return run_verify(v_input, v_jobs, v_which, v_k);
  if (*generate) return run_generate(g_family, g_n, g_params, g_sweep);
  if (*oracle) return run_oracle(o_input, o_terminals, o_max_n);
  return 2;
}
