#include "sntrank/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sntrank/engine.hpp"
#include "sntrank/errors.hpp"
#include "sntrank/families.hpp"
#include "sntrank/io.hpp"
#include "sntrank/oracle.hpp"
#include "sntrank/reductions.hpp"
#include "sntrank/transforms.hpp"

namespace sntrank {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string dot_dir;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string file;
  std::string family;
  bool trace = false;
  std::size_t max_n = 8;
  std::size_t sample_n = 7;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ExitCode::kParse, what) {}
};

struct Input {
  AnyGraph graph;
  std::string label;
};

Input load(const Options& o) {
  if (o.file.empty() == o.family.empty()) {
    throw UsageError("give exactly one of <file> or --family name:params");
  }
  if (!o.family.empty()) return {generate(FamilySpec::parse(o.family)), o.family};
  return {read_graph_file(o.file), o.file};
}

const SimpleGraph& want_simple(const Input& in, const char* cmd) {
  if (const auto* g = std::get_if<SimpleGraph>(&in.graph)) return *g;
  throw UsageError(std::string(cmd) + " expects a simple graph");
}

const WeightedMultigraph& want_multi(const Input& in, const char* cmd) {
  if (const auto* g = std::get_if<WeightedMultigraph>(&in.graph)) return *g;
  throw UsageError(std::string(cmd) + " expects a multigraph");
}

// Simple graphs are read as all-0-weight multigraphs.
WeightedMultigraph multi_view(const Input& in) {
  if (const auto* g = std::get_if<WeightedMultigraph>(&in.graph)) return *g;
  return as_zero_weight(std::get<SimpleGraph>(in.graph));
}

json trace_json(const ReductionTrace& trace) {
  json a = json::array();
  for (const auto& s : trace) {
    a.push_back({{"op", std::string(op_name(s.op))},
                 {"t_delta", s.t_delta},
                 {"vertices_before", s.vertices_before},
                 {"vertices_after", s.vertices_after}});
  }
  return a;
}

void print_trace(std::ostream& out, const ReductionTrace& trace, const char* prefix) {
  for (const auto& s : trace) {
    out << prefix << "step " << op_name(s.op) << " t_delta " << s.t_delta << " vertices "
        << s.vertices_before << " -> " << s.vertices_after << '\n';
  }
}

json result_json(const std::string& input, const GapResult& r) {
  return {{"input", input},
          {"method", std::string(method_name(r.method))},
          {"gap", r.gap},
          {"stp", r.stp},
          {"t", r.t},
          {"trace", trace_json(r.trace)}};
}

class DotWriter {
 public:
  explicit DotWriter(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  template <typename G>
  void write(const std::string& stem, const G& g) {
    if (dir_.empty()) return;
    std::ofstream f(std::filesystem::path(dir_) / (stem + ".dot"));
    if (!f) throw Error(ExitCode::kFailure, "cannot write DOT file in '" + dir_ + "'");
    f << to_dot(g, "G");
  }

  void write_trace(const ReductionTrace& trace) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& s = trace[i];
      if (s.op == Op::kLeafPair || s.op == Op::kTwin || s.op == Op::kPendantC4) continue;
      char stem[64];
      std::snprintf(stem, sizeof stem, "step_%02zu_%s", i + 1, std::string(op_name(s.op)).c_str());
      write(stem, s.snapshot);
    }
  }

 private:
  std::string dir_;
};

EngineConfig engine_config(const Options& o) {
  EngineConfig cfg;
  unsigned threads = o.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("SNTRANK_THREADS")) threads = static_cast<unsigned>(std::atoi(env));
  }
  cfg.threads = threads == 0 ? 1 : threads;
  return cfg;
}

int cmd_gap(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const SimpleGraph& g = want_simple(in, "gap");
  DotWriter dot(o.dot_dir);
  dot.write("input", g);
  const GapResult r = GapEngine(engine_config(o)).gap(g);
  dot.write_trace(r.trace);
  if (o.format == "json") {
    out << result_json(in.label, r).dump(2) << '\n';
  } else {
    out << "gap " << r.gap << " stp " << r.stp << '\n';
    if (o.trace) print_trace(out, r.trace, "");
  }
  return 0;
}

int cmd_gapstar(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const WeightedMultigraph g = multi_view(in);
  DotWriter dot(o.dot_dir);
  dot.write("input", g);
  const GapResult r = GapEngine(engine_config(o)).gap_star(g);
  dot.write_trace(r.trace);
  if (o.format == "json") {
    out << result_json(in.label, r).dump(2) << '\n';
  } else {
    out << "gapstar " << r.gap << " t " << r.t << '\n';
    if (o.trace) print_trace(out, r.trace, "");
  }
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const SimpleGraph& g = want_simple(in, "stp-oracle");
  const OracleResult r = stp_bruteforce(g, o.max_n);
  validate_cover(g, r.witness);
  if (o.format == "json") {
    json w = json::array();
    for (const auto& j : r.witness.joins) w.push_back({j.k, j.l});
    GapResult gr;
    gr.gap = static_cast<long>(g.n()) - r.stp;
    gr.stp = r.stp;
    gr.method = Method::kOracle;
    json j = result_json(in.label, gr);
    j["witness"] = w;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "stp " << r.stp << '\n';
  auto set_str = [](const VertexSet& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
    return t + "}";
  };
  for (const auto& j : r.witness.joins) out << "join " << set_str(j.k) << ' ' << set_str(j.l) << '\n';
  return 0;
}

int cmd_kappa(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const KappaResult k = kappa(want_simple(in, "kappa"), false);
  DotWriter(o.dot_dir).write("output", k.gamma);
  if (o.format == "json") {
    out << json{{"input", in.label}, {"dropped_cycles", k.dropped_cycles},
                {"graph", serialize(k.gamma)}}.dump(2)
        << '\n';
  } else {
    out << "# dropped_cycles " << k.dropped_cycles << '\n' << serialize(k.gamma);
  }
  return 0;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const SimpleGraph s = zeta(want_multi(in, "zeta"));
  DotWriter(o.dot_dir).write("output", s);
  if (o.format == "json") {
    out << json{{"input", in.label}, {"graph", serialize(s)}}.dump(2) << '\n';
  } else {
    out << serialize(s);
  }
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const WeightedMultigraph g = multi_view(in);
  DotWriter dot(o.dot_dir);
  dot.write("input", g);
  const TauResult r = tau(g);
  dot.write_trace(r.trace);
  dot.write("output", r.reduced);
  if (o.format == "json") {
    out << json{{"input", in.label}, {"method", "tau"}, {"t", r.t},
                {"graph", serialize(r.reduced)}, {"trace", trace_json(r.trace)}}.dump(2)
        << '\n';
  } else {
    out << "t " << r.t << '\n';
    if (o.trace) print_trace(out, r.trace, "# ");
    out << serialize(r.reduced);
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Input in = load(o);
  const auto bad = first_square_violation(want_simple(in, "check"));
  if (o.format == "json") {
    json j = {{"input", in.label}, {"in_family", !bad}};
    if (bad) j["violation"] = {bad->first, bad->second};
    out << j.dump(2) << '\n';
  } else if (bad) {
    out << "in_family no\nviolation " << bad->first << ' ' << bad->second << '\n';
  } else {
    out << "in_family yes\n";
  }
  return bad ? static_cast<int>(ExitCode::kNotSupported) : 0;
}

int cmd_alpha(const Options& o, std::ostream& out, bool bound) {
  const Input in = load(o);
  const WeightedMultigraph g = multi_view(in);
  const long v = bound ? lower_bound(g) : alpha(g);
  const char* key = bound ? "bound" : "alpha";
  if (o.format == "json") {
    out << json{{"input", in.label}, {key, v}}.dump(2) << '\n';
  } else {
    out << key << ' ' << v << '\n';
  }
  return 0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  out << "# seed " << o.seed << '\n' << serialize(sample_family_graph(o.sample_n, rng));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gap and SNT-rank tools for graphs with loops and weighted multigraphs", "sntrank"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dot", o.dot_dir, "Write per-step DOT files into this directory");
  app.add_option("--seed", o.seed, "Seed for sampling");
  app.add_option("--threads", o.threads, "Worker threads (default: $SNTRANK_THREADS or 1)");

  auto input = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "Graph file");
    sub->add_option("--family", o.family, "Generated input, name:k1,k2,...");
  };
  auto* gap = app.add_subcommand("gap", "gap and stp of a simple graph");
  input(gap);
  gap->add_flag("--trace", o.trace, "Print the reduction trace");
  auto* gapstar = app.add_subcommand("gapstar", "gap* of a weighted multigraph");
  input(gapstar);
  gapstar->add_flag("--trace", o.trace, "Print the reduction trace");
  auto* oracle = app.add_subcommand("stp-oracle", "exact stp by exhaustive cover search");
  input(oracle);
  oracle->add_option("--max-n", o.max_n, "Largest accepted vertex count");
  auto* kap = app.add_subcommand("kappa", "compress degree-2 chains into a weighted multigraph");
  input(kap);
  auto* zet = app.add_subcommand("zeta", "expand a weighted multigraph into a simple graph");
  input(zet);
  auto* red = app.add_subcommand("reduce", "apply the reduction fixed point and report t");
  input(red);
  red->add_flag("--trace", o.trace, "Print the reduction trace");
  auto* chk = app.add_subcommand("check", "family membership and first violating pair");
  input(chk);
  auto* alp = app.add_subcommand("alpha", "independence number");
  input(alp);
  auto* bnd = app.add_subcommand("bound", "independence lower bound on gap*");
  input(bnd);
  auto* smp = app.add_subcommand("sample", "random square-free graph from --seed");
  smp->add_option("--n", o.sample_n, "Vertex count");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kParse);
  }
  try {
    if (gap->parsed()) return cmd_gap(o, out);
    if (gapstar->parsed()) return cmd_gapstar(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (kap->parsed()) return cmd_kappa(o, out);
    if (zet->parsed()) return cmd_zeta(o, out);
    if (red->parsed()) return cmd_reduce(o, out);
    if (chk->parsed()) return cmd_check(o, out);
    if (alp->parsed()) return cmd_alpha(o, out, false);
    if (bnd->parsed()) return cmd_alpha(o, out, true);
    if (smp->parsed()) return cmd_sample(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kFailure);
  }
  return static_cast<int>(ExitCode::kParse);
}

}  // namespace sntrank
