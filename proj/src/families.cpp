#include "sntrank/families.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "sntrank/errors.hpp"

namespace sntrank {

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec s;
  const auto colon = text.find(':');
  s.name = std::string(text.substr(0, colon));
  if (s.name.empty()) throw InvalidArgument("empty family name");
  if (colon == std::string_view::npos) return s;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw InvalidArgument("bad family parameter '" + std::string(tok) + "'");
    }
    s.params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return s;
}

std::string FamilySpec::to_string() const {
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(params[i]);
  }
  return out;
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::size_t arg(const FamilySpec& s, std::size_t i, int min) {
  need(i < s.params.size(), s.name + ": missing parameter " + std::to_string(i + 1));
  need(s.params[i] >= min, s.name + ": parameter " + std::to_string(i + 1) + " must be >= " +
                               std::to_string(min));
  return static_cast<std::size_t>(s.params[i]);
}

void arity(const FamilySpec& s, std::size_t n) {
  need(s.params.size() == n, s.name + " takes " + std::to_string(n) + " parameter(s)");
}

struct CloverShape {
  std::size_t f = 0;
  std::vector<int> even, odd;
};

CloverShape clover_shape(const FamilySpec& s) {
  need(s.params.size() >= 3, "clover takes f,e,o[,lengths]");
  CloverShape c;
  c.f = arg(s, 0, 0);
  const std::size_t e = arg(s, 1, 0);
  const std::size_t o = arg(s, 2, 0);
  need(c.f + e + o >= 1, "clover needs f+e+o >= 1");
  if (s.params.size() == 3) {
    c.even.assign(e, 6);
    c.odd.assign(o, 3);
  } else {
    need(s.params.size() == 3 + e + o, "clover lengths: give e even then o odd lengths");
    c.even.assign(s.params.begin() + 3, s.params.begin() + 3 + static_cast<long>(e));
    c.odd.assign(s.params.begin() + 3 + static_cast<long>(e), s.params.end());
  }
  return c;
}

}  // namespace

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  need(n >= 3, "cycle needs n >= 3");
  SimpleGraph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph complete_bipartite(std::size_t m, std::size_t n) {
  SimpleGraph g(m + n);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) g.add_edge(i, static_cast<Vertex>(m + j));
  }
  return g;
}

SimpleGraph wheel_graph(std::size_t n) {
  need(n >= 4, "wheel needs n >= 4");
  SimpleGraph g = cycle_graph(n - 1);
  const Vertex hub = g.add_vertex();
  for (Vertex i = 0; i < hub; ++i) g.add_edge(i, hub);
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

SimpleGraph gstar_graph(const std::vector<int>& lengths) {
  SimpleGraph g(1);
  for (int len : lengths) {
    need(len >= 1, "gstar path lengths must be >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      const Vertex x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
  }
  return g;
}

SimpleGraph garlic_graph(const std::vector<int>& internal) {
  need(internal.size() >= 2, "garlic needs at least two paths");
  SimpleGraph g(2);
  for (int k : internal) {
    need(k >= 2, "garlic paths need >= 2 internal vertices");
    Vertex prev = 0;
    for (int i = 0; i < k; ++i) {
      const Vertex x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

SimpleGraph clover_graph(std::size_t f, const std::vector<int>& even_lengths,
                         const std::vector<int>& odd_lengths) {
  std::vector<int> lengths(f, 4);
  for (int l : even_lengths) {
    need(l >= 6 && l % 2 == 0, "clover even cycles must have even length >= 6");
    lengths.push_back(l);
  }
  for (int l : odd_lengths) {
    need(l >= 3 && l % 2 == 1, "clover odd cycles must have odd length >= 3");
    lengths.push_back(l);
  }
  need(!lengths.empty(), "clover needs at least one cycle");
  SimpleGraph g(1);
  for (int len : lengths) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      const Vertex x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 0);
  }
  return g;
}

WeightedMultigraph planar_example(std::size_t k) {
  need(k >= 1, "planar_example needs k >= 1");
  // 0 = x, 1 = y, then z_{i,j} at 2 + 3j + (i - 1).
  WeightedMultigraph g(3 * k + 2);
  auto z = [](std::size_t i, std::size_t j) { return static_cast<Vertex>(2 + 3 * j + (i - 1)); };
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 1; i <= 3; ++i) g.add_edge(0, z(i, j), Weight::kZero);
    g.add_edge(1, z(1, j), Weight::kZero);
    g.add_edge(1, z(3, j), Weight::kZero);
    g.add_edge(z(1, j), z(2, j), Weight::kZero);
    g.add_edge(z(2, j), z(3, j), Weight::kZero);
  }
  return g;
}

WeightedMultigraph fig4_kappa() {
  enum : Vertex { a, b, c, d, e, f };
  WeightedMultigraph g(6);
  g.add_edge(a, b, Weight::kZero);
  g.add_edge(a, c, Weight::kOne);
  g.add_edge(a, c, Weight::kOne);
  g.add_edge(c, d, Weight::kOne);
  g.add_edge(b, d, Weight::kOne);
  g.add_edge(b, d, Weight::kOne);
  g.add_edge(b, e, Weight::kOne);
  g.add_edge(c, f, Weight::kZero);
  g.add_edge(a, a, Weight::kZero);
  g.add_edge(c, c, Weight::kOne);
  return g;
}

WeightedMultigraph fig13_gamma() {
  // Four blocks: a 6-vertex tree of 1-edges (L*, R*), a 5-vertex block with
  // eight 1-edges (D*), a 4-vertex block with five (P*), and the chain B0..B3.
  enum : Vertex {
    Lt, Lm, Lb, Rt, Rm, Rb,
    Dt, Drt, Drb, Db, Dm,
    Pm, Pr, Pt, Pb,
    B0, B1, B2, B3,
    kCount
  };
  WeightedMultigraph g(kCount);
  const auto one = Weight::kOne;
  const auto zero = Weight::kZero;
  for (auto [u, v] : {std::pair{Lt, Lm}, {Lm, Lb}, {Rt, Rm}, {Rm, Rb}, {Lm, Rm}}) {
    g.add_edge(u, v, one);
  }
  for (auto [u, v] : {std::pair{Lb, Rm}, {Lm, Rb}, {Lb, Rb}}) g.add_edge(u, v, zero);

  for (auto [u, v] : {std::pair{Dt, Drt}, {Drt, Drb}, {Drb, Db}, {Db, Dm}, {Dm, Dt}, {Dm, Dt},
                      {Dt, Dt}, {Db, Db}}) {
    g.add_edge(u, v, one);
  }
  for (auto [u, v] : {std::pair{Dm, Db}, {Drt, Drb}}) g.add_edge(u, v, zero);

  for (auto [u, v] : {std::pair{Pm, Pr}, {Pr, Pt}, {Pt, Pm}, {Pm, Pb}, {Pt, Pt}}) {
    g.add_edge(u, v, one);
  }
  for (auto [u, v] : {std::pair{Pr, Pr}, {Pb, Pb}}) g.add_edge(u, v, zero);

  g.add_edge(B3, B3, one);
  for (auto [u, v] : {std::pair{B3, B3}, {B2, B2}, {B0, B1}, {B1, B2}, {B2, B3}, {Lt, B0},
                      {B0, Rt}, {Lt, B1}, {B1, Rt}, {Dt, B2}, {Pt, B3}, {Rb, Db}, {Rm, Dm},
                      {B2, Dm}}) {
    g.add_edge(u, v, zero);
  }
  return g;
}

WeightedMultigraph p2oo_weighted() {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, Weight::kZero);
  g.add_edge(0, 0, Weight::kZero);
  g.add_edge(1, 1, Weight::kZero);
  return g;
}

AnyGraph generate(const FamilySpec& s) {
  const auto& n = s.name;
  if (n == "path") { arity(s, 1); return path_graph(arg(s, 0, 1)); }
  if (n == "cycle") { arity(s, 1); return cycle_graph(arg(s, 0, 3)); }
  if (n == "complete") { arity(s, 1); return complete_graph(arg(s, 0, 1)); }
  if (n == "complete_bipartite") {
    arity(s, 2);
    return complete_bipartite(arg(s, 0, 1), arg(s, 1, 1));
  }
  if (n == "wheel") { arity(s, 1); return wheel_graph(arg(s, 0, 4)); }
  if (n == "petersen") { arity(s, 0); return petersen_graph(); }
  if (n == "gstar") {
    need(!s.params.empty(), "gstar needs path lengths");
    return gstar_graph(s.params);
  }
  if (n == "garlic") return garlic_graph(s.params);
  if (n == "clover") {
    const auto c = clover_shape(s);
    return clover_graph(c.f, c.even, c.odd);
  }
  if (n == "planar_example") { arity(s, 1); return planar_example(arg(s, 0, 1)); }
  if (n == "fig4_kappa") { arity(s, 0); return fig4_kappa(); }
  if (n == "fig13_gamma") { arity(s, 0); return fig13_gamma(); }
  if (n == "p2oo_weighted") { arity(s, 0); return p2oo_weighted(); }
  throw InvalidArgument("unknown family '" + n + "'");
}

std::optional<long> expected_gap(const FamilySpec& s) {
  generate(s);  // validates parameters
  const auto& n = s.name;
  const auto& p = s.params;
  if (n == "path") return p[0] % 2;
  if (n == "cycle") return p[0] == 4 ? 2 : 0;
  if (n == "complete_bipartite") return p[0] + p[1] - 2;
  if (n == "petersen") return 0;
  if (n == "wheel" && p[0] == 5) return 2;
  if (n == "complete" && p[0] <= 3) return p[0] == 1 ? 1 : 0;
  if (n == "garlic") {
    const long odd = std::count_if(p.begin(), p.end(), [](int k) { return k % 2 == 1; });
    return std::max(odd - 2, 0L);
  }
  if (n == "clover") {
    const auto c = clover_shape(s);
    const long f = static_cast<long>(c.f);
    const long e = static_cast<long>(c.even.size());
    const long o = static_cast<long>(c.odd.size());
    return e + o >= 1 ? f + std::max(0L, e - 1) : f + 1;
  }
  return std::nullopt;
}

std::optional<long> expected_gap_star(const FamilySpec& s) {
  generate(s);
  const auto& n = s.name;
  const auto& p = s.params;
  if (n == "complete_bipartite") return std::abs(p[0] - p[1]);
  if (n == "complete" && p[0] >= 2) return 0;
  if (n == "petersen") return 0;
  if (n == "planar_example" && p[0] >= 2) return p[0] - 2;
  if (n == "fig4_kappa") return 3;
  if (n == "fig13_gamma") return 4;
  if (n == "p2oo_weighted") return 0;
  return std::nullopt;
}

SimpleGraph sample_family_graph(std::size_t n, std::mt19937_64& rng, double edge_p,
                                double loop_p) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution take_edge(edge_p), take_loop(loop_p);
  SimpleGraph g(n);
  for (auto [u, v] : pairs) {
    if (!(u == v ? take_loop(rng) : take_edge(rng))) continue;
    SimpleGraph trial = g;
    trial.add_edge(u, v);
    if (is_no_square(trial)) g = std::move(trial);
  }
  return g;
}

SimpleGraph sample_forest(std::size_t n, std::mt19937_64& rng, double edge_p) {
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&root](Vertex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution take(edge_p);
  SimpleGraph g(n);
  for (auto [u, v] : pairs) {
    const Vertex a = find(u);
    const Vertex b = find(v);
    if (a == b || !take(rng)) continue;
    root[a] = b;
    g.add_edge(u, v);
  }
  return g;
}

WeightedMultigraph sample_multigraph(std::size_t n, std::size_t m, std::mt19937_64& rng,
                                     double loop_p, double one_p) {
  need(n >= 1 || m == 0, "edges need vertices");
  WeightedMultigraph g(n);
  std::uniform_int_distribution<Vertex> pick(0, n == 0 ? 0 : static_cast<Vertex>(n - 1));
  std::bernoulli_distribution loop(loop_p), one(one_p);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = pick(rng);
    Vertex v = u;
    if (n > 1 && !loop(rng)) {
      while (v == u) v = pick(rng);
    }
    g.add_edge(u, v, one(rng) ? Weight::kOne : Weight::kZero);
  }
  return g;
}

}  // namespace sntrank
