#include "sntrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "sntrank/errors.hpp"

namespace sntrank {

std::string_view type_name(VertexType t) {
  switch (t) {
    case VertexType::kA: return "A";
    case VertexType::kB: return "B";
    case VertexType::kC: return "C";
    case VertexType::kUntyped: return "untyped";
  }
  return "untyped";
}

std::vector<VertexSet> SetJoinCover::components() const {
  std::vector<VertexSet> out;
  for (const auto& j : joins) {
    out.push_back(j.k);
    out.push_back(j.l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using JoinKey = std::pair<VertexSet, VertexSet>;  // first <= second

JoinKey key_of(const VertexSet& a, const VertexSet& b) {
  return a <= b ? JoinKey{a, b} : JoinKey{b, a};
}

std::string edge_str(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

void check_set(const SimpleGraph& g, const VertexSet& s) {
  if (s.empty()) throw InvalidCover("empty component");
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InvalidCover("component is not a sorted set");
  }
  if (s.back() >= g.n()) throw InvalidCover("component vertex out of range");
}

std::vector<VertexType> classify(const SimpleGraph& g, const SetJoinCover& c,
                                 const CoverAnalysis& a) {
  std::set<JoinKey> all;
  for (const auto& j : c.joins) all.insert(key_of(j.k, j.l));
  std::vector<VertexType> types(g.n(), VertexType::kUntyped);
  for (Vertex x = 0; x < g.n(); ++x) {
    std::set<JoinKey> at_x;
    for (const auto& k : all) {
      if (contains(k.first, x) || contains(k.second, x)) at_x.insert(k);
    }
    const VertexSet sx{x};
    const auto& n1 = a.n1[x];
    const auto& ns = a.nstar[x];
    std::set<JoinKey> singles;
    for (Vertex v : n1) singles.insert(key_of(sx, VertexSet{v}));
    if (ns.size() >= 2) {
      auto want = singles;
      want.insert(key_of(sx, ns));
      if (at_x == want) {
        types[x] = VertexType::kA;
        continue;
      }
    }
    if (ns.empty() && at_x == singles) {
      types[x] = VertexType::kB;
      continue;
    }
    if (!contains(a.v1, x)) {
      std::set<JoinKey> want;
      for (Vertex v : g.closed_neighborhood(x)) want.insert(key_of(a.nstar[v], VertexSet{v}));
      if (at_x == want) types[x] = VertexType::kC;
    }
  }
  return types;
}

}  // namespace

CoverAnalysis validate_cover(const SimpleGraph& g, const SetJoinCover& c) {
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const auto& j : c.joins) {
    check_set(g, j.k);
    check_set(g, j.l);
    for (Vertex a : j.k) {
      for (Vertex b : j.l) {
        if (!g.adjacent(a, b)) {
          throw InvalidCover("join produces non-edge " + edge_str(std::min(a, b), std::max(a, b)));
        }
        covered.emplace(std::min(a, b), std::max(a, b));
      }
    }
  }
  for (auto e : g.edges()) {
    if (!covered.count(e)) throw InvalidCover("edge " + edge_str(e.first, e.second) + " uncovered");
  }
  CoverAnalysis a;
  a.components = c.components();
  a.order = a.components.size();
  for (const auto& s : a.components) {
    if (s.size() == 1) a.v1.push_back(s[0]);
  }
  a.n1.resize(g.n());
  a.nstar.resize(g.n());
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex v : g.closed_neighborhood(x)) {
      (contains(a.v1, v) ? a.n1[x] : a.nstar[x]).push_back(v);
    }
  }
  a.types = classify(g, c, a);
  return a;
}

std::vector<VertexType> classify_types(const SimpleGraph& g, const SetJoinCover& c) {
  return validate_cover(g, c).types;
}

SetJoinCover abc_normalize(const SimpleGraph& g, const SetJoinCover& c) {
  if (auto bad = first_square_violation(g)) {
    throw NotInFamily("vertices " + std::to_string(bad->first) + " and " +
                      std::to_string(bad->second) + " share two closed neighbours");
  }
  validate_cover(g, c);
  std::set<JoinKey> joins;
  for (const auto& j : c.joins) joins.insert(key_of(j.k, j.l));
  bool touched = false;
  for (bool changed = true; changed;) {
    changed = false;
    SetJoinCover cur;
    for (const auto& [k, l] : joins) cur.joins.push_back({k, l});
    const CoverAnalysis a = validate_cover(g, cur);
    for (Vertex x : a.v1) {
      const VertexSet sx{x};
      std::set<JoinKey> at_x;
      bool wide = false;
      for (const auto& k : joins) {
        if (k.first == sx || k.second == sx) {
          at_x.insert(k);
          const auto& other = (k.first == sx) ? k.second : k.first;
          wide = wide || other.size() >= 2;
        }
      }
      if (!wide) continue;
      std::set<JoinKey> want;
      if (!a.nstar[x].empty()) want.insert(key_of(sx, a.nstar[x]));
      for (Vertex v : a.n1[x]) want.insert(key_of(sx, VertexSet{v}));
      if (want == at_x) continue;
      for (const auto& k : at_x) joins.erase(k);
      joins.insert(want.begin(), want.end());
      changed = touched = true;
      break;
    }
  }
  if (!touched) return c;
  SetJoinCover out;
  for (const auto& [k, l] : joins) out.joins.push_back({k, l});
  validate_cover(g, out);
  return out;
}

namespace {

using Set = std::uint32_t;    // vertex subset
using Edges = std::uint64_t;  // subset of the edge list

class CoverSearch {
 public:
  explicit CoverSearch(const SimpleGraph& g) : n_(g.n()), adj_(n_, 0), edge_id_(n_ * n_, -1) {
    for (auto [a, b] : g.edges()) {
      edge_id_[a * n_ + b] = edge_id_[b * n_ + a] = static_cast<int>(edges_.size());
      edges_.emplace_back(a, b);
      adj_[a] |= Set{1} << b;
      adj_[b] |= Set{1} << a;
    }
    all_ = edges_.size() == 64 ? ~Edges{0} : ((Edges{1} << edges_.size()) - 1);
    cn_.assign(std::size_t{1} << n_, 0);
    const Set full = (Set{1} << n_) - 1;
    for (Set s = 1; s <= full; ++s) {
      const Set low = s & (~s + 1);
      const Set rest = s & (s - 1);
      cn_[s] = adj_[std::countr_zero(low)] & (rest ? cn_[rest] : full);
    }
    options_.resize(edges_.size());
    for (Set k = 1; k <= full; ++k) {
      if (!cn_[k]) continue;
      for (Set l = cn_[k]; l; l = (l - 1) & cn_[k]) {
        const Edges cov = join_edges(k, l);
        for (Edges f = cov; f; f &= f - 1) {
          const int e = std::countr_zero(f);
          // Register each unordered join once per edge it covers.
          if (k <= l) options_[e].push_back({k, l, cov});
        }
      }
    }
  }

  OracleResult solve() {
    OracleResult r;
    if (edges_.empty()) return r;
    Set used = 0;
    for (auto [a, b] : edges_) used |= (Set{1} << a) | (Set{1} << b);
    const int upper = std::popcount(used);
    // Any nonempty edge set needs at least one component; a looped pair
    // sharing all neighbours reaches that bound.
    for (int t = 1; t <= upper; ++t) {
      seen_.clear();
      std::vector<Set> fam;
      if (dfs(fam, 0, t)) {
        r.stp = static_cast<long>(best_.size());
        r.witness = realize(best_);
        return r;
      }
    }
    throw ResourceLimit("oracle search exhausted without a cover");
  }

 private:
  struct Option {
    Set k, l;
    Edges cov;
  };

  Edges join_edges(Set k, Set l) const {
    Edges e = 0;
    for (Set a = k; a; a &= a - 1) {
      for (Set b = l; b; b &= b - 1) {
        e |= Edges{1} << edge_id_[std::countr_zero(a) * n_ + std::countr_zero(b)];
      }
    }
    return e;
  }

  bool valid(Set k, Set l) const { return (l & ~cn_[k]) == 0; }

  Edges closure_gain(const std::vector<Set>& fam, Set x) const {
    Edges e = 0;
    if (valid(x, x)) e |= join_edges(x, x);
    for (Set y : fam) {
      if (valid(x, y)) e |= join_edges(x, y);
    }
    return e;
  }

  bool dfs(std::vector<Set>& fam, Edges covered, int t) {
    if (covered == all_) {
      best_ = fam;
      return true;
    }
    if (static_cast<int>(fam.size()) >= t) return false;
    std::vector<Set> key = fam;
    std::sort(key.begin(), key.end());
    if (!seen_.insert(key).second) return false;

    int pick = -1;
    for (Edges f = all_ & ~covered; f; f &= f - 1) {
      const int e = std::countr_zero(f);
      if (pick < 0 || options_[e].size() < options_[pick].size()) pick = e;
    }
    auto has = [&fam](Set s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
    struct Move {
      int fresh;
      int gain;
      Set k, l;
    };
    std::vector<Move> moves;
    for (const auto& o : options_[pick]) {
      const int fresh = (has(o.k) ? 0 : 1) + ((o.l != o.k && !has(o.l)) ? 1 : 0);
      if (static_cast<int>(fam.size()) + fresh > t) continue;
      moves.push_back({fresh, std::popcount(o.cov & ~covered), o.k, o.l});
    }
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return a.fresh != b.fresh ? a.fresh < b.fresh : a.gain > b.gain;
    });
    for (const auto& m : moves) {
      const std::size_t mark = fam.size();
      Edges cov = covered;
      for (Set x : {m.k, m.l}) {
        if (has(x)) continue;
        fam.push_back(x);
        cov |= closure_gain(fam, x);
      }
      if (dfs(fam, cov, t)) return true;
      fam.resize(mark);
    }
    return false;
  }

  // Every valid join among the chosen components, then drop redundant ones.
  SetJoinCover realize(const std::vector<Set>& fam) const {
    std::vector<Option> js;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i; j < fam.size(); ++j) {
        if (valid(fam[i], fam[j])) js.push_back({fam[i], fam[j], join_edges(fam[i], fam[j])});
      }
    }
    for (std::size_t i = 0; i < js.size();) {
      Edges rest = 0;
      for (std::size_t j = 0; j < js.size(); ++j) {
        if (j != i) rest |= js[j].cov;
      }
      if (rest == all_) {
        js.erase(js.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    auto to_set = [](Set s) {
      VertexSet v;
      for (; s; s &= s - 1) v.push_back(static_cast<Vertex>(std::countr_zero(s)));
      return v;
    };
    SetJoinCover c;
    for (const auto& o : js) {
      VertexSet a = to_set(o.k);
      VertexSet b = to_set(o.l);
      if (b < a) std::swap(a, b);
      c.joins.push_back({std::move(a), std::move(b)});
    }
    std::sort(c.joins.begin(), c.joins.end(), [](const SetJoin& x, const SetJoin& y) {
      return std::tie(x.k, x.l) < std::tie(y.k, y.l);
    });
    return c;
  }

  std::size_t n_;
  std::vector<Set> adj_;
  std::vector<int> edge_id_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  Edges all_ = 0;
  std::vector<Set> cn_;
  std::vector<std::vector<Option>> options_;
  std::set<std::vector<Set>> seen_;
  std::vector<Set> best_;
};

}  // namespace

OracleResult stp_bruteforce(const SimpleGraph& g, std::size_t max_n) {
  const std::size_t cap = std::min(max_n, kOracleMaxN);
  if (g.n() > cap) {
    throw ResourceLimit("oracle limited to " + std::to_string(cap) + " vertices, got " +
                        std::to_string(g.n()));
  }
  return CoverSearch(g).solve();
}

}  // namespace sntrank
