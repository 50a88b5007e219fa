// Canonical labelling by colour refinement plus individualisation.
//
// Colours are always ranks of sorted signatures, so every colouring computed
// along a branch is invariant under isomorphisms fixing the individualised
// prefix. The code of a discrete colouring is compared lexicographically and
// the minimum over the search tree is canonical.

#include <algorithm>
#include <tuple>

#include "sntrank/errors.hpp"
#include "sntrank/multigraph.hpp"

namespace sntrank {

namespace {

struct Counts {
  std::uint16_t m0 = 0;
  std::uint16_t m1 = 0;
  bool operator==(const Counts&) const = default;
  auto operator<=>(const Counts&) const = default;
};

class Canonizer {
 public:
  explicit Canonizer(const WeightedMultigraph& g) : n_(g.n()), m_(n_ * n_), nbrs_(n_) {
    for (const auto& e : g.edges()) {
      bump(e.u, e.v, e.w);
      if (!e.is_loop()) bump(e.v, e.u, e.w);
    }
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u = 0; u < n_; ++u) {
        if (u != v && at(v, u) != Counts{}) nbrs_[v].push_back(u);
      }
    }
  }

  CanonicalForm run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    CanonicalForm out;
    out.order = best_order_;
    out.code = best_code_;
    return out;
  }

 private:
  void bump(Vertex a, Vertex b, Weight w) {
    auto& c = m_[a * n_ + b];
    auto& slot = (w == Weight::kZero) ? c.m0 : c.m1;
    if (slot == 0xFFFF) throw ResourceLimit("edge multiplicity exceeds canonical code range");
    ++slot;
  }

  const Counts& at(Vertex a, Vertex b) const { return m_[a * n_ + b]; }

  static int count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& colors) const {
    using Sig = std::tuple<int, Counts, std::vector<std::tuple<int, Counts>>>;
    int classes = count_classes(colors);
    for (;;) {
      std::vector<Sig> sigs(n_);
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::tuple<int, Counts>> nb;
        nb.reserve(nbrs_[v].size());
        for (Vertex u : nbrs_[v]) nb.emplace_back(colors[u], at(v, u));
        std::sort(nb.begin(), nb.end());
        sigs[v] = Sig{colors[v], at(v, v), std::move(nb)};
      }
      std::vector<Sig> uniq = sigs;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (Vertex v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) -
                                     uniq.begin());
      }
      const int now = static_cast<int>(uniq.size());
      if (now == classes) return;
      classes = now;
    }
  }

  // Transposing u and v is an automorphism of the weighted multigraph.
  bool structural_twins(Vertex u, Vertex v) const {
    if (at(u, u) != at(v, v)) return false;
    for (Vertex x = 0; x < n_; ++x) {
      if (x == u || x == v) continue;
      if (at(u, x) != at(v, x)) return false;
    }
    return true;
  }

  std::string encode(const std::vector<Vertex>& order) const {
    std::string code;
    auto put16 = [&code](std::size_t x) {
      code.push_back(static_cast<char>((x >> 8) & 0xFF));
      code.push_back(static_cast<char>(x & 0xFF));
    };
    put16(n_);
    for (std::size_t j = 0; j < order.size(); ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        const auto& c = at(order[i], order[j]);
        put16(c.m0);
        put16(c.m1);
      }
    }
    return code;
  }

  void search(const std::vector<int>& colors) {
    // Smallest colour whose cell is not a singleton.
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      std::vector<Vertex> order(n_);
      for (Vertex v = 0; v < n_; ++v) order[colors[v]] = v;
      std::string code = encode(order);
      if (best_code_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(),
                      [&](Vertex t) { return structural_twins(t, v); })) {
        continue;
      }
      tried.push_back(v);
      std::vector<int> next(n_);
      for (Vertex x = 0; x < n_; ++x) {
        next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
      }
      refine(next);
      search(next);
    }
  }

  std::size_t n_;
  std::vector<Counts> m_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::string best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const WeightedMultigraph& g, std::size_t max_n) {
  if (g.n() > max_n) {
    throw ResourceLimit("canonical form limited to " + std::to_string(max_n) + " vertices");
  }
  return Canonizer(g).run();
}

std::string canonical_code(const WeightedMultigraph& g, std::size_t max_n) {
  return canonical_form(g, max_n).code;
}

std::string canonical_code(const SimpleGraph& g, std::size_t max_n) {
  return canonical_form(as_zero_weight(g), max_n).code;
}

bool isomorphic(const WeightedMultigraph& a, const WeightedMultigraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace sntrank
