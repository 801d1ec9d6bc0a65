#include "ortho/orthograph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ortho/ortholat.hpp"

namespace ortho {

namespace {

int lowest(PointSet s) { return std::countr_zero(s); }

void check_point(int n, int p) {
  if (p < 0 || p >= n)
    throw precondition_error("point index " + std::to_string(p) + " out of range for n=" +
                             std::to_string(n));
}

}  // namespace

OrthoGraph::OrthoGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1 || n > 32) throw precondition_error("graph size must be between 1 and 32");
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges) {
    check_point(n, a);
    check_point(n, b);
    if (a == b) throw precondition_error("orthogonality is irreflexive: loop at " + std::to_string(a));
    adj_[a] |= PointSet(1) << b;
    adj_[b] |= PointSet(1) << a;
  }
}

std::vector<std::pair<int, int>> OrthoGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (orthogonal(i, j)) out.emplace_back(i, j);
  return out;
}

std::string set_str(PointSet s) {
  std::string out = "{";
  bool first = true;
  while (s) {
    int v = lowest(s);
    s &= s - 1;
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

PointSet perp(const OrthoGraph& g, PointSet a) {
  if ((a & ~g.all()) != 0) throw precondition_error("point set contains out-of-range indices");
  PointSet out = g.all();
  PointSet rest = a;
  while (rest) {
    int v = lowest(rest);
    rest &= rest - 1;
    out &= g.neighbors(v);
  }
  return out;
}

PointSet closure(const OrthoGraph& g, PointSet a) { return perp(g, perp(g, a)); }

namespace {

struct CliqueSearch {
  const OrthoGraph& g;
  int best = 0;

  void expand(PointSet cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    // greedy coloring; clique size within cand is at most the color count
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    PointSet rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      PointSet avail = rest;
      while (avail) {
        const int v = lowest(avail);
        order.emplace_back(v, color);
        rest &= ~(PointSet(1) << v);
        avail &= ~(PointSet(1) << v);
        avail &= ~g.neighbors(v);
      }
    }
    PointSet c = cand;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      const auto [v, col] = order[static_cast<std::size_t>(i)];
      if (size + col <= best) return;
      expand(c & g.neighbors(v), size + 1);
      c &= ~(PointSet(1) << v);
    }
  }
};

}  // namespace

int rank(const OrthoGraph& g) {
  CliqueSearch search{g};
  search.expand(g.all(), 0);
  return search.best;
}

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& block : blocks) {
    if (block.empty()) throw precondition_error("partition blocks must be non-empty");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      check_point(n, e);
      if (block_of_[e] != -1)
        throw precondition_error("partition blocks overlap at " + std::to_string(e));
      block_of_[e] = 0;  // provisional marker
    }
  }
  for (int e = 0; e < n; ++e)
    if (block_of_[e] == -1)
      throw precondition_error("partition does not cover point " + std::to_string(e));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int e : blocks_[b]) block_of_[e] = static_cast<int>(b);
}

Partition Partition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) blocks.push_back({e});
  return Partition(n, std::move(blocks));
}

CheckReport irredundance(const OrthoGraph& g) {
  std::string witness;
  for (int e = 0; e < g.size(); ++e) {
    for (int f = e + 1; f < g.size(); ++f) {
      if (g.neighbors(e) == g.neighbors(f)) {
        if (!witness.empty()) witness += ", ";
        witness += "(" + std::to_string(e) + "," + std::to_string(f) + ")";
      }
    }
  }
  return {{Check{"irredundant", witness.empty(), witness}}};
}

std::pair<OrthoGraph, Partition> irredundant_quotient(const OrthoGraph& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
  for (int e = 0; e < g.size(); ++e) {
    if (owner[e] != -1) continue;
    std::vector<int> block{e};
    owner[e] = static_cast<int>(blocks.size());
    for (int f = e + 1; f < g.size(); ++f) {
      if (owner[f] == -1 && g.neighbors(e) == g.neighbors(f)) {
        owner[f] = owner[e];
        block.push_back(f);
      }
    }
    blocks.push_back(std::move(block));
  }
  Partition theta(g.size(), std::move(blocks));
  return {quotient(g, theta), std::move(theta)};
}

CheckReport linearity_report(const OrthoGraph& g) {
  const int n = g.size();
  // perps of pairs, indexed [e][f]
  std::vector<std::vector<PointSet>> pair_perp(static_cast<std::size_t>(n),
                                               std::vector<PointSet>(static_cast<std::size_t>(n)));
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f) pair_perp[e][f] = g.neighbors(e) & g.neighbors(f);

  Check l1{"l1", true, ""};
  for (int e = 0; e < n && l1.pass; ++e) {
    for (int f = 0; f < n && l1.pass; ++f) {
      if (f == e) continue;
      bool found = false;
      PointSet cands = g.neighbors(e);
      while (cands && !found) {
        const int gpt = lowest(cands);
        cands &= cands - 1;
        found = pair_perp[e][gpt] == pair_perp[e][f];
      }
      if (!found) {
        l1.pass = false;
        l1.witness = "e=" + std::to_string(e) + ", f=" + std::to_string(f);
      }
    }
  }

  Check l2{"l2", true, ""};
  for (int e = 0; e < n && l2.pass; ++e) {
    PointSet gs = g.neighbors(e);
    while (gs && l2.pass) {
      const int gpt = lowest(gs);
      gs &= gs - 1;
      bool found = false;
      for (int f = 0; f < n && !found; ++f) {
        if (f == e || f == gpt) continue;
        found = pair_perp[e][f] == pair_perp[e][gpt];
      }
      if (!found) {
        l2.pass = false;
        l2.witness = "e=" + std::to_string(e) + ", g=" + std::to_string(gpt);
      }
    }
  }

  Check pc{"point_closed", true, ""};
  for (int e = 0; e < n && pc.pass; ++e) {
    const PointSet single = PointSet(1) << e;
    if (closure(g, single) != single) {
      pc.pass = false;
      pc.witness = "e=" + std::to_string(e) + ", closure=" + set_str(closure(g, single));
    }
  }

  return {{l1, l2, pc}};
}

std::vector<PointSet> maximal_orthogonal_subsets(const OrthoGraph& g, PointSet within) {
  std::vector<PointSet> out;
  // Bron-Kerbosch with pivoting on the subgraph induced by `within`.
  auto neighbors_in = [&](int v) { return g.neighbors(v) & within; };
  std::function<void(PointSet, PointSet, PointSet)> visit = [&](PointSet r, PointSet p, PointSet x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    PointSet px = p | x;
    int pivot = -1, best = -1;
    PointSet scan = px;
    while (scan) {
      const int u = lowest(scan);
      scan &= scan - 1;
      const int deg = std::popcount(p & neighbors_in(u));
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    PointSet ext = p & ~neighbors_in(pivot);
    while (ext) {
      const int v = lowest(ext);
      ext &= ext - 1;
      const PointSet bit = PointSet(1) << v;
      visit(r | bit, p & neighbors_in(v), x & neighbors_in(v));
      p &= ~bit;
      x |= bit;
    }
  };
  visit(0, within, 0);
  return out;
}

namespace {

// Shared by the serial and OpenMP variants: first Dacey violation inside one
// orthoclosed set, or empty witness.
std::string dacey_violation(const OrthoGraph& g, PointSet a) {
  for (PointSet d : maximal_orthogonal_subsets(g, a)) {
    if (closure(g, d) != a)
      return "A=" + set_str(a) + ", D=" + set_str(d) + ", closure(D)=" + set_str(closure(g, d));
  }
  return {};
}

CheckReport dacey_from(const std::string& witness) {
  return {{Check{"dacey", witness.empty(), witness}}};
}

}  // namespace

CheckReport dacey_test_serial(const OrthoGraph& g) {
  const OrthoLattice L = build_lattice(g);
  for (int i = 0; i < L.size(); ++i) {
    std::string w = dacey_violation(g, L.element(i));
    if (!w.empty()) return dacey_from(w);
  }
  return dacey_from({});
}

CheckReport dacey_test(const OrthoGraph& g) {
#ifdef _OPENMP
  const OrthoLattice L = build_lattice(g);
  const int m = L.size();
  int first_bad = m;
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
  for (int i = 0; i < m; ++i) {
    if (!dacey_violation(g, L.element(i)).empty()) first_bad = std::min(first_bad, i);
  }
  if (first_bad == m) return dacey_from({});
  return dacey_from(dacey_violation(g, L.element(first_bad)));
#else
  return dacey_test_serial(g);
#endif
}

CheckReport congruence_check(const OrthoGraph& g, const Partition& theta) {
  if (theta.ground_size() != g.size())
    throw precondition_error("partition ground set does not match the graph");
  for (const auto& [a, b] : g.edges()) {
    if (theta.same_block(a, b)) {
      return {{Check{"congruence", false,
                     "edge (" + std::to_string(a) + "," + std::to_string(b) + ") lies within a block"}}};
    }
  }
  return {{Check{"congruence", true, ""}}};
}

OrthoGraph quotient(const OrthoGraph& g, const Partition& theta) {
  if (theta.ground_size() != g.size())
    throw precondition_error("partition ground set does not match the graph");
  for (const auto& [a, b] : g.edges())
    if (theta.same_block(a, b)) throw not_a_congruence_error(a, b);
  const int m = static_cast<int>(theta.blocks().size());
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    const int ba = theta.block_of(a), bb = theta.block_of(b);
    edges.emplace_back(ba, bb);
  }
  return OrthoGraph(m, edges);
}

bool is_automorphism(const OrthoGraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (perm.size() != static_cast<std::size_t>(n))
    throw precondition_error("permutation length does not match the graph");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    check_point(n, v);
    if (seen[v]) throw precondition_error("permutation is not a bijection");
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.orthogonal(i, j) != g.orthogonal(perm[i], perm[j])) return false;
  return true;
}

bool invariant_congruence(const OrthoGraph& g, const Partition& theta,
                          const std::vector<std::vector<int>>& autos) {
  if (!congruence_check(g, theta).all_pass())
    throw precondition_error("partition is not a congruence");
  for (const auto& perm : autos) {
    if (!is_automorphism(g, perm)) throw precondition_error("listed permutation is not an automorphism");
    for (int e = 0; e < g.size(); ++e)
      for (int f = 0; f < g.size(); ++f)
        if (theta.same_block(e, f) != theta.same_block(perm[e], perm[f])) return false;
  }
  return true;
}

bool graph_irreducible(const OrthoGraph& g) {
  // components of the "not orthogonal, not equal" graph
  const int n = g.size();
  if (n == 1) return true;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (u == v || g.orthogonal(u, v) || comp[u] != -1) continue;
      comp[u] = 0;
      stack.push_back(u);
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace ortho
