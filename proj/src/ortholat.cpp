#include "ortho/ortholat.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace ortho {

int OrthoLattice::index_of(PointSet a) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
  if (it == elems_.end() || *it != a) return -1;
  return static_cast<int>(it - elems_.begin());
}

int OrthoLattice::meet(int i, int j) const {
  return index_of(elems_[static_cast<std::size_t>(i)] & elems_[static_cast<std::size_t>(j)]);
}

int OrthoLattice::join(int i, int j) const {
  return index_of(
      closure(graph_, elems_[static_cast<std::size_t>(i)] | elems_[static_cast<std::size_t>(j)]));
}

OrthoLattice build_lattice(const OrthoGraph& g, std::size_t family_cap) {
  OrthoLattice L(g);
  std::unordered_set<PointSet> seen{g.all()};
  std::vector<PointSet> fam{g.all()};
  for (int e = 0; e < g.size(); ++e) {
    const PointSet pe = perp(g, PointSet(1) << e);
    const std::size_t known = fam.size();
    for (std::size_t i = 0; i < known; ++i) {
      const PointSet t = fam[i] & pe;
      if (seen.insert(t).second) {
        fam.push_back(t);
        if (fam.size() > family_cap)
          throw cap_exceeded_error("orthoclosed family exceeds the cap of " +
                                   std::to_string(family_cap));
      }
    }
  }
  std::sort(fam.begin(), fam.end());
  L.elems_ = std::move(fam);

  L.ortho_.resize(L.elems_.size());
  for (std::size_t i = 0; i < L.elems_.size(); ++i) {
    const int c = L.index_of(perp(g, L.elems_[i]));
    L.ortho_[i] = c;
  }

  for (std::size_t i = 0; i < L.elems_.size(); ++i) {
    const PointSet a = L.elems_[i];
    if (a == 0) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < L.elems_.size() && minimal; ++j) {
      const PointSet b = L.elems_[j];
      if (b != 0 && b != a && (b & a) == b) minimal = false;
    }
    if (minimal) L.atoms_.push_back(static_cast<int>(i));
  }
  return L;
}

namespace {

// Minimal failing index in [0, count), or count. The parallel path scans the
// whole range and reduces; the serial path early-exits. Both return the same
// index, so witnesses are identical regardless of thread count.
template <typename Pred>
long long find_min_fail(long long count, bool parallel, Pred&& fails) {
  if (!parallel) {
    for (long long k = 0; k < count; ++k)
      if (fails(k)) return k;
    return count;
  }
  long long best = count;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best)
  for (long long k = 0; k < count; ++k) {
    if (k < best && fails(k)) best = k;
  }
#else
  for (long long k = 0; k < count; ++k) {
    if (fails(k)) {
      best = k;
      break;
    }
  }
#endif
  return best;
}

struct OpTables {
  const OrthoLattice& L;
  bool cached = false;
  std::vector<int> meets, joins;

  explicit OpTables(const OrthoLattice& lat) : L(lat) {
    const std::size_t m = static_cast<std::size_t>(L.size());
    if (m <= 2048) {
      cached = true;
      meets.resize(m * m);
      joins.resize(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
          const int mt = L.meet(static_cast<int>(i), static_cast<int>(j));
          const int jn = L.join(static_cast<int>(i), static_cast<int>(j));
          meets[i * m + j] = meets[j * m + i] = mt;
          joins[i * m + j] = joins[j * m + i] = jn;
        }
      }
    }
  }

  int meet(int i, int j) const {
    return cached ? meets[static_cast<std::size_t>(i) * L.size() + j] : L.meet(i, j);
  }
  int join(int i, int j) const {
    return cached ? joins[static_cast<std::size_t>(i) * L.size() + j] : L.join(i, j);
  }
};

std::string elem_str(const OrthoLattice& L, int i) { return set_str(L.element(i)); }

LatticeProperties property_report_impl(const OrthoLattice& L, bool parallel) {
  LatticeProperties out;
  const int m = L.size();
  const OpTables t(L);

  // Complementation well-formedness: involutive, order-reversing, complements.
  out.ortholattice = true;
  for (int i = 0; i < m && out.ortholattice; ++i) {
    if (L.ortho(L.ortho(i)) != i) {
      out.ortholattice = false;
      out.ortholattice_witness = "ortho not involutive at a=" + elem_str(L, i);
      break;
    }
    if (t.meet(i, L.ortho(i)) != L.bottom() || t.join(i, L.ortho(i)) != L.top()) {
      out.ortholattice = false;
      out.ortholattice_witness = "ortho(a) is not a complement of a=" + elem_str(L, i);
      break;
    }
    for (int j = 0; j < m; ++j) {
      if (L.leq(i, j) && !L.leq(L.ortho(j), L.ortho(i))) {
        out.ortholattice = false;
        out.ortholattice_witness =
            "ortho not order-reversing at a=" + elem_str(L, i) + ", b=" + elem_str(L, j);
        break;
      }
    }
  }

  // Orthomodular law: a <= b implies b = a v (b ^ a').
  {
    const long long count = static_cast<long long>(m) * m;
    const long long bad = find_min_fail(count, parallel, [&](long long k) {
      const int a = static_cast<int>(k / m), b = static_cast<int>(k % m);
      if (!L.leq(a, b)) return false;
      return t.join(a, t.meet(b, L.ortho(a))) != b;
    });
    out.orthomodular = bad == count;
    if (!out.orthomodular) {
      const int a = static_cast<int>(bad / m), b = static_cast<int>(bad % m);
      out.orthomodular_witness = "a=" + elem_str(L, a) + ", b=" + elem_str(L, b);
    }
  }

  // Modular law: a <= c implies a v (b ^ c) = (a v b) ^ c.
  {
    std::vector<std::pair<int, int>> le_pairs;
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        if (L.leq(a, c)) le_pairs.emplace_back(a, c);
    const long long count = static_cast<long long>(le_pairs.size()) * m;
    const long long bad = find_min_fail(count, parallel, [&](long long k) {
      const auto [a, c] = le_pairs[static_cast<std::size_t>(k / m)];
      const int b = static_cast<int>(k % m);
      return t.join(a, t.meet(b, c)) != t.meet(t.join(a, b), c);
    });
    out.modular = bad == count;
    if (!out.modular) {
      const auto [a, c] = le_pairs[static_cast<std::size_t>(bad / m)];
      const int b = static_cast<int>(bad % m);
      out.modular_witness =
          "a=" + elem_str(L, a) + ", b=" + elem_str(L, b) + ", c=" + elem_str(L, c);
    }
  }

  // Atomistic: every element is the join of the atoms below it.
  {
    const long long bad = find_min_fail(m, parallel, [&](long long k) {
      const int i = static_cast<int>(k);
      PointSet u = 0;
      for (int p : L.atoms())
        if (L.leq(p, i)) u |= L.element(p);
      return closure(L.graph(), u) != L.element(i);
    });
    out.atomistic = bad == m;
    if (!out.atomistic) out.atomistic_witness = "a=" + elem_str(L, static_cast<int>(bad));
  }

  // Covering: a v p covers a for every atom p outside a.
  {
    const int na = static_cast<int>(L.atoms().size());
    const long long count = static_cast<long long>(m) * na;
    auto violation = [&](long long k, int* c_out) {
      const int a = static_cast<int>(k / na);
      const int p = L.atoms()[static_cast<std::size_t>(k % na)];
      if (L.leq(p, a)) return false;
      const int j = t.join(a, p);
      for (int c = 0; c < m; ++c) {
        if (c != a && c != j && L.leq(a, c) && L.leq(c, j)) {
          if (c_out) *c_out = c;
          return true;
        }
      }
      return false;
    };
    const long long bad =
        find_min_fail(count, parallel, [&](long long k) { return violation(k, nullptr); });
    out.covering = bad == count;
    if (!out.covering) {
      int c = -1;
      violation(bad, &c);
      out.covering_witness = "a=" + elem_str(L, static_cast<int>(bad / na)) +
                             ", atom=" + elem_str(L, L.atoms()[static_cast<std::size_t>(bad % na)]) +
                             ", strictly between: " + elem_str(L, c);
    }
  }

  // Irreducibility via the center: z is central iff a = (a^z) v (a^z') for
  // all a; the lattice is irreducible iff only bottom and top are central.
  {
    const long long bad = find_min_fail(m, parallel, [&](long long k) {
      const int z = static_cast<int>(k);
      if (z == L.bottom() || z == L.top()) return false;
      for (int a = 0; a < m; ++a)
        if (t.join(t.meet(a, z), t.meet(a, L.ortho(z))) != a) return false;
      return true;  // non-trivial central element found
    });
    out.irreducible = bad == m;
    if (!out.irreducible)
      out.irreducible_witness = "central z=" + elem_str(L, static_cast<int>(bad));
  }

  // Length: longest chain, counted in covers.
  {
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const int pa = std::popcount(L.element(a)), pb = std::popcount(L.element(b));
      return pa != pb ? pa < pb : L.element(a) < L.element(b);
    });
    std::vector<int> height(static_cast<std::size_t>(m), 0);
    for (int idx = 0; idx < m; ++idx) {
      const int i = order[static_cast<std::size_t>(idx)];
      for (int jdx = 0; jdx < idx; ++jdx) {
        const int j = order[static_cast<std::size_t>(jdx)];
        if (j != i && L.leq(j, i)) height[i] = std::max(height[i], height[j] + 1);
      }
    }
    out.length = height[static_cast<std::size_t>(L.top())];
  }

  return out;
}

}  // namespace

LatticeProperties property_report(const OrthoLattice& L) {
#ifdef _OPENMP
  return property_report_impl(L, true);
#else
  return property_report_impl(L, false);
#endif
}

LatticeProperties property_report_serial(const OrthoLattice& L) {
  return property_report_impl(L, false);
}

std::vector<Check> LatticeProperties::as_checks() const {
  return {
      Check{"ortholattice", ortholattice, ortholattice_witness},
      Check{"orthomodular", orthomodular, orthomodular_witness},
      Check{"modular", modular, modular_witness},
      Check{"atomistic", atomistic, atomistic_witness},
      Check{"covering", covering, covering_witness},
      Check{"irreducible", irreducible, irreducible_witness},
      Check{"length", true, std::to_string(length)},
  };
}

std::vector<int> lift_automorphism(const OrthoGraph& g, const std::vector<int>& perm,
                                   const OrthoLattice& L) {
  if (!is_automorphism(g, perm)) throw precondition_error("permutation is not an automorphism");
  std::vector<int> out(static_cast<std::size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) {
    PointSet img = 0;
    PointSet rest = L.element(i);
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      img |= PointSet(1) << perm[static_cast<std::size_t>(v)];
    }
    const int j = L.index_of(img);
    if (j < 0) throw error("automorphism image is not orthoclosed; lattice is inconsistent");
    out[static_cast<std::size_t>(i)] = j;
  }
  return out;
}

}  // namespace ortho
