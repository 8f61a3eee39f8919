#include "latagg/relation.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace latagg {

Relation Relation::identity(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(int n) {
  Relation r(n);
  const uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  for (int i = 0; i < n; ++i) r.rows_[static_cast<size_t>(i)] = all;
  return r;
}

int Relation::pair_count() const {
  int c = 0;
  for (uint64_t row : rows_) c += std::popcount(row);
  return c;
}

bool Relation::contains(const Relation& other) const {
  for (int i = 0; i < n_; ++i)
    if (other.rows_[static_cast<size_t>(i)] & ~rows_[static_cast<size_t>(i)]) return false;
  return true;
}

std::vector<ElemPair> Relation::pairs() const {
  std::vector<ElemPair> out;
  for (int x = 0; x < n_; ++x)
    for (uint64_t m = rows_[static_cast<size_t>(x)]; m; m &= m - 1)
      out.emplace_back(x, std::countr_zero(m));
  return out;
}

std::vector<ElemPair> Relation::upper_pairs() const {
  std::vector<ElemPair> out;
  for (int x = 0; x < n_; ++x) {
    uint64_t m = rows_[static_cast<size_t>(x)] & ~((x == 63 ? 0ull : (2ull << x)) - 1);
    m &= ~(1ull << x);
    for (; m; m &= m - 1) out.emplace_back(x, std::countr_zero(m));
  }
  return out;
}

Relation Relation::united(const Relation& other) const {
  Relation r(*this);
  for (int i = 0; i < n_; ++i) r.rows_[static_cast<size_t>(i)] |= other.rows_[static_cast<size_t>(i)];
  return r;
}

bool is_reflexive(const Relation& r) {
  for (int i = 0; i < r.size(); ++i)
    if (!r.test(i, i)) return false;
  return true;
}

bool is_symmetric(const Relation& r) {
  for (int x = 0; x < r.size(); ++x)
    for (int y = x + 1; y < r.size(); ++y)
      if (r.test(x, y) != r.test(y, x)) return false;
  return true;
}

bool is_compatible(const Lattice& L, const Relation& r) {
  const auto ps = r.pairs();
  for (const auto& [a, b] : ps) {
    for (const auto& [c, d] : ps) {
      if (!r.test(L.join(a, c), L.join(b, d))) return false;
      if (!r.test(L.meet(a, c), L.meet(b, d))) return false;
    }
  }
  return true;
}

bool is_tolerance(const Lattice& L, const Relation& r) {
  return r.size() == L.size() && is_reflexive(r) && is_symmetric(r) && is_compatible(L, r);
}

bool is_congruence(const Lattice& L, const Relation& r) {
  if (!is_tolerance(L, r)) return false;
  for (const auto& [x, y] : r.pairs())
    for (int z = 0; z < r.size(); ++z)
      if (r.test(y, z) && !r.test(x, z)) return false;
  return true;
}

Relation compose(const Relation& a, const Relation& b) {
  Relation out(a.size());
  for (int x = 0; x < a.size(); ++x)
    for (int z = 0; z < a.size(); ++z)
      if (a.test(x, z))
        for (int y = 0; y < a.size(); ++y)
          if (b.test(z, y)) out.set(x, y);
  return out;
}

Relation relation_inverse(const Relation& r) {
  Relation out(r.size());
  for (const auto& [x, y] : r.pairs()) out.set(y, x);
  return out;
}

Tolerance::Tolerance(const Lattice& L, Relation r) : Relation(std::move(r)) {
  if (!is_tolerance(L, *this))
    throw InternalInconsistency("relation is not a tolerance");
}

Congruence::Congruence(const Lattice& L, Relation r) : Tolerance(L, std::move(r)) {
  for (const auto& [x, y] : pairs())
    for (int z = 0; z < size(); ++z)
      if (test(y, z) && !test(x, z))
        throw InternalInconsistency("tolerance is not transitive");
}

namespace {

// Subuniverse of L^2 under componentwise join/meet, grown from `base`
// (assumed already closed; may be empty) by the extra pairs. FIFO worklist:
// each newly admitted pair is combined with every member present so far.
Relation pair_closure(const Lattice& L, const Relation& base,
                      std::span<const ElemPair> extra) {
  Relation rel = base.size() == 0 ? Relation(L.size()) : base;
  std::vector<ElemPair> members = rel.pairs();
  std::vector<ElemPair> queue;
  for (const auto& p : extra) {
    if (!rel.test(p.first, p.second)) {
      rel.set(p.first, p.second);
      members.push_back(p);
      queue.push_back(p);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const auto [a, b] = queue[qi];
    for (size_t mi = 0; mi < members.size(); ++mi) {
      const auto [c, d] = members[mi];
      const ElemPair up{L.join(a, c), L.join(b, d)};
      if (!rel.test(up.first, up.second)) {
        rel.set(up.first, up.second);
        members.push_back(up);
        queue.push_back(up);
      }
      const ElemPair dn{L.meet(a, c), L.meet(b, d)};
      if (!rel.test(dn.first, dn.second)) {
        rel.set(dn.first, dn.second);
        members.push_back(dn);
        queue.push_back(dn);
      }
    }
  }
  return rel;
}

Relation tolerance_closure_raw(const Lattice& L, const Relation& base,
                               std::span<const ElemPair> extra) {
  std::vector<ElemPair> seeds;
  if (base.size() == 0) {
    for (int i = 0; i < L.size(); ++i) seeds.emplace_back(i, i);
  }
  for (const auto& [x, y] : extra) {
    seeds.emplace_back(x, y);
    seeds.emplace_back(y, x);
  }
  return pair_closure(L, base, seeds);
}

Relation transitive_closure_raw(Relation r) {
  for (int k = 0; k < r.size(); ++k) {
    for (int x = 0; x < r.size(); ++x) {
      if (r.test(x, k)) {
        for (int y = 0; y < r.size(); ++y)
          if (r.test(k, y)) r.set(x, y);
      }
    }
  }
  return r;
}

}  // namespace

Tolerance tolerance_generated_by(const Lattice& L, std::span<const ElemPair> seed) {
  for (const auto& [x, y] : seed) {
    L.check_element(x);
    L.check_element(y);
  }
  return Tolerance(L, tolerance_closure_raw(L, Relation(), seed));
}

Congruence congruence_generated_by(const Lattice& L, std::span<const ElemPair> seed) {
  Relation r = tolerance_closure_raw(L, Relation(), seed);
  while (true) {
    Relation t = transitive_closure_raw(r);
    if (t == r) break;
    r = tolerance_closure_raw(L, Relation(), std::span<const ElemPair>(t.pairs()));
  }
  return Congruence(L, r);
}

Congruence transitive_closure(const Lattice& L, const Tolerance& t) {
  return Congruence(L, transitive_closure_raw(t));
}

Relation diagonal_sublattice_generated_by(const Lattice& L, std::span<const ElemPair> seed) {
  std::vector<ElemPair> seeds;
  for (int i = 0; i < L.size(); ++i) seeds.emplace_back(i, i);
  for (const auto& [x, y] : seed) {
    L.check_element(x);
    L.check_element(y);
    seeds.emplace_back(x, y);
  }
  return pair_closure(L, Relation(), seeds);
}

bool is_simple(const Lattice& L) {
  require_nondegenerate(L);
  const Relation full = Relation::full(L.size());
  for (const auto& cover : L.covers()) {
    const ElemPair seed[]{cover};
    if (!(congruence_generated_by(L, seed) == full)) return false;
  }
  return true;
}

ToleranceTriviality has_only_trivial_tolerances(const Lattice& L) {
  require_nondegenerate(L);
  const Relation full = Relation::full(L.size());
  for (const auto& cover : L.covers()) {
    const ElemPair seed[]{cover};
    Tolerance t = tolerance_generated_by(L, seed);
    if (!(t == full)) return {false, std::move(t)};
  }
  return {true, std::nullopt};
}

std::vector<Tolerance> all_tolerances(const Lattice& L, int max_elements) {
  if (L.size() > max_elements)
    throw BoundExceeded("tolerance enumeration is limited to " +
                        std::to_string(max_elements) + " elements");
  // Generators: the tolerance of each comparable pair. Every tolerance is the
  // join of the generators it contains, so join-closure is complete.
  std::vector<Relation> gens;
  for (int x = 0; x < L.size(); ++x) {
    for (int y = 0; y < L.size(); ++y) {
      if (x != y && L.leq(x, y)) {
        const ElemPair seed[]{{x, y}};
        Relation g = tolerance_generated_by(L, seed);
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
          gens.push_back(std::move(g));
      }
    }
  }
  std::vector<Relation> found;
  std::set<Relation> seen;
  auto admit = [&](Relation r) {
    if (seen.insert(r).second) found.push_back(std::move(r));
  };
  admit(Relation::identity(L.size()));
  for (const auto& g : gens) admit(g);
  for (size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : gens) {
      if (found[i].contains(g)) continue;
      admit(tolerance_closure_raw(L, found[i], g.pairs()));
    }
  }
  std::sort(found.begin(), found.end(), [](const Relation& a, const Relation& b) {
    int ca = a.pair_count(), cb = b.pair_count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<Tolerance> out;
  out.reserve(found.size());
  for (auto& r : found) out.emplace_back(L, std::move(r));
  return out;
}

}  // namespace latagg
