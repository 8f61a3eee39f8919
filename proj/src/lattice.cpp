#include "latagg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace latagg {

namespace {

// Longest-chain height of every element above bottom.
std::vector<int> heights(int n, const std::vector<uint64_t>& down) {
  std::vector<int> h(static_cast<size_t>(n), 0);
  // Process by increasing down-set size; y < x implies |down(y)| < |down(x)|.
  std::vector<Elem> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    int ca = std::popcount(down[static_cast<size_t>(a)]);
    int cb = std::popcount(down[static_cast<size_t>(b)]);
    return ca != cb ? ca < cb : a < b;
  });
  for (Elem x : order) {
    for (int y = 0; y < n; ++y) {
      if (y != x && ((down[static_cast<size_t>(x)] >> y) & 1u)) {
        h[static_cast<size_t>(x)] = std::max(h[static_cast<size_t>(x)], h[static_cast<size_t>(y)] + 1);
      }
    }
  }
  return h;
}

}  // namespace

Lattice Lattice::from_covers(std::vector<std::string> names,
                             std::vector<CoverPair> covers) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw BadParam("element list is empty");
  if (n > 64) throw BadParam("at most 64 elements are supported");
  {
    std::unordered_set<std::string> seen;
    for (const auto& nm : names) {
      if (nm.empty()) throw BadParam("empty element name");
      if (!seen.insert(nm).second) throw BadParam("duplicate element name '" + nm + "'");
    }
  }
  {
    std::unordered_set<uint64_t> seen;
    for (auto [lo, hi] : covers) {
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw BadParam("cover references an undeclared element");
      if (lo == hi) throw CycleError("cover (" + names[static_cast<size_t>(lo)] + "," +
                                     names[static_cast<size_t>(hi)] + ") is a self-loop");
      uint64_t key = (static_cast<uint64_t>(lo) << 32) | static_cast<uint32_t>(hi);
      if (!seen.insert(key).second)
        throw RedundantCover("duplicate cover (" + names[static_cast<size_t>(lo)] + "," +
                             names[static_cast<size_t>(hi)] + ")");
    }
  }

  // Cycle check: Kahn's algorithm on the cover digraph lo -> hi.
  {
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (auto [lo, hi] : covers) indeg[static_cast<size_t>(hi)]++;
    std::vector<Elem> queue;
    for (int i = 0; i < n; ++i)
      if (indeg[static_cast<size_t>(i)] == 0) queue.push_back(i);
    size_t done = 0;
    while (done < queue.size()) {
      Elem x = queue[done++];
      for (auto [lo, hi] : covers)
        if (lo == x && --indeg[static_cast<size_t>(hi)] == 0) queue.push_back(hi);
    }
    if (static_cast<int>(done) != n) throw CycleError("cover relation contains a cycle");
  }

  // Reflexive-transitive closure, one bitset row per element.
  std::vector<uint64_t> up(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = 1ull << i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : covers) {
      uint64_t merged = up[static_cast<size_t>(lo)] | up[static_cast<size_t>(hi)];
      if (merged != up[static_cast<size_t>(lo)]) {
        up[static_cast<size_t>(lo)] = merged;
        changed = true;
      }
    }
  }
  std::vector<uint64_t> down(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((up[static_cast<size_t>(x)] >> y) & 1u) down[static_cast<size_t>(y)] |= 1ull << x;

  // Each declared cover must be a genuine cover: nothing strictly between.
  for (auto [lo, hi] : covers) {
    uint64_t between = up[static_cast<size_t>(lo)] & down[static_cast<size_t>(hi)] &
                       ~(1ull << lo) & ~(1ull << hi);
    if (between != 0)
      throw RedundantCover("cover (" + names[static_cast<size_t>(lo)] + "," +
                           names[static_cast<size_t>(hi)] +
                           ") is implied by other covers");
  }

  // Unique bounds.
  const uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  Elem bottom = -1, top = -1;
  for (int x = 0; x < n; ++x) {
    if (up[static_cast<size_t>(x)] == all) {
      if (bottom >= 0) throw NotBounded("no unique minimum element");
      bottom = x;
    }
    if (down[static_cast<size_t>(x)] == all) {
      if (top >= 0) throw NotBounded("no unique maximum element");
      top = x;
    }
  }
  if (bottom < 0) throw NotBounded("no minimum element");
  if (top < 0) throw NotBounded("no maximum element");

  // Joins and meets: the set of common upper (lower) bounds must have a
  // least (greatest) member.
  std::vector<Elem> join(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  std::vector<Elem> meet(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      uint64_t ub = up[static_cast<size_t>(x)] & up[static_cast<size_t>(y)];
      Elem lub = -1;
      for (uint64_t m = ub; m; m &= m - 1) {
        Elem z = std::countr_zero(m);
        if ((ub & ~up[static_cast<size_t>(z)]) == 0) {
          lub = z;
          break;
        }
      }
      if (lub < 0)
        throw NotALattice("elements " + names[static_cast<size_t>(x)] + " and " +
                          names[static_cast<size_t>(y)] + " have no least upper bound");
      uint64_t lb = down[static_cast<size_t>(x)] & down[static_cast<size_t>(y)];
      Elem glb = -1;
      for (uint64_t m = lb; m; m &= m - 1) {
        Elem z = std::countr_zero(m);
        if ((lb & ~down[static_cast<size_t>(z)]) == 0) {
          glb = z;
          break;
        }
      }
      if (glb < 0)
        throw NotALattice("elements " + names[static_cast<size_t>(x)] + " and " +
                          names[static_cast<size_t>(y)] + " have no greatest lower bound");
      join[static_cast<size_t>(x * n + y)] = lub;
      meet[static_cast<size_t>(x * n + y)] = glb;
    }
  }

  Lattice L;
  L.names_ = std::move(names);
  L.covers_ = std::move(covers);
  L.up_ = std::move(up);
  L.down_ = std::move(down);
  L.join_ = std::move(join);
  L.meet_ = std::move(meet);
  L.bottom_ = bottom;
  L.top_ = top;

  std::vector<int> h = heights(n, L.down_);
  L.linext_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) L.linext_[static_cast<size_t>(i)] = i;
  std::sort(L.linext_.begin(), L.linext_.end(), [&](Elem a, Elem b) {
    return h[static_cast<size_t>(a)] != h[static_cast<size_t>(b)]
               ? h[static_cast<size_t>(a)] < h[static_cast<size_t>(b)]
               : a < b;
  });
  return L;
}

Elem Lattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  throw BadParam("unknown element '" + name + "'");
}

std::vector<Elem> Lattice::join_irreducibles() const {
  std::vector<int> lower_covers(static_cast<size_t>(size()), 0);
  for (auto [lo, hi] : covers_) lower_covers[static_cast<size_t>(hi)]++;
  std::vector<Elem> out;
  for (int x = 0; x < size(); ++x)
    if (x != bottom_ && lower_covers[static_cast<size_t>(x)] == 1) out.push_back(x);
  return out;
}

Elem Lattice::lower_cover_of(Elem a) const {
  check_element(a);
  Elem found = -1;
  for (auto [lo, hi] : covers_) {
    if (hi == a) {
      if (found >= 0) throw NotJoinIrreducible("element '" + name(a) + "' covers more than one element");
      found = lo;
    }
  }
  if (found < 0) throw NotJoinIrreducible("element '" + name(a) + "' covers nothing");
  return found;
}

std::vector<Elem> Lattice::atoms() const {
  std::vector<Elem> out;
  for (auto [lo, hi] : covers_)
    if (lo == bottom_) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Lattice::coatoms() const {
  std::vector<Elem> out;
  for (auto [lo, hi] : covers_)
    if (hi == top_) out.push_back(lo);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Lattice::interval(Elem x, Elem y) const {
  check_element(x);
  check_element(y);
  if (!leq(x, y))
    throw NotComparable("'" + name(x) + "' is not below '" + name(y) + "'");
  std::vector<Elem> out;
  uint64_t mask = up_[static_cast<size_t>(x)] & down_[static_cast<size_t>(y)];
  for (uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Elem> Lattice::principal_filter(Elem a) const {
  check_element(a);
  std::vector<Elem> out;
  for (uint64_t m = up_[static_cast<size_t>(a)]; m; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

void require_nondegenerate(const Lattice& L) {
  if (L.size() < 2) throw DegenerateLattice("lattice must have at least two elements");
}

}  // namespace latagg
