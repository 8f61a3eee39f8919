#include "latagg/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "latagg/relation.hpp"

namespace latagg {

namespace {

Lattice make_chain(int k) {
  if (k < 2) throw BadParam("chain needs at least 2 elements");
  std::vector<std::string> names{"0"};
  for (int i = 1; i + 1 < k; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("1");
  std::vector<CoverPair> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Lattice::from_covers(std::move(names), std::move(covers));
}

Lattice make_mn(int k) {
  if (k < 3) throw BadParam("mn needs at least 3 atoms");
  std::vector<std::string> names{"0"};
  for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("1");
  std::vector<CoverPair> covers;
  for (int i = 1; i <= k; ++i) covers.emplace_back(0, i);
  for (int i = 1; i <= k; ++i) covers.emplace_back(i, k + 1);
  return Lattice::from_covers(std::move(names), std::move(covers));
}

Lattice make_bool(int k) {
  if (k < 1 || k > 4) throw BadParam("bool cube supports 1 <= k <= 4");
  const int n = 1 << k;
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) {
    std::string s;
    for (int b = k - 1; b >= 0; --b) s += ((m >> b) & 1) ? '1' : '0';
    names.push_back(std::move(s));
  }
  std::vector<CoverPair> covers;
  for (int m = 0; m < n; ++m)
    for (int b = 0; b < k; ++b)
      if (!((m >> b) & 1)) covers.emplace_back(m, m | (1 << b));
  return Lattice::from_covers(std::move(names), std::move(covers));
}

Lattice make_glued_m3() {
  std::vector<std::string> names{"0", "a", "b", "c", "d", "e", "f", "1"};
  auto ix = [&](const char* s) -> Elem {
    return static_cast<Elem>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<CoverPair> covers{
      {ix("0"), ix("a")}, {ix("0"), ix("b")}, {ix("0"), ix("c")},
      {ix("a"), ix("d")}, {ix("b"), ix("d")}, {ix("c"), ix("d")},
      {ix("c"), ix("e")}, {ix("c"), ix("f")},
      {ix("d"), ix("1")}, {ix("e"), ix("1")}, {ix("f"), ix("1")}};
  Lattice L = Lattice::from_covers(std::move(names), std::move(covers));

  // Lower block {0,a,b,c,d}, upper block {c,d,e,f,1}: sharing the cover
  // pair c < d. Everything below is re-checked on every construction.
  const std::vector<Elem> block1{L.index_of("0"), L.index_of("a"), L.index_of("b"),
                                 L.index_of("c"), L.index_of("d")};
  const std::vector<Elem> block2{L.index_of("c"), L.index_of("d"), L.index_of("e"),
                                 L.index_of("f"), L.index_of("1")};

  auto is_m3_sublattice = [&](const std::vector<Elem>& block) {
    uint64_t mask = 0;
    for (Elem x : block) mask |= 1ull << x;
    for (Elem x : block)
      for (Elem y : block)
        if (!((mask >> L.join(x, y)) & 1) || !((mask >> L.meet(x, y)) & 1)) return false;
    // Induced order must be isomorphic to M_3.
    std::vector<std::string> sub_names;
    for (size_t i = 0; i < block.size(); ++i) sub_names.push_back("s" + std::to_string(i));
    std::vector<CoverPair> sub_covers;
    for (size_t i = 0; i < block.size(); ++i) {
      for (size_t j = 0; j < block.size(); ++j) {
        if (i == j || !L.lt(block[i], block[j])) continue;
        bool direct = true;
        for (size_t k = 0; k < block.size() && direct; ++k)
          if (k != i && k != j && L.lt(block[i], block[k]) && L.lt(block[k], block[j]))
            direct = false;
        if (direct) sub_covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
      }
    }
    Lattice sub = Lattice::from_covers(std::move(sub_names), std::move(sub_covers));
    return canonical_order_matrix(sub) == canonical_order_matrix(make_mn(3));
  };
  if (!is_m3_sublattice(block1) || !is_m3_sublattice(block2))
    throw InternalInconsistency("glued-m3 blocks are not M_3 sublattices");

  Relation t(L.size());
  for (Elem x : block1)
    for (Elem y : block1) t.set(x, y);
  for (Elem x : block2)
    for (Elem y : block2) t.set(x, y);
  if (!is_tolerance(L, t) || t == Relation::identity(L.size()) || t == Relation::full(L.size()))
    throw InternalInconsistency("glued-m3 block relation is not a nontrivial tolerance");
  if (!is_simple(L)) throw InternalInconsistency("glued-m3 is not simple");
  return L;
}

}  // namespace

Lattice builtin(const std::string& name) {
  if (name == "glued-m3") return make_glued_m3();
  auto dash = name.rfind('-');
  if (dash != std::string::npos) {
    std::string head = name.substr(0, dash);
    std::string tail = name.substr(dash + 1);
    bool numeric = !tail.empty() && std::all_of(tail.begin(), tail.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
    if (numeric && tail.size() <= 3) {
      int k = std::stoi(tail);
      if (head == "chain") return make_chain(k);
      if (head == "mn") return make_mn(k);
      if (head == "bool") return make_bool(k);
    } else if (head == "chain" || head == "mn" || head == "bool") {
      throw BadParam("builtin '" + name + "' has a malformed parameter");
    }
  }
  throw UnknownBuiltin("unknown builtin '" + name + "'");
}

namespace {

// Order matrix as row bitmasks: bit y of row x set iff x <= y.
std::vector<uint64_t> order_rows(const Lattice& L) {
  std::vector<uint64_t> rows(static_cast<size_t>(L.size()));
  for (Elem x = 0; x < L.size(); ++x) rows[static_cast<size_t>(x)] = L.up_mask(x);
  return rows;
}

std::vector<uint8_t> matrix_bytes(const std::vector<uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.push_back(static_cast<uint8_t>((rows[static_cast<size_t>(x)] >> y) & 1u));
  return out;
}

// Lexicographically least matrix over all relabelings, by scanning every
// permutation with early row-by-row abort against the best so far.
std::vector<uint8_t> canonical_bytes(const std::vector<uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> best = matrix_bytes(rows);
  std::vector<uint8_t> cand(best.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool worse = false;
    size_t pos = 0;
    for (int x = 0; x < n && !worse; ++x) {
      uint64_t row = rows[static_cast<size_t>(perm[static_cast<size_t>(x)])];
      for (int y = 0; y < n; ++y, ++pos) {
        uint8_t bit = static_cast<uint8_t>((row >> perm[static_cast<size_t>(y)]) & 1u);
        cand[pos] = bit;
        if (bit > best[pos]) {
          worse = true;
          break;
        }
        if (bit < best[pos]) {
          // Strictly better prefix: finish the candidate and adopt it.
          for (size_t rest = pos + 1; rest < cand.size(); ++rest) {
            int rx = static_cast<int>(rest) / n;
            int ry = static_cast<int>(rest) % n;
            cand[rest] = static_cast<uint8_t>(
                (rows[static_cast<size_t>(perm[static_cast<size_t>(rx)])] >>
                 perm[static_cast<size_t>(ry)]) & 1u);
          }
          best = cand;
          worse = true;  // restart comparison with the improved best
          break;
        }
      }
    }
  }
  return best;
}

Lattice lattice_from_order_bytes(const std::vector<uint8_t>& bytes, int n) {
  auto leq = [&](int x, int y) { return bytes[static_cast<size_t>(x * n + y)] != 0; };
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<CoverPair> covers;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
      if (direct) covers.emplace_back(x, y);
    }
  }
  return Lattice::from_covers(std::move(names), std::move(covers));
}

// DFS over naturally labeled bounded lattices: element k's strict down-set
// must be an ideal containing 0, and every pair (x, k) must already have a
// greatest common lower bound. The last element must lie above everything.
// Meets for old pairs never change when a maximal element is added, and
// joins exist once a top is present, so the leaves are exactly the bounded
// lattices labeled along a linear extension.
void generate_labeled(int n, int k, std::vector<uint64_t>& down,
                      std::set<std::vector<uint8_t>>& canon_out) {
  if (k == n) {
    std::vector<uint64_t> up(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((down[static_cast<size_t>(y)] >> x) & 1u) up[static_cast<size_t>(x)] |= 1ull << y;
    canon_out.insert(canonical_bytes(up));
    return;
  }
  const uint64_t prefix = (1ull << k) - 1;
  for (uint64_t d = 1; d <= prefix; ++d) {
    if (k == n - 1 && d != prefix) continue;  // top must dominate all
    if (!(d & 1)) continue;                   // must contain the bottom
    // Ideal: closed downward.
    bool ok = true;
    for (uint64_t m = d; m && ok; m &= m - 1) {
      int x = std::countr_zero(m);
      ok = (down[static_cast<size_t>(x)] & ~d) == 0;
    }
    if (!ok) continue;
    // Meet of (x, k) for every x outside d: down*(x) & d needs a maximum.
    for (int x = 0; x < k && ok; ++x) {
      if ((d >> x) & 1u) continue;
      uint64_t common = down[static_cast<size_t>(x)] & d;
      bool has_max = false;
      for (uint64_t m = common; m && !has_max; m &= m - 1) {
        int z = std::countr_zero(m);
        has_max = (common & ~down[static_cast<size_t>(z)]) == 0;
      }
      ok = has_max;
    }
    if (!ok) continue;
    down[static_cast<size_t>(k)] = d | (1ull << k);
    generate_labeled(n, k + 1, down, canon_out);
  }
  down[static_cast<size_t>(k)] = 0;
}

}  // namespace

std::vector<uint8_t> canonical_order_matrix(const Lattice& L) {
  return canonical_bytes(order_rows(L));
}

std::string canonical_hash_hex(const Lattice& L) {
  std::vector<uint8_t> bytes = canonical_order_matrix(L);
  uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<Lattice> enumerate_lattices(int n, bool allow_eight) {
  if (n < 1) throw BadParam("element count must be positive");
  int limit = allow_eight ? kEnumerationOverrideMax : kEnumerationMaxElements;
  if (n > limit)
    throw BoundExceeded("lattice enumeration is limited to " + std::to_string(limit) +
                        " elements");
  if (n == 1) {
    std::vector<Lattice> out;
    out.push_back(Lattice::from_covers({"e0"}, {}));
    return out;
  }
  std::set<std::vector<uint8_t>> canon;
  std::vector<uint64_t> down(static_cast<size_t>(n), 0);
  down[0] = 1;  // element 0 is the bottom
  generate_labeled(n, 1, down, canon);
  std::vector<Lattice> out;
  out.reserve(canon.size());
  for (const auto& bytes : canon) out.push_back(lattice_from_order_bytes(bytes, n));
  return out;
}

std::vector<CatalogEntry> census(int n, bool allow_eight) {
  if (n < 2) throw DegenerateLattice("census requires at least two elements");
  std::vector<CatalogEntry> out;
  int index = 0;
  for (Lattice& L : enumerate_lattices(n, allow_eight)) {
    PropertyProfile p = profile(L);
    std::string hash = canonical_hash_hex(L);
    std::string name = "n" + std::to_string(n) + "-" + std::to_string(index++);
    out.push_back(CatalogEntry{std::move(name), std::move(L), Provenance::enumerated,
                               p, std::move(hash)});
  }
  return out;
}

std::string census_line(int index, const CatalogEntry& entry) {
  auto yn = [](bool b) { return b ? "Y" : "N"; };
  const PropertyProfile& p = entry.profile;
  std::string line = std::to_string(index);
  line += '\t';
  line += std::to_string(entry.lattice.size());
  line += '\t';
  line += entry.canon_hash;
  for (bool flag : {p.simple, p.modular, p.complemented, p.relatively_complemented,
                    p.atoms_join_is_top, p.coatoms_meet_is_bottom, p.tolerance_trivial,
                    p.smallest_agg}) {
    line += '\t';
    line += yn(flag);
  }
  return line;
}

}  // namespace latagg
