#include "latagg/io.hpp"

#include <sstream>
#include <unordered_map>

namespace latagg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

// Yields (line_number, tokens) for content lines, comments stripped.
template <typename F>
void for_each_content_line(std::string_view text, F&& fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = split_ws(line);
    if (!toks.empty()) fn(line_no, toks);
    if (end == text.size()) break;
  }
}

}  // namespace

Lattice parse_lat(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;
  std::vector<CoverPair> covers;
  bool have_elements = false;
  int first_error_line = 0;
  std::string first_error;

  for_each_content_line(text, [&](int line_no, const std::vector<std::string>& toks) {
    if (first_error_line) return;
    if (!have_elements) {
      if (toks[0] != "elements") {
        first_error_line = line_no;
        first_error = "expected 'elements' line, got '" + toks[0] + "'";
        return;
      }
      if (toks.size() < 2) {
        first_error_line = line_no;
        first_error = "'elements' line lists no elements";
        return;
      }
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!index.emplace(toks[i], static_cast<Elem>(names.size())).second) {
          first_error_line = line_no;
          first_error = "duplicate element '" + toks[i] + "'";
          return;
        }
        names.push_back(toks[i]);
      }
      have_elements = true;
      return;
    }
    if (toks[0] != "cover" || toks.size() != 3) {
      first_error_line = line_no;
      first_error = "expected 'cover <x> <y>'";
      return;
    }
    auto lo = index.find(toks[1]);
    auto hi = index.find(toks[2]);
    if (lo == index.end() || hi == index.end()) {
      first_error_line = line_no;
      first_error = "cover references undeclared element '" +
                    (lo == index.end() ? toks[1] : toks[2]) + "'";
      return;
    }
    covers.emplace_back(lo->second, hi->second);
  });

  if (first_error_line) throw ParseError(first_error, first_error_line);
  if (!have_elements) throw ParseError("no 'elements' line found");
  return Lattice::from_covers(std::move(names), std::move(covers));
}

std::string to_lat_text(const Lattice& L) {
  std::string out = "elements";
  for (const auto& n : L.names()) {
    out += ' ';
    out += n;
  }
  out += '\n';
  for (const auto& [lo, hi] : L.covers()) {
    out += "cover ";
    out += L.name(lo);
    out += ' ';
    out += L.name(hi);
    out += '\n';
  }
  return out;
}

AggTable parse_fun(const Lattice& L, std::string_view text) {
  int arity = -1;
  FunctionTable table;
  size_t expected = 0;
  size_t filled = 0;
  int first_error_line = 0;
  std::string first_error;
  std::vector<Elem> expected_tuple;

  auto bump_tuple = [&]() {
    int pos = arity - 1;
    while (pos >= 0 && expected_tuple[static_cast<size_t>(pos)] == L.size() - 1) {
      expected_tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos >= 0) expected_tuple[static_cast<size_t>(pos)]++;
  };

  for_each_content_line(text, [&](int line_no, const std::vector<std::string>& toks) {
    if (first_error_line) return;
    auto fail = [&](std::string msg) {
      first_error_line = line_no;
      first_error = std::move(msg);
    };
    if (arity < 0) {
      if (toks[0] != "arity" || toks.size() != 2) return fail("expected 'arity <n>' line");
      try {
        arity = std::stoi(toks[1]);
      } catch (...) {
        return fail("malformed arity '" + toks[1] + "'");
      }
      if (arity < 1) return fail("arity must be at least 1");
      expected = 1;
      for (int i = 0; i < arity; ++i) {
        if (expected > kMaxAggTuples / static_cast<size_t>(L.size()))
          return fail("table too large");
        expected *= static_cast<size_t>(L.size());
      }
      table.arity = arity;
      table.domain = L.size();
      table.values.reserve(expected);
      expected_tuple.assign(static_cast<size_t>(arity), 0);
      return;
    }
    if (toks[0] != "map" || toks.size() != static_cast<size_t>(arity) + 3 ||
        toks[static_cast<size_t>(arity) + 1] != "->")
      return fail("expected 'map <x1> ... <x" + std::to_string(arity) + "> -> <y>'");
    if (filled == expected) return fail("more 'map' lines than tuples");
    std::vector<Elem> tuple;
    for (int i = 0; i < arity; ++i) {
      try {
        tuple.push_back(L.index_of(toks[static_cast<size_t>(i) + 1]));
      } catch (const BadParam&) {
        return fail("unknown element '" + toks[static_cast<size_t>(i) + 1] + "'");
      }
    }
    if (tuple != expected_tuple)
      return fail("tuples must appear in lexicographic element-index order");
    Elem y;
    try {
      y = L.index_of(toks[static_cast<size_t>(arity) + 2]);
    } catch (const BadParam&) {
      return fail("unknown element '" + toks[static_cast<size_t>(arity) + 2] + "'");
    }
    table.values.push_back(y);
    ++filled;
    bump_tuple();
  });

  if (first_error_line) throw ParseError(first_error, first_error_line);
  if (arity < 0) throw ParseError("no 'arity' line found");
  if (filled != expected)
    throw ParseError("expected " + std::to_string(expected) + " 'map' lines, found " +
                     std::to_string(filled));
  return make_aggregation(L, std::move(table));
}

std::string to_fun_text(const Lattice& L, const AggTable& f) {
  std::string out = "arity " + std::to_string(f.table.arity) + "\n";
  std::vector<Elem> tuple(static_cast<size_t>(f.table.arity), 0);
  for (size_t idx = 0;; ++idx) {
    out += "map";
    for (Elem x : tuple) {
      out += ' ';
      out += L.name(x);
    }
    out += " -> ";
    out += L.name(f.table.values[idx]);
    out += '\n';
    int pos = f.table.arity - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == L.size() - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    tuple[static_cast<size_t>(pos)]++;
  }
  return out;
}

std::string to_dot(const Lattice& L) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < L.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + L.name(i) + "\"];\n";
  for (const auto& [lo, hi] : L.covers())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

std::string tolerance_pairs_text(const Lattice& L, const Relation& rel) {
  std::string out;
  for (const auto& [x, y] : rel.upper_pairs()) {
    out += "~ ";
    out += L.name(x);
    out += ' ';
    out += L.name(y);
    out += '\n';
  }
  return out;
}

}  // namespace latagg
