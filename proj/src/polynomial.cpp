#include "latagg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace latagg {

Term Term::variable(int index, int arity) {
  if (index < 0 || index >= arity)
    throw ArityMismatch("variable index " + std::to_string(index) +
                        " needs arity > " + std::to_string(index));
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->index = index;
  return Term(std::move(node), arity);
}

Term Term::constant(Elem value, int arity) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::constant;
  node->index = value;
  return Term(std::move(node), arity);
}

Term Term::join(const Term& a, const Term& b) {
  if (a.arity_ != b.arity_) throw ArityMismatch("join of terms with different arities");
  auto node = std::make_shared<Node>();
  node->kind = Kind::join;
  node->lhs = a.root_;
  node->rhs = b.root_;
  return Term(std::move(node), a.arity_);
}

Term Term::meet(const Term& a, const Term& b) {
  if (a.arity_ != b.arity_) throw ArityMismatch("meet of terms with different arities");
  auto node = std::make_shared<Node>();
  node->kind = Kind::meet;
  node->lhs = a.root_;
  node->rhs = b.root_;
  return Term(std::move(node), a.arity_);
}

Elem Term::evaluate(const Lattice& L, std::span<const Elem> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ArityMismatch("term of arity " + std::to_string(arity_) + " applied to " +
                        std::to_string(args.size()) + " arguments");
  for (Elem a : args) L.check_element(a);
  std::unordered_map<const Node*, Elem> memo;
  std::function<Elem(const Node*)> eval = [&](const Node* n) -> Elem {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Elem v = 0;
    switch (n->kind) {
      case Kind::variable: v = args[static_cast<size_t>(n->index)]; break;
      case Kind::constant: v = n->index; break;
      case Kind::join: v = L.join(eval(n->lhs.get()), eval(n->rhs.get())); break;
      case Kind::meet: v = L.meet(eval(n->lhs.get()), eval(n->rhs.get())); break;
    }
    memo.emplace(n, v);
    return v;
  };
  return eval(root_.get());
}

Term Term::compose_unary(const Term& inner) const {
  if (arity_ != 1) throw ArityMismatch("compose_unary requires a unary term");
  std::unordered_map<const Node*, NodePtr> memo;
  std::function<NodePtr(const NodePtr&)> rebuild = [&](const NodePtr& n) -> NodePtr {
    if (n->kind == Kind::variable) return inner.root_;
    if (n->kind == Kind::constant) return n;
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    auto node = std::make_shared<Node>();
    node->kind = n->kind;
    node->lhs = rebuild(n->lhs);
    node->rhs = rebuild(n->rhs);
    memo.emplace(n.get(), node);
    return node;
  };
  return Term(rebuild(root_), inner.arity_);
}

uint64_t Term::tree_size() const {
  constexpr uint64_t kMax = ~uint64_t{0};
  std::unordered_map<const Node*, uint64_t> memo;
  std::function<uint64_t(const Node*)> count = [&](const Node* n) -> uint64_t {
    if (n->kind == Kind::variable || n->kind == Kind::constant) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    uint64_t a = count(n->lhs.get());
    uint64_t b = count(n->rhs.get());
    uint64_t total = (a > kMax - b) ? kMax : a + b;
    if (total < kMax) total += 1;
    memo.emplace(n, total);
    return total;
  };
  return count(root_.get());
}

std::string Term::str(const Lattice& L) const {
  std::string out;
  std::function<void(const Node*, bool)> render = [&](const Node* n, bool outer) {
    switch (n->kind) {
      case Kind::variable:
        out += 'x';
        out += std::to_string(n->index);
        break;
      case Kind::constant:
        out += L.name(n->index);
        break;
      case Kind::join:
      case Kind::meet:
        if (!outer) out += '(';
        render(n->lhs.get(), false);
        out += n->kind == Kind::join ? " v " : " ^ ";
        render(n->rhs.get(), false);
        if (!outer) out += ')';
        break;
    }
  };
  render(root_.get(), true);
  return out;
}

namespace {

struct Token {
  enum class Type { lparen, rparen, join_op, meet_op, word };
  Type type;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Type::lparen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::rparen, ")"});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Type::meet_op, "^"});
      ++i;
    } else {
      size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')' && text[i] != '^')
        ++i;
      std::string word(text.substr(start, i - start));
      if (word == "v")
        out.push_back({Token::Type::join_op, word});
      else
        out.push_back({Token::Type::word, word});
    }
  }
  return out;
}

bool is_variable_token(const std::string& w, int& index) {
  if (w.size() < 2 || w[0] != 'x') return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
  index = std::stoi(w.substr(1));
  return true;
}

class TermParser {
 public:
  TermParser(const Lattice& L, std::vector<Token> toks, int arity)
      : L_(L), toks_(std::move(toks)), arity_(arity) {}

  Term run() {
    if (toks_.empty()) throw ParseError("empty term");
    Term t = expr();
    if (pos_ != toks_.size()) throw ParseError("unexpected token '" + toks_[pos_].text + "'");
    return t;
  }

 private:
  Term expr() {
    Term t = operand();
    while (pos_ < toks_.size() && (toks_[pos_].type == Token::Type::join_op ||
                                   toks_[pos_].type == Token::Type::meet_op)) {
      bool is_join = toks_[pos_].type == Token::Type::join_op;
      ++pos_;
      Term rhs = operand();
      t = is_join ? Term::join(t, rhs) : Term::meet(t, rhs);
    }
    return t;
  }

  Term operand() {
    if (pos_ >= toks_.size()) throw ParseError("term ends unexpectedly");
    const Token& tok = toks_[pos_];
    if (tok.type == Token::Type::lparen) {
      ++pos_;
      Term t = expr();
      if (pos_ >= toks_.size() || toks_[pos_].type != Token::Type::rparen)
        throw ParseError("missing ')'");
      ++pos_;
      return t;
    }
    if (tok.type != Token::Type::word)
      throw ParseError("unexpected token '" + tok.text + "'");
    ++pos_;
    int vi = 0;
    if (is_variable_token(tok.text, vi)) {
      if (vi >= arity_)
        throw ParseError("variable x" + std::to_string(vi) + " exceeds arity " +
                         std::to_string(arity_));
      return Term::variable(vi, arity_);
    }
    try {
      return Term::constant(L_.index_of(tok.text), arity_);
    } catch (const BadParam&) {
      throw ParseError("unknown token '" + tok.text + "'");
    }
  }

  const Lattice& L_;
  std::vector<Token> toks_;
  int arity_;
  size_t pos_ = 0;
};

}  // namespace

Term Term::parse(const Lattice& L, std::string_view text) {
  auto toks = tokenize(text);
  int max_index = -1;
  for (const auto& t : toks) {
    int vi = 0;
    std::string w = t.text;
    if (t.type == Token::Type::word && is_variable_token(w, vi))
      max_index = std::max(max_index, vi);
  }
  return TermParser(L, std::move(toks), max_index + 1 > 0 ? max_index + 1 : 0).run();
}

Term Term::parse(const Lattice& L, std::string_view text, int arity) {
  return TermParser(L, tokenize(text), arity).run();
}

size_t FunctionTable::tuple_index(std::span<const Elem> args, int domain) {
  size_t idx = 0;
  for (Elem a : args) idx = idx * static_cast<size_t>(domain) + static_cast<size_t>(a);
  return idx;
}

namespace {

size_t power_checked(int base, int exp) {
  size_t p = 1;
  for (int i = 0; i < exp; ++i) {
    if (p > kMaxTableEntries / static_cast<size_t>(base))
      throw BoundExceeded("function table would exceed " +
                          std::to_string(kMaxTableEntries) + " entries");
    p *= static_cast<size_t>(base);
  }
  return p;
}

// Visits all |L|^arity tuples in lexicographic order.
template <typename F>
void for_each_tuple(int domain, int arity, F&& fn) {
  std::vector<Elem> tuple(static_cast<size_t>(arity), 0);
  while (true) {
    fn(std::span<const Elem>(tuple));
    int pos = arity - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == domain - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    tuple[static_cast<size_t>(pos)]++;
  }
}

}  // namespace

FunctionTable to_table(const Lattice& L, const Term& t) {
  FunctionTable ft;
  ft.arity = t.arity();
  ft.domain = L.size();
  ft.values.reserve(power_checked(L.size(), t.arity()));
  for_each_tuple(L.size(), t.arity(), [&](std::span<const Elem> tuple) {
    ft.values.push_back(t.evaluate(L, tuple));
  });
  return ft;
}

bool is_01_preserving(const Lattice& L, const Term& t) {
  std::vector<Elem> zeros(static_cast<size_t>(t.arity()), L.bottom());
  std::vector<Elem> ones(static_cast<size_t>(t.arity()), L.top());
  return t.evaluate(L, zeros) == L.bottom() && t.evaluate(L, ones) == L.top();
}

std::optional<size_t> TableSet::find(const FunctionTable& t) const {
  std::string key(t.values.begin(), t.values.end());
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TableSet::insert(FunctionTable t, Term w) {
  std::string key(t.values.begin(), t.values.end());
  auto [it, fresh] = index_.emplace(std::move(key), tables_.size());
  if (!fresh) return false;
  tables_.push_back(std::move(t));
  witnesses_.push_back(std::move(w));
  return true;
}

namespace {

TableSet polynomial_closure(const Lattice& L, int arity) {
  TableSet set;
  for (int v = 0; v < arity; ++v)
    set.insert(to_table(L, Term::variable(v, arity)), Term::variable(v, arity));
  for (Elem c = 0; c < L.size(); ++c)
    set.insert(to_table(L, Term::constant(c, arity)), Term::constant(c, arity));
  // Pointwise combination of every unordered pair, processed in discovery
  // order; the set grows while the loop runs.
  for (size_t i = 0; i < set.size(); ++i) {
    if (set.size() > kMaxCloneTables)
      throw BoundExceeded("polynomial closure exceeds " +
                          std::to_string(kMaxCloneTables) + " tables");
    for (size_t j = 0; j <= i; ++j) {
      const FunctionTable& a = set.table(i);
      const FunctionTable& b = set.table(j);
      FunctionTable up{arity, L.size(), {}};
      FunctionTable dn{arity, L.size(), {}};
      up.values.reserve(a.values.size());
      dn.values.reserve(a.values.size());
      for (size_t k = 0; k < a.values.size(); ++k) {
        up.values.push_back(L.join(a.values[k], b.values[k]));
        dn.values.push_back(L.meet(a.values[k], b.values[k]));
      }
      if (!set.contains(up))
        set.insert(std::move(up), Term::join(set.witness(i), set.witness(j)));
      if (!set.contains(dn))
        set.insert(std::move(dn), Term::meet(set.witness(i), set.witness(j)));
    }
  }
  return set;
}

}  // namespace

TableSet unary_polynomial_tables(const Lattice& L, int max_elements) {
  if (L.size() > max_elements)
    throw BoundExceeded("unary polynomial closure is limited to " +
                        std::to_string(max_elements) + " elements");
  return polynomial_closure(L, 1);
}

TableSet binary_polynomial_tables(const Lattice& L, int max_elements) {
  if (L.size() > max_elements)
    throw BoundExceeded("binary polynomial closure is limited to " +
                        std::to_string(max_elements) + " elements");
  return polynomial_closure(L, 2);
}

}  // namespace latagg
