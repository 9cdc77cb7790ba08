#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace wlem {

enum class Connective : std::uint8_t { var, conj, disj, implies, neg };

/// Immutable propositional formula over variables p1, p2, ... with the
/// connectives &, |, -> and ~. Copies share structure.
class Formula {
 public:
  static Formula var(int index);
  static Formula conj(Formula a, Formula b) { return binary(Connective::conj, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Connective::disj, std::move(a), std::move(b)); }
  static Formula implies(Formula a, Formula b) { return binary(Connective::implies, std::move(a), std::move(b)); }
  static Formula neg(Formula a);

  Connective kind() const;
  bool is_var() const { return kind() == Connective::var; }
  bool is_binary() const {
    return kind() != Connective::var && kind() != Connective::neg;
  }

  /// Variable index; only meaningful when is_var().
  int index() const;
  /// Left operand of a binary node, or the operand of a negation.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& operand() const { return left(); }

  /// Identity of the shared node, usable as a map key.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Connective::var: return a.index() == b.index();
      case Connective::neg: return a.operand() == b.operand();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Formula() = default;

  static Formula binary(Connective c, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  int index;
  Formula left;
  Formula right;
};

inline Formula Formula::var(int index) {
  if (index < 1) {
    throw Error(ErrorCode::invalid_argument, "variable index must be >= 1, got " + std::to_string(index));
  }
  return Formula(std::make_shared<const Node>(Node{Connective::var, index, {}, {}}));
}
inline Formula Formula::neg(Formula a) {
  return Formula(std::make_shared<const Node>(Node{Connective::neg, 0, std::move(a), {}}));
}
inline Formula Formula::binary(Connective c, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{c, 0, std::move(a), std::move(b)}));
}
inline Connective Formula::kind() const { return node_->kind; }
inline int Formula::index() const { return node_->index; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }

inline Formula var(int index) { return Formula::var(index); }

/// Sorted, duplicate-free variable indices occurring in f.
inline std::vector<int> vars(const Formula& f) {
  std::vector<int> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    switch (g->kind()) {
      case Connective::var: out.push_back(g->index()); break;
      case Connective::neg: stack.push_back(&g->operand()); break;
      default:
        stack.push_back(&g->right());
        stack.push_back(&g->left());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All subformulas in post-order (children before parents), duplicates kept.
inline std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.kind() == Connective::neg) {
      self(self, g.operand());
    } else if (g.is_binary()) {
      self(self, g.left());
      self(self, g.right());
    }
    out.push_back(g);
  };
  walk(walk, f);
  return out;
}

/// Simultaneous substitution; variables missing from the map are left alone.
inline Formula substitute(const Formula& f, const std::map<int, Formula>& map) {
  switch (f.kind()) {
    case Connective::var: {
      auto it = map.find(f.index());
      return it == map.end() ? f : it->second;
    }
    case Connective::neg: return Formula::neg(substitute(f.operand(), map));
    case Connective::conj: return Formula::conj(substitute(f.left(), map), substitute(f.right(), map));
    case Connective::disj: return Formula::disj(substitute(f.left(), map), substitute(f.right(), map));
    case Connective::implies: return Formula::implies(substitute(f.left(), map), substitute(f.right(), map));
  }
  return f;
}

namespace detail {

inline int precedence(Connective c) {
  switch (c) {
    case Connective::implies: return 1;
    case Connective::disj: return 2;
    case Connective::conj: return 3;
    case Connective::neg: return 4;
    case Connective::var: return 5;
  }
  return 0;
}

inline void print_to(std::string& out, const Formula& f);

inline void print_wrapped(std::string& out, const Formula& f, bool parens) {
  if (parens) out += '(';
  print_to(out, f);
  if (parens) out += ')';
}

inline void print_to(std::string& out, const Formula& f) {
  const int p = precedence(f.kind());
  switch (f.kind()) {
    case Connective::var:
      out += 'p';
      out += std::to_string(f.index());
      return;
    case Connective::neg:
      out += '~';
      print_wrapped(out, f.operand(), precedence(f.operand().kind()) < p);
      return;
    case Connective::implies:
      // right-associative
      print_wrapped(out, f.left(), precedence(f.left().kind()) <= p);
      out += " -> ";
      print_wrapped(out, f.right(), precedence(f.right().kind()) < p);
      return;
    default:
      // & and | associate to the left
      print_wrapped(out, f.left(), precedence(f.left().kind()) < p);
      out += f.kind() == Connective::conj ? " & " : " | ";
      print_wrapped(out, f.right(), precedence(f.right().kind()) <= p);
      return;
  }
}

}  // namespace detail

/// Renders f with the fewest parentheses the grammar allows.
inline std::string print(const Formula& f) {
  std::string out;
  detail::print_to(out, f);
  return out;
}

/// Identifiers that are not of the form p<N> (N >= 1, no leading zero) get
/// fresh indices above every p<N> in the input, in order of first occurrence.
class VariableNames {
 public:
  int index_of(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? 0 : it->second;
  }
  const std::map<std::string, int, std::less<>>& entries() const { return by_name_; }

 private:
  friend class Parser;
  std::map<std::string, int, std::less<>> by_name_;
};

/// Parses the canonical index out of "p<N>"; nullopt for any other ident.
inline std::optional<int> canonical_var_index(std::string_view ident) {
  if (ident.size() < 2 || ident[0] != 'p' || ident[1] == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), value);
  if (ec != std::errc{} || ptr != ident.data() + ident.size() || value < 1) return std::nullopt;
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, VariableNames& names) : text_(text), names_(names) {
    tokenize();
  }

  Formula parse() {
    if (tokens_.size() == 1) throw ParseError(0, "empty input");
    int next_fresh = 1;
    for (const Token& t : tokens_) {
      if (t.kind != Tok::ident) continue;
      if (auto idx = canonical_var_index(t.text)) next_fresh = std::max(next_fresh, *idx + 1);
    }
    for (const Token& t : tokens_) {
      if (t.kind != Tok::ident || canonical_var_index(t.text)) continue;
      if (names_.by_name_.emplace(std::string(t.text), next_fresh).second) ++next_fresh;
    }
    Formula f = parse_impl();
    if (peek().kind != Tok::end) fail("unexpected " + describe(peek()));
    return f;
  }

 private:
  enum class Tok { ident, neg, conj, disj, arrow, lparen, rparen, end };
  struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
  };

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const unsigned char c = static_cast<unsigned char>(text_[i]);
      if (std::isspace(c)) {
        ++i;
      } else if (std::isalpha(c)) {
        std::size_t j = i + 1;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
          ++j;
        }
        tokens_.push_back({Tok::ident, text_.substr(i, j - i), i});
        i = j;
      } else if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
        tokens_.push_back({Tok::arrow, text_.substr(i, 2), i});
        i += 2;
      } else {
        Tok kind;
        switch (c) {
          case '~': kind = Tok::neg; break;
          case '&': kind = Tok::conj; break;
          case '|': kind = Tok::disj; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          default:
            throw ParseError(i, std::string("unexpected character '") + text_[i] + "'");
        }
        tokens_.push_back({kind, text_.substr(i, 1), i});
        ++i;
      }
    }
    tokens_.push_back({Tok::end, {}, text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + std::string(t.text) + "'";
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(peek().offset, what);
  }

  Formula parse_impl() {
    Formula lhs = parse_disj();
    if (peek().kind == Tok::arrow) {
      advance();
      return Formula::implies(std::move(lhs), parse_impl());
    }
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (peek().kind == Tok::disj) {
      advance();
      f = Formula::disj(std::move(f), parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_neg();
    while (peek().kind == Tok::conj) {
      advance();
      f = Formula::conj(std::move(f), parse_neg());
    }
    return f;
  }

  Formula parse_neg() {
    if (peek().kind == Tok::neg) {
      advance();
      return Formula::neg(parse_neg());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      advance();
      if (auto idx = canonical_var_index(t.text)) return Formula::var(*idx);
      return Formula::var(names_.index_of(t.text));
    }
    if (t.kind == Tok::lparen) {
      advance();
      Formula f = parse_impl();
      if (peek().kind != Tok::rparen) fail("expected ')' but found " + describe(peek()));
      advance();
      return f;
    }
    fail("expected a formula but found " + describe(t));
  }

  std::string_view text_;
  VariableNames& names_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline Formula parse(std::string_view text, VariableNames& names) {
  return Parser(text, names).parse();
}

inline Formula parse(std::string_view text) {
  VariableNames names;
  return parse(text, names);
}

namespace detail {

inline Formula fold_left(std::vector<Formula> items, Formula (*combine)(Formula, Formula)) {
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = combine(std::move(acc), items[i]);
  return acc;
}

inline void require_positive(int k, const char* what) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " requires k >= 1, got " + std::to_string(k));
  }
}

}  // namespace detail

/// The generalized weak excluded middle with k variables.
/// k = 1 gives ~p1 | ~~p1; for k > 1 the disjuncts (~pi -> ~pj), i != j, come
/// in lexicographic order followed by ~(~p1 & ... & ~pk).
inline Formula gen_phi(int k) {
  detail::require_positive(k, "gen_phi");
  if (k == 1) return Formula::disj(Formula::neg(var(1)), Formula::neg(Formula::neg(var(1))));
  std::vector<Formula> disjuncts;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i != j) disjuncts.push_back(Formula::implies(Formula::neg(var(i)), Formula::neg(var(j))));
    }
  }
  std::vector<Formula> negs;
  for (int i = 1; i <= k; ++i) negs.push_back(Formula::neg(var(i)));
  disjuncts.push_back(Formula::neg(detail::fold_left(std::move(negs), &Formula::conj)));
  return detail::fold_left(std::move(disjuncts), &Formula::disj);
}

/// Smorynski's topwidth-k axiom over k+1 variables p1..p(k+1).
inline Formula gen_sigma(int k) {
  detail::require_positive(k, "gen_sigma");
  const int n = k + 1;
  std::vector<Formula> conjuncts;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      conjuncts.push_back(Formula::neg(Formula::conj(Formula::neg(var(i)), Formula::neg(var(j)))));
    }
  }
  std::vector<Formula> disjuncts;
  for (int i = 1; i <= n; ++i) {
    std::vector<Formula> others;
    for (int j = 1; j <= n; ++j) {
      if (j != i) others.push_back(Formula::neg(var(j)));
    }
    disjuncts.push_back(Formula::implies(Formula::neg(var(i)),
                                         detail::fold_left(std::move(others), &Formula::disj)));
  }
  return Formula::implies(detail::fold_left(std::move(conjuncts), &Formula::conj),
                          detail::fold_left(std::move(disjuncts), &Formula::disj));
}

}  // namespace wlem
