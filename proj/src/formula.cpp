#include "esakia/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "esakia/errors.hpp"

namespace esakia {

Formula::Formula(Kind k, std::string name, std::shared_ptr<const Formula> l,
                 std::shared_ptr<const Formula> r)
    : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

Formula Formula::var(std::string name) { return Formula(Kind::var, std::move(name), nullptr, nullptr); }
Formula Formula::bottom() { return Formula(Kind::bottom, "", nullptr, nullptr); }
Formula Formula::top() { return Formula(Kind::top, "", nullptr, nullptr); }

Formula Formula::conj(Formula a, Formula b) {
  return Formula(Kind::conj, "", std::make_shared<const Formula>(std::move(a)),
                 std::make_shared<const Formula>(std::move(b)));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(Kind::disj, "", std::make_shared<const Formula>(std::move(a)),
                 std::make_shared<const Formula>(std::move(b)));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(Kind::implies, "", std::make_shared<const Formula>(std::move(a)),
                 std::make_shared<const Formula>(std::move(b)));
}

Formula Formula::neg(Formula a) { return implies(std::move(a), bottom()); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Formula::Kind::var:
      return a.name_ == b.name_;
    case Formula::Kind::bottom:
    case Formula::Kind::top:
      return true;
    default:
      return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
}

namespace {

enum class Tok { ident, zero, one, neg, conj, disj, arrow, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '0' || c == '1') {
      if (i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1])))
        throw ParseError("identifiers cannot start with a digit", i);
      out.push_back({c == '0' ? Tok::zero : Tok::one, std::string(1, c), i});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::neg, "~", i++});
    } else if (c == '&') {
      out.push_back({Tok::conj, "&", i++});
    } else if (c == '|') {
      out.push_back({Tok::disj, "|", i++});
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", i++});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = implication();
    if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::arrow) {
      take();
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::disj) {
      take();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::conj) {
      take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::neg:
        return Formula::neg(unary());
      case Tok::ident:
        return Formula::var(t.text);
      case Tok::zero:
        return Formula::bottom();
      case Tok::one:
        return Formula::top();
      case Tok::lparen: {
        Formula f = implication();
        if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        take();
        return f;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer: higher binds tighter.
int precedence(const Formula& f) {
  if (f.is_negation()) return 4;
  switch (f.kind()) {
    case Formula::Kind::implies:
      return 1;
    case Formula::Kind::disj:
      return 2;
    case Formula::Kind::conj:
      return 3;
    default:
      return 5;
  }
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(f, out);
  if (wrap) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  int p = precedence(f);
  if (f.is_negation()) {
    out += '~';
    print_wrapped(f.left(), precedence(f.left()) < 4, out);
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::var:
      out += f.name();
      return;
    case Formula::Kind::bottom:
      out += '0';
      return;
    case Formula::Kind::top:
      out += '1';
      return;
    case Formula::Kind::implies:
      print_wrapped(f.left(), precedence(f.left()) <= p, out);
      out += " -> ";
      print_wrapped(f.right(), precedence(f.right()) < p, out);
      return;
    case Formula::Kind::disj:
    case Formula::Kind::conj:
      print_wrapped(f.left(), precedence(f.left()) < p, out);
      out += f.kind() == Formula::Kind::disj ? " | " : " & ";
      print_wrapped(f.right(), precedence(f.right()) <= p, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::size_t implication_rank(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::var:
    case Formula::Kind::bottom:
    case Formula::Kind::top:
      return 0;
    case Formula::Kind::implies:
      return 1 + std::max(implication_rank(f.left()), implication_rank(f.right()));
    default:
      return std::max(implication_rank(f.left()), implication_rank(f.right()));
  }
}

std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::var:
    case Formula::Kind::bottom:
    case Formula::Kind::top:
      return 1;
    default:
      return 1 + formula_size(f.left()) + formula_size(f.right());
  }
}

namespace {

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::var:
      out.insert(f.name());
      return;
    case Formula::Kind::bottom:
    case Formula::Kind::top:
      return;
    default:
      collect(f.left(), out);
      collect(f.right(), out);
  }
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

}  // namespace esakia
