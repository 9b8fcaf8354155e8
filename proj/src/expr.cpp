#include "hcl/expr.hpp"

#include <cctype>

namespace hcl {

std::string atom_name(AtomKind k) {
  switch (k) {
    case AtomKind::X: return "x";
    case AtomKind::C: return "c";
    case AtomKind::S: return "s";
    case AtomKind::T: return "t";
    case AtomKind::B: return "b";
    case AtomKind::CoverX: return "X";
    case AtomKind::CoverT: return "T";
    case AtomKind::Z: return "z";
    case AtomKind::U: return "u";
    case AtomKind::V: return "v";
    case AtomKind::I: return "i";
    case AtomKind::R2: return "r2";
    case AtomKind::Literal: return "literal";
  }
  return "?";
}

bool atom_indexed(AtomKind k) { return k <= AtomKind::CoverT; }

namespace {

constexpr int kMaxExponent = 256;

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t p = 0;
  const auto digits = [&](size_t q) {
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    return q;
  };
  while (p < s.size()) {
    const char ch = s[p];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++p;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t q = digits(p);
      // A denominator is part of the literal only when written without spaces.
      if (q + 1 < s.size() && s[q] == '/' && std::isdigit(static_cast<unsigned char>(s[q + 1])))
        q = digits(q + 1);
      out.push_back({Token::Kind::Number, std::string(s.substr(p, q - p)), p});
      p = q;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t q = p;
      while (q < s.size() && std::isalpha(static_cast<unsigned char>(s[q]))) ++q;
      q = digits(q);
      out.push_back({Token::Kind::Ident, std::string(s.substr(p, q - p)), p});
      p = q;
      continue;
    }
    if (std::string_view("+-*^()").find(ch) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, ch), p});
      ++p;
      continue;
    }
    throw ParseError(p, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

ExprPtr node(Expr::Op op, size_t pos) {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->pos = pos;
  return e;
}

ExprPtr binary(Expr::Op op, size_t pos, ExprPtr a, ExprPtr b) {
  ExprPtr e = node(op, pos);
  e->args.push_back(std::move(a));
  e->args.push_back(std::move(b));
  return e;
}

ExprPtr make_atom(const Token& t) {
  ExprPtr e = node(Expr::Op::Atom, t.pos);
  const std::string& s = t.text;
  if (s == "z" || s == "u" || s == "v" || s == "i" || s == "r2") {
    e->atom = s == "z" ? AtomKind::Z
              : s == "u" ? AtomKind::U
              : s == "v" ? AtomKind::V
              : s == "i" ? AtomKind::I
                         : AtomKind::R2;
    return e;
  }
  static const std::string letters = "xcstbXT";
  const size_t k = letters.find(s[0]);
  if (s.size() < 2 || k == std::string::npos || !std::isdigit(static_cast<unsigned char>(s[1])))
    throw ParseError(t.pos, "unknown atom '" + s + "'");
  e->atom = static_cast<AtomKind>(k);
  const std::string idx = s.substr(1);
  if (idx.size() > 3 || idx[0] == '0') throw ParseError(t.pos, "bad index in '" + s + "'");
  e->index = std::stoi(idx);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) throw ParseError(peek().pos, "expected operator, found '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }

  ExprPtr expr() {
    ExprPtr e = term();
    while (symbol('+') || symbol('-')) {
      const Token op = toks_[at_++];
      e = binary(op.text == "+" ? Expr::Op::Add : Expr::Op::Sub, op.pos, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (symbol('*')) {
      const size_t pos = toks_[at_++].pos;
      e = binary(Expr::Op::Mul, pos, std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    const Token& t = peek();
    if (symbol('-')) {
      ++at_;
      ExprPtr e = node(Expr::Op::Neg, t.pos);
      e->args.push_back(factor());
      return e;
    }
    ExprPtr base;
    if (symbol('(')) {
      ++at_;
      base = expr();
      if (!symbol(')')) throw ParseError(peek().pos, "expected ')'");
      ++at_;
    } else if (t.kind == Token::Kind::Number) {
      base = node(Expr::Op::Atom, t.pos);
      base->atom = AtomKind::Literal;
      base->value = Rational(t.text);
      base->value.canonicalize();
      if (base->value.get_den() == 0) throw ParseError(t.pos, "zero denominator");
      ++at_;
    } else if (t.kind == Token::Kind::Ident) {
      base = make_atom(t);
      ++at_;
    } else {
      throw ParseError(t.pos, t.kind == Token::Kind::End ? "unexpected end of input"
                                                         : "unexpected '" + t.text + "'");
    }
    if (!symbol('^')) return base;
    const size_t pos = toks_[at_++].pos;
    const Token& n = peek();
    if (n.kind != Token::Kind::Number || n.text.find('/') != std::string::npos)
      throw ParseError(n.pos, "expected a natural exponent");
    if (n.text.size() > 3 || std::stoi(n.text) > kMaxExponent) throw ParseError(n.pos, "exponent too large");
    ExprPtr e = node(Expr::Op::Pow, pos);
    e->exponent = std::stoi(n.text);
    e->args.push_back(std::move(base));
    ++at_;
    return e;
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view src) { return Parser(src).run(); }

std::string print(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add: return "(" + print(*e.args[0]) + " + " + print(*e.args[1]) + ")";
    case Expr::Op::Sub: return "(" + print(*e.args[0]) + " - " + print(*e.args[1]) + ")";
    case Expr::Op::Mul: return "(" + print(*e.args[0]) + "*" + print(*e.args[1]) + ")";
    case Expr::Op::Neg: return "-(" + print(*e.args[0]) + ")";
    case Expr::Op::Pow: return "(" + print(*e.args[0]) + ")^" + std::to_string(e.exponent);
    case Expr::Op::Atom:
      if (e.atom == AtomKind::Literal) return e.value.get_str();
      return atom_indexed(e.atom) ? atom_name(e.atom) + std::to_string(e.index) : atom_name(e.atom);
  }
  return "";
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  if (a.op == Expr::Op::Atom)
    return a.atom == b.atom && a.index == b.index && (a.atom != AtomKind::Literal || a.value == b.value);
  if (a.op == Expr::Op::Pow && a.exponent != b.exponent) return false;
  for (size_t k = 0; k < a.args.size(); ++k)
    if (!same_tree(*a.args[k], *b.args[k])) return false;
  return true;
}

}  // namespace hcl
