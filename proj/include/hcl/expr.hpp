#pragma once

// The text expression language: lexer, recursive-descent parser and a
// printer for the syntax tree.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)? | '(' expr ')' ('^' nat)?

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcl/scalar.hpp"

namespace hcl {

/// Carries the 0-based offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

enum class AtomKind : uint8_t {
  X,        // x_i
  C,        // c_i
  S,        // s_i
  T,        // t_i
  B,        // b_i
  CoverX,   // X_i
  CoverT,   // T_i
  Z,        // z
  U,        // u
  V,        // v
  I,        // sqrt(-1)
  R2,       // sqrt(2)
  Literal,  // rational
};

/// Source spelling of an indexed atom's letter, or the whole name otherwise.
std::string atom_name(AtomKind k);
bool atom_indexed(AtomKind k);

struct Expr {
  enum class Op : uint8_t { Add, Sub, Mul, Neg, Pow, Atom };
  Op op = Op::Atom;
  AtomKind atom = AtomKind::Literal;
  int index = 0;
  Rational value;
  /// Exponent of Pow.
  int exponent = 0;
  size_t pos = 0;
  std::vector<std::unique_ptr<Expr>> args;
};
using ExprPtr = std::unique_ptr<Expr>;

ExprPtr parse(std::string_view src);

/// Fully parenthesized; parse(print(e)) has the same tree as e.
std::string print(const Expr& e);
bool same_tree(const Expr& a, const Expr& b);

}  // namespace hcl
