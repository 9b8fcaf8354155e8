#pragma once

// Evaluation of expressions in a configured algebra, deterministic
// rendering of normal forms, and the structure maps exposed by the CLI.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "hcl/covering.hpp"
#include "hcl/expr.hpp"

namespace hcl {

enum class Algebra : uint8_t {
  Ahc,         // Hecke-Clifford: x, c, s
  Spin,        // spin affine: b, t
  Cover,       // covering: X, T, z
  Lusztig,     // z = 1 quotient: x, s
  FiniteSpin,  // spin Weyl group algebra: t
  Clifford,    // C_n: c
  Semidirect,  // C_n x| CW: c, s
  TensorFin,   // C_n (x) CW^-: c, t
  TensorSpin,  // C_n (x) spin affine: c, b, t
};

std::string algebra_id(Algebra a);
/// Throws std::invalid_argument for an unknown id.
Algebra parse_algebra(std::string_view id);
const std::vector<Algebra>& all_algebras();

struct SessionConfig {
  Algebra algebra = Algebra::Ahc;
  WeylType type = type_A(2);
  /// Substituted at output time only.
  std::optional<Cyc8> u;
  std::optional<Cyc8> v;
};

using Value = std::variant<AhcElt, SahElt, CoverElt, LusztigElt, SpinWeylElt, CliffordElt,
                           SemidirectElt, TensorElt, TensorSpinElt>;

Algebra algebra_of(const Value& v);

/// Illegal atom or index out of range; carries the source offset.
class EvalError : public std::runtime_error {
 public:
  EvalError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

/// Throws EvalError for atoms outside the algebra or indices out of range.
void check_atoms(const Expr& e, Algebra a, const WeylType& t);
Value eval(const Expr& e, Algebra a, const WeylType& t);
Value eval(std::string_view src, const SessionConfig& cfg);

/// Product of two values of the same algebra.
Value multiply(const Value& a, const Value& b);

/// Terms ordered by (|alpha|, alpha, Clifford part or z, canonical word),
/// each compared lexicographically, then stably split so that terms with a
/// positive leading coefficient come first. "0" for zero.
std::string render(const Value& v, const SessionConfig& cfg);
std::string render_scalar(const Scalar& s);
/// render(eval(src)).
std::string normal_form(std::string_view src, const SessionConfig& cfg);

enum class MapKind : uint8_t { Phi, Psi, PhiFin, PsiFin, Omega, Tau1, Tau2, Sigma, Up, Um };
MapKind parse_map(std::string_view id);
std::string map_id(MapKind m);
/// The algebra the argument is read in. The involutions act on the
/// Hecke-Clifford algebra unless `requested` is the spin algebra.
Algebra map_domain(MapKind m, Algebra requested);
/// Throws std::invalid_argument when v lies in the wrong algebra.
Value apply_map(MapKind m, const Value& v);

}  // namespace hcl
