#include "hcl/session.hpp"

#include <algorithm>
#include <tuple>

namespace hcl {

namespace {

const char* const kAlgebraIds[] = {"ahc",        "spin",      "cover",      "lusztig",    "finite-spin",
                                   "clifford",   "semidirect", "tensor-fin", "tensor-spin"};
const char* const kMapIds[] = {"phi", "psi", "phi-fin", "psi-fin", "omega",
                               "tau1", "tau2", "sigma", "up", "um"};

bool atom_allowed(AtomKind k, Algebra a) {
  switch (k) {
    case AtomKind::U:
    case AtomKind::V:
    case AtomKind::I:
    case AtomKind::R2:
    case AtomKind::Literal: return true;
    case AtomKind::X: return a == Algebra::Ahc || a == Algebra::Lusztig;
    case AtomKind::C:
      return a == Algebra::Ahc || a == Algebra::Clifford || a == Algebra::Semidirect ||
             a == Algebra::TensorFin || a == Algebra::TensorSpin;
    case AtomKind::S: return a == Algebra::Ahc || a == Algebra::Lusztig || a == Algebra::Semidirect;
    case AtomKind::T:
      return a == Algebra::Spin || a == Algebra::FiniteSpin || a == Algebra::TensorFin ||
             a == Algebra::TensorSpin;
    case AtomKind::B: return a == Algebra::Spin || a == Algebra::TensorSpin;
    case AtomKind::CoverX:
    case AtomKind::CoverT:
    case AtomKind::Z: return a == Algebra::Cover;
  }
  return false;
}

int index_bound(AtomKind k, const WeylType& t) {
  switch (k) {
    case AtomKind::S:
    case AtomKind::T:
    case AtomKind::CoverT: return t.generators();
    default: return t.n;
  }
}

Scalar scalar_atom(const Expr& e) {
  switch (e.atom) {
    case AtomKind::U: return Scalar::u();
    case AtomKind::V: return Scalar::v();
    case AtomKind::I: return named_constant("i");
    case AtomKind::R2: return named_constant("sqrt2");
    default: return Scalar(e.value);
  }
}

bool is_scalar_atom(AtomKind k) { return k >= AtomKind::U; }

// Per-algebra constructors for the evaluator.
template <class E>
struct Ops;

template <>
struct Ops<AhcElt> {
  static AhcElt scalar(const WeylGroup& g, const Scalar& c) { return ahc_scalar(g, c); }
  static AhcElt atom(const WeylGroup& g, AtomKind k, int i) {
    if (k == AtomKind::X) return ahc_x(g, i);
    if (k == AtomKind::C) return ahc_c(g, i);
    return ahc_s(g, i);
  }
};
template <>
struct Ops<SahElt> {
  static SahElt scalar(const WeylGroup& g, const Scalar& c) { return sah_scalar(g, c); }
  static SahElt atom(const WeylGroup& g, AtomKind k, int i) {
    return k == AtomKind::B ? sah_b(g, i) : sah_t(g, i);
  }
};
template <>
struct Ops<CoverElt> {
  static CoverElt scalar(const WeylGroup& g, const Scalar& c) { return cover_scalar(g, c); }
  static CoverElt atom(const WeylGroup& g, AtomKind k, int i) {
    if (k == AtomKind::Z) return cover_z(g);
    return k == AtomKind::CoverX ? cover_x(g, i) : cover_t(g, i);
  }
};
template <>
struct Ops<LusztigElt> {
  static LusztigElt scalar(const WeylGroup& g, const Scalar& c) { return lusztig_scalar(g, c); }
  static LusztigElt atom(const WeylGroup& g, AtomKind k, int i) {
    return k == AtomKind::X ? lusztig_x(g, i) : lusztig_s(g, i);
  }
};
template <>
struct Ops<SpinWeylElt> {
  static SpinWeylElt scalar(const WeylGroup& g, const Scalar& c) { return spin_basis(g, 0, c); }
  static SpinWeylElt atom(const WeylGroup& g, AtomKind, int i) { return spin_generator(g, i); }
};
template <>
struct Ops<CliffordElt> {
  static CliffordElt scalar(const WeylGroup& g, const Scalar& c) { return CliffordElt(g.rank(), c); }
  static CliffordElt atom(const WeylGroup& g, AtomKind, int i) { return CliffordElt::generator(g.rank(), i); }
};
template <>
struct Ops<SemidirectElt> {
  static SemidirectElt scalar(const WeylGroup& g, const Scalar& c) { return SemidirectElt(g, {0, 0}, c); }
  static SemidirectElt atom(const WeylGroup& g, AtomKind k, int i) {
    if (k == AtomKind::C) return semidirect_clifford(g, CliffordElt::generator(g.rank(), i));
    return semidirect_group(g, g.generator(i));
  }
};
template <>
struct Ops<TensorElt> {
  static TensorElt scalar(const WeylGroup& g, const Scalar& c) { return TensorElt(g, {0, 0}, c); }
  static TensorElt atom(const WeylGroup& g, AtomKind k, int i) {
    if (k == AtomKind::C) return tensor_clifford(g, CliffordElt::generator(g.rank(), i));
    return tensor_spin(g, spin_generator(g, i));
  }
};
template <>
struct Ops<TensorSpinElt> {
  static TensorSpinElt scalar(const WeylGroup& g, const Scalar& c) { return TensorSpinElt(g, {}, c); }
  static TensorSpinElt atom(const WeylGroup& g, AtomKind k, int i) {
    if (k == AtomKind::C) return ts_clifford(g, CliffordElt::generator(g.rank(), i));
    return ts_spin_affine(k == AtomKind::B ? sah_b(g, i) : sah_t(g, i));
  }
};

template <class E>
E eval_as(const Expr& e, const WeylGroup& g) {
  using O = Ops<E>;
  switch (e.op) {
    case Expr::Op::Add: return eval_as<E>(*e.args[0], g) + eval_as<E>(*e.args[1], g);
    case Expr::Op::Sub: return eval_as<E>(*e.args[0], g) - eval_as<E>(*e.args[1], g);
    case Expr::Op::Mul: return eval_as<E>(*e.args[0], g) * eval_as<E>(*e.args[1], g);
    case Expr::Op::Neg: return -eval_as<E>(*e.args[0], g);
    case Expr::Op::Pow: {
      const E base = eval_as<E>(*e.args[0], g);
      E r = O::scalar(g, 1);
      for (int k = 0; k < e.exponent; ++k) r = r * base;
      return r;
    }
    case Expr::Op::Atom:
      if (is_scalar_atom(e.atom)) return O::scalar(g, scalar_atom(e));
      return O::atom(g, e.atom, e.index);
  }
  return O::scalar(g, 0);
}

// Rendering.

struct Flat {
  Rational q;
  int basis;  // 0: 1, 1: i, 2: r2, 3: i*r2
  int du, dv;
};

std::vector<Flat> flatten(const Scalar& s) {
  std::vector<Flat> out;
  for (const ScalarTerm& t : s.terms()) {
    const auto c = t.coeff.sugar_coords();
    for (int b = 0; b < 4; ++b)
      if (c[b] != 0) out.push_back({c[b], b, t.du, t.dv});
  }
  // Lower total degree first, u before v.
  std::stable_sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    return std::tuple(a.du + a.dv, -a.du) < std::tuple(b.du + b.dv, -b.du);
  });
  return out;
}

std::string flat_factors(const Flat& f, bool keep_one) {
  std::vector<std::string> parts;
  const Rational a = abs(f.q);
  if (a != 1) parts.push_back(to_string(a));
  if (f.basis == 1 || f.basis == 3) parts.push_back("i");
  if (f.basis >= 2) parts.push_back("r2");
  const auto power = [&](const char* name, int d) {
    if (d == 1) parts.push_back(name);
    else if (d > 1) parts.push_back(std::string(name) + "^" + std::to_string(d));
  };
  power("u", f.du);
  power("v", f.dv);
  if (parts.empty()) return keep_one ? "1" : "";
  std::string r = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) r += "*" + parts[k];
  return r;
}

// Joins signed pieces "a", "- b", "+ c".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string r;
  for (size_t k = 0; k < pieces.size(); ++k) {
    const auto& [neg, text] = pieces[k];
    if (k == 0) r += neg ? "-" + text : text;
    else r += (neg ? " - " : " + ") + text;
  }
  return r;
}

// Sign and text of c * monomial with the sign pulled out front.
std::pair<bool, std::string> render_term(const Scalar& c, const std::string& monomial) {
  const std::vector<Flat> flat = flatten(c);
  const bool neg = flat.front().q < 0;
  std::string coeff;
  if (flat.size() == 1) {
    coeff = flat_factors(flat.front(), monomial.empty());
  } else {
    std::vector<std::pair<bool, std::string>> inner;
    for (const Flat& f : flat) inner.push_back({(f.q < 0) != neg, flat_factors(f, true)});
    coeff = "(" + join_signed(inner) + ")";
  }
  if (coeff.empty()) return {neg, monomial};
  if (monomial.empty()) return {neg, coeff};
  return {neg, coeff + "*" + monomial};
}

using SortKey = std::tuple<int, std::vector<int>, std::vector<int>, std::vector<int>>;

struct Piece {
  SortKey key;
  std::string monomial;
  Scalar coeff;
};

struct Monomial {
  std::vector<std::string> parts;
  SortKey key;
};

void add_alpha(Monomial& m, char letter, const Exponents& a, int n) {
  std::vector<int> alpha(a.begin(), a.begin() + n);
  int deg = 0;
  for (int j = 0; j < n; ++j) {
    deg += a[j];
    if (a[j] == 1) m.parts.push_back(letter + std::to_string(j + 1));
    else if (a[j] > 1) m.parts.push_back(letter + std::to_string(j + 1) + "^" + std::to_string(a[j]));
  }
  std::get<0>(m.key) = deg;
  std::get<1>(m.key) = alpha;
}

void add_mask(Monomial& m, CliffMask mask) {
  std::vector<int> idx;
  for (int j = 0; j < 32; ++j)
    if (mask >> j & 1u) {
      idx.push_back(j + 1);
      m.parts.push_back("c" + std::to_string(j + 1));
    }
  std::get<2>(m.key) = idx;
}

void add_word(Monomial& m, char letter, const WeylGroup& g, uint32_t w) {
  const std::vector<int>& word = g.word(w);
  for (int i : word) m.parts.push_back(letter + std::to_string(i));
  std::get<3>(m.key) = word;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string r;
  for (const std::string& p : parts) r += (r.empty() ? "" : "*") + p;
  return r;
}

Monomial monomial_of(const WeylGroup& g, const AhcKey& k) {
  Monomial m;
  add_alpha(m, 'x', k.alpha, g.rank());
  add_mask(m, k.mask);
  add_word(m, 's', g, k.w);
  return m;
}
Monomial monomial_of(const WeylGroup& g, const SahKey& k) {
  Monomial m;
  add_alpha(m, 'b', k.alpha, g.rank());
  add_word(m, 't', g, k.w);
  return m;
}
Monomial monomial_of(const WeylGroup& g, const CoverKey& k) {
  Monomial m;
  if (k.zbit) m.parts.push_back("z");
  add_alpha(m, 'X', k.alpha, g.rank());
  std::get<2>(m.key) = {k.zbit};
  add_word(m, 'T', g, k.w);
  return m;
}
Monomial monomial_of(const WeylGroup& g, const LusztigKey& k) {
  Monomial m;
  add_alpha(m, 'x', k.alpha, g.rank());
  add_word(m, 's', g, k.w);
  return m;
}
Monomial monomial_of(const WeylGroup& g, const TensorSpinKey& k) {
  Monomial m;
  add_mask(m, k.mask);
  add_alpha(m, 'b', k.alpha, g.rank());
  add_word(m, 't', g, k.w);
  return m;
}

template <class E>
std::vector<Piece> pieces_of(const E& e, char word_letter = 0) {
  std::vector<Piece> out;
  if (e.is_zero()) return out;
  const WeylGroup& g = e.group();
  for (const auto& [k, c] : e.terms()) {
    Monomial m;
    if constexpr (std::is_same_v<typename E::key_type, uint32_t>) {
      add_word(m, 't', g, k);
    } else if constexpr (std::is_same_v<typename E::key_type, std::pair<CliffMask, uint32_t>>) {
      add_mask(m, k.first);
      add_word(m, word_letter, g, k.second);
    } else {
      m = monomial_of(g, k);
    }
    out.push_back({m.key, joined(m.parts), c});
  }
  return out;
}

std::vector<Piece> pieces(const Value& v) {
  return std::visit(
      [](const auto& e) -> std::vector<Piece> {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, CliffordElt>) {
          std::vector<Piece> out;
          for (const auto& [mask, c] : e.terms()) {
            Monomial m;
            add_mask(m, mask);
            out.push_back({m.key, joined(m.parts), c});
          }
          return out;
        } else if constexpr (std::is_same_v<E, SemidirectElt>) {
          return pieces_of(e, 's');
        } else if constexpr (std::is_same_v<E, TensorElt>) {
          return pieces_of(e, 't');
        } else {
          return pieces_of(e);
        }
      },
      v);
}

}  // namespace

std::string algebra_id(Algebra a) { return kAlgebraIds[static_cast<int>(a)]; }

Algebra parse_algebra(std::string_view id) {
  for (int k = 0; k < 9; ++k)
    if (id == kAlgebraIds[k]) return static_cast<Algebra>(k);
  throw std::invalid_argument("unknown algebra: " + std::string(id));
}

const std::vector<Algebra>& all_algebras() {
  static const std::vector<Algebra> all{Algebra::Ahc,        Algebra::Spin,       Algebra::Cover,
                                        Algebra::Lusztig,    Algebra::FiniteSpin, Algebra::Clifford,
                                        Algebra::Semidirect, Algebra::TensorFin,  Algebra::TensorSpin};
  return all;
}

Algebra algebra_of(const Value& v) { return static_cast<Algebra>(v.index()); }

void check_atoms(const Expr& e, Algebra a, const WeylType& t) {
  if (e.op != Expr::Op::Atom) {
    for (const auto& arg : e.args) check_atoms(*arg, a, t);
    return;
  }
  const std::string name =
      atom_indexed(e.atom) ? atom_name(e.atom) + std::to_string(e.index) : atom_name(e.atom);
  if (!atom_allowed(e.atom, a)) throw EvalError(e.pos, "atom not in algebra " + algebra_id(a) + ": " + name);
  if (atom_indexed(e.atom) && (e.index < 1 || e.index > index_bound(e.atom, t)))
    throw EvalError(e.pos, "index out of range for " + to_string(t) + ": " + name);
}

Value eval(const Expr& e, Algebra a, const WeylType& t) {
  check_atoms(e, a, t);
  const WeylGroup& g = WeylGroup::get(t);
  switch (a) {
    case Algebra::Ahc: return eval_as<AhcElt>(e, g);
    case Algebra::Spin: return eval_as<SahElt>(e, g);
    case Algebra::Cover: return eval_as<CoverElt>(e, g);
    case Algebra::Lusztig: return eval_as<LusztigElt>(e, g);
    case Algebra::FiniteSpin: return eval_as<SpinWeylElt>(e, g);
    case Algebra::Clifford: return eval_as<CliffordElt>(e, g);
    case Algebra::Semidirect: return eval_as<SemidirectElt>(e, g);
    case Algebra::TensorFin: return eval_as<TensorElt>(e, g);
    case Algebra::TensorSpin: return eval_as<TensorSpinElt>(e, g);
  }
  throw std::logic_error("unreachable algebra");
}

Value eval(std::string_view src, const SessionConfig& cfg) {
  const ExprPtr e = parse(src);
  return eval(*e, cfg.algebra, cfg.type);
}

Value multiply(const Value& a, const Value& b) {
  if (a.index() != b.index()) throw std::invalid_argument("factors lie in different algebras");
  return std::visit(
      [&](const auto& x) -> Value {
        using E = std::decay_t<decltype(x)>;
        return x * std::get<E>(b);
      },
      a);
}

std::string render_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  const auto [neg, text] = render_term(s, "");
  return neg ? "-" + text : text;
}

std::string render(const Value& v, const SessionConfig& cfg) {
  std::vector<Piece> ps = pieces(v);
  if (cfg.u || cfg.v) {
    for (Piece& p : ps) p.coeff = specialize_partial(p.coeff, cfg.u, cfg.v);
    std::erase_if(ps, [](const Piece& p) { return p.coeff.is_zero(); });
  }
  std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) { return a.key < b.key; });
  std::vector<std::pair<bool, std::string>> signed_terms;
  for (const Piece& p : ps) signed_terms.push_back(render_term(p.coeff, p.monomial));
  std::stable_partition(signed_terms.begin(), signed_terms.end(), [](const auto& t) { return !t.first; });
  return join_signed(signed_terms);
}

std::string normal_form(std::string_view src, const SessionConfig& cfg) { return render(eval(src, cfg), cfg); }

MapKind parse_map(std::string_view id) {
  for (int k = 0; k < 10; ++k)
    if (id == kMapIds[k]) return static_cast<MapKind>(k);
  throw std::invalid_argument("unknown map: " + std::string(id));
}

std::string map_id(MapKind m) { return kMapIds[static_cast<int>(m)]; }

Algebra map_domain(MapKind m, Algebra requested) {
  switch (m) {
    case MapKind::Phi: return Algebra::Ahc;
    case MapKind::Psi: return Algebra::TensorSpin;
    case MapKind::PhiFin: return Algebra::Semidirect;
    case MapKind::PsiFin: return Algebra::TensorFin;
    case MapKind::Omega: return Algebra::FiniteSpin;
    case MapKind::Tau1:
    case MapKind::Tau2:
    case MapKind::Sigma: return requested == Algebra::Spin ? Algebra::Spin : Algebra::Ahc;
    case MapKind::Up:
    case MapKind::Um: return Algebra::Cover;
  }
  throw std::logic_error("unreachable map");
}

Value apply_map(MapKind m, const Value& v) {
  const auto wrong = [&]() -> Value {
    throw std::invalid_argument("map " + map_id(m) + " does not apply to algebra " + algebra_id(algebra_of(v)));
  };
  const auto involution = [&](Involution inv) -> Value {
    if (const auto* a = std::get_if<AhcElt>(&v)) return apply_involution(inv, *a);
    if (const auto* s = std::get_if<SahElt>(&v)) return apply_spin_involution(inv, *s);
    return wrong();
  };
  switch (m) {
    case MapKind::Phi:
      if (const auto* a = std::get_if<AhcElt>(&v)) return phi_affine(*a);
      return wrong();
    case MapKind::Psi:
      if (const auto* a = std::get_if<TensorSpinElt>(&v)) return psi_affine(*a);
      return wrong();
    case MapKind::PhiFin:
      if (const auto* a = std::get_if<SemidirectElt>(&v)) return phi_fin(*a);
      return wrong();
    case MapKind::PsiFin:
      if (const auto* a = std::get_if<TensorElt>(&v)) return psi_fin(*a);
      return wrong();
    case MapKind::Omega:
      if (const auto* a = std::get_if<SpinWeylElt>(&v)) {
        if (a->is_zero()) return CliffordElt(a->group_ptr() ? a->rank() : 0);
        return omega(*a);
      }
      return wrong();
    case MapKind::Tau1: return involution(Involution::Tau1);
    case MapKind::Tau2: return involution(Involution::Tau2);
    case MapKind::Sigma: return involution(Involution::Sigma);
    case MapKind::Up:
      if (const auto* a = std::get_if<CoverElt>(&v)) return upsilon_plus(*a);
      return wrong();
    case MapKind::Um:
      if (const auto* a = std::get_if<CoverElt>(&v)) return upsilon_minus(*a);
      return wrong();
  }
  return wrong();
}

}  // namespace hcl
