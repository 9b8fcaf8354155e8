#include "hcl/suites.hpp"

#include <chrono>
#include <cstdlib>

#include "json.hpp"

#include "hcl/random_elements.hpp"
#include "hcl/word_oracle.hpp"

namespace hcl {

SuiteContext::SuiteContext(Report& report, uint64_t seed) : report_(report), rng_(seed) {}

void SuiteContext::expect(bool ok, const std::string& lhs, const std::string& rhs, const std::string& diff) {
  ++report_.cases;
  if (!ok) report_.failures.push_back({lhs, rhs, diff});
}

std::string SuiteContext::show(const Value& v) const {
  SessionConfig cfg;
  cfg.algebra = algebra_of(v);
  cfg.type = report_.type;
  return render(v, cfg);
}

namespace {

using Ctx = SuiteContext;

// Families and sizes.

bool is_abd(const WeylType& t) { return t.has_permutation_model(); }

std::function<bool(const WeylType&)> abd_up_to(int max_n) {
  return [max_n](const WeylType& t) { return is_abd(t) && t.n <= max_n; };
}

std::function<bool(const WeylType&)> only_d() {
  return [](const WeylType& t) { return t.family == Family::D && t.n >= 4 && t.n <= 5; };
}

const std::vector<WeylType> kSmall = {type_A(2), type_A(3), type_B(2), type_B(3), type_D(4)};
const std::vector<WeylType> kRelations = {type_A(2), type_A(3), type_A(4), type_B(2),
                                          type_B(3), type_B(4), type_D(4)};
const std::vector<WeylType> kRandom = {type_A(3), type_B(2), type_B(3), type_D(4)};

// Generators of each algebra.

std::vector<AhcElt> ahc_generators(const WeylGroup& g) {
  std::vector<AhcElt> out;
  for (int j = 1; j <= g.rank(); ++j) {
    out.push_back(ahc_x(g, j));
    out.push_back(ahc_c(g, j));
  }
  for (int i = 1; i <= g.generators(); ++i) out.push_back(ahc_s(g, i));
  return out;
}

std::vector<SemidirectElt> semidirect_generators(const WeylGroup& g) {
  std::vector<SemidirectElt> out;
  for (int j = 1; j <= g.rank(); ++j) out.push_back(semidirect_clifford(g, CliffordElt::generator(g.rank(), j)));
  for (int i = 1; i <= g.generators(); ++i) out.push_back(semidirect_group(g, g.generator(i)));
  return out;
}

std::vector<TensorElt> tensor_fin_generators(const WeylGroup& g) {
  std::vector<TensorElt> out;
  for (int j = 1; j <= g.rank(); ++j) out.push_back(tensor_clifford(g, CliffordElt::generator(g.rank(), j)));
  for (int i = 1; i <= g.generators(); ++i) out.push_back(tensor_spin(g, spin_generator(g, i)));
  return out;
}

std::vector<TensorSpinElt> tensor_spin_generators(const WeylGroup& g) {
  std::vector<TensorSpinElt> out;
  for (int j = 1; j <= g.rank(); ++j) {
    out.push_back(ts_clifford(g, CliffordElt::generator(g.rank(), j)));
    out.push_back(ts_spin_affine(sah_b(g, j)));
  }
  for (int i = 1; i <= g.generators(); ++i) out.push_back(ts_spin_affine(sah_t(g, i)));
  return out;
}

// Alternating product a b a ... with m factors.
template <class E, class F>
E alternating(const E& one, F gen, int first, int second, int m) {
  E p = one;
  for (int k = 0; k < m; ++k) p = p * gen(k % 2 ? second : first);
  return p;
}

Poly sq(int j) { return poly_mul(poly_var(j), poly_var(j)); }

// c_j^w as an element: sign(w(j)) c_|w(j)|.
CliffordElt clifford_image(const WeylType& t, int i, int j) {
  const int img = WeylElt::generator(t, i).image(j);
  const CliffordElt c = CliffordElt::generator(t.n, std::abs(img));
  return img < 0 ? -c : c;
}

AhcElt ind_as_ahc(const IndElt& m) {
  AhcElt r(m.group());
  for (const auto& [k, c] : m.terms()) r.add({k.alpha, k.mask, 0}, c);
  return r;
}

// Finite level.

void beta_braid(Ctx& ctx) {
  const WeylType& t = ctx.type();
  const int n = clifford_rank(t);
  for (int i = 1; i <= t.generators(); ++i)
    for (int j = 1; j <= t.generators(); ++j) {
      const int m = coxeter_order(t, i, j);
      ctx.equal(beta_braid_power(t, i, j), CliffordElt(n, m % 2 ? 1 : -1));
    }
}

void spin_weyl_relations(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const SpinWeylElt one = spin_basis(g, 0);
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = 1; j <= g.generators(); ++j) {
      const int m = coxeter_order(g.type(), i, j);
      SpinWeylElt q = one;
      for (int k = 0; k < m; ++k) q = q * spin_generator(g, i) * spin_generator(g, j);
      ctx.equal(q, m % 2 ? one : -one);
    }
  // Omega is multiplicative on basis pairs.
  const SpinWeyl& sw = SpinWeyl::get(g);
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(g.size() - 1));
  for (int k = 0; k < 100; ++k) {
    const uint32_t a = pick(ctx.rng()), b = pick(ctx.rng());
    ctx.equal(omega(spin_basis(g, a) * spin_basis(g, b)), sw.omega_basis(a) * sw.omega_basis(b));
  }
}

void cocycle_crosscheck(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const SpinWeyl& sw = SpinWeyl::get(g);
  for (uint32_t a = 0; a < g.size(); ++a)
    for (uint32_t b = 0; b < g.size(); ++b) {
      const int brute = cocycle_by_rewriting(g, a, b);
      const int table = sw.cocycle(a, b), direct = sw.cocycle_via_clifford(a, b);
      const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      ctx.expect(brute == table && brute == direct, "mu" + pair + " = " + std::to_string(table),
                 "rewriting" + pair + " = " + std::to_string(brute),
                 "clifford ratio = " + std::to_string(direct));
    }
}

void phi_psi_fin_inverse(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const auto gens = semidirect_generators(g);
  for (const auto& x : gens) {
    ctx.equal(psi_fin(phi_fin(x)), x);
    for (const auto& y : gens) ctx.equal(phi_fin(x * y), phi_fin(x) * phi_fin(y));
  }
  for (const auto& x : tensor_fin_generators(g)) ctx.equal(phi_fin(psi_fin(x)), x);
  for (int k = 0; k < 100; ++k) {
    const SemidirectElt a = random_semidirect(ctx.rng(), g);
    const TensorElt b = random_tensor_fin(ctx.rng(), g);
    ctx.equal(psi_fin(phi_fin(a)), a);
    ctx.equal(phi_fin(psi_fin(b)), b);
  }
}

// Defining relations.

void ahc_relations(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const AhcElt one = ahc_scalar(g, 1), u = ahc_scalar(g, Scalar::u());
  const auto x = [&](int j) { return ahc_x(g, j); };
  const auto c = [&](int j) { return ahc_c(g, j); };
  const auto s = [&](int i) { return ahc_s(g, i); };
  for (int j = 1; j <= n; ++j) {
    ctx.equal(c(j) * c(j), one);
    ctx.equal(x(j) * c(j), -(c(j) * x(j)));
    for (int k = 1; k <= n; ++k) {
      if (k == j) continue;
      ctx.equal(x(j) * x(k), x(k) * x(j));
      ctx.equal(c(j) * c(k), -(c(k) * c(j)));
      ctx.equal(x(j) * c(k), c(k) * x(j));
    }
  }
  for (int i = 1; i <= g.generators(); ++i) {
    for (int i2 = 1; i2 <= g.generators(); ++i2) {
      const int m = coxeter_order(t, i, i2);
      ctx.equal(alternating(one, s, i, i2, m), alternating(one, s, i2, i, m));
    }
    ctx.equal(s(i) * s(i), one);
    for (int j = 1; j <= n; ++j) {
      ctx.equal(s(i) * c(j), ahc_clifford(g, clifford_image(t, i, j)) * s(i));
      AhcElt rhs = x(j) * s(i);
      if (i < n && j == i) rhs = x(i + 1) * s(i) - u - u * c(i) * c(i + 1);
      if (i < n && j == i + 1) rhs = x(i) * s(i) + u - u * c(i) * c(i + 1);
      if (i == n && t.family == Family::D && j == n) rhs = -(x(n - 1) * s(n)) - u - u * c(n - 1) * c(n);
      if (i == n && t.family == Family::D && j == n - 1) rhs = -(x(n) * s(n)) - u + u * c(n - 1) * c(n);
      if (i == n && t.family == Family::B && j == n)
        rhs = -(x(n) * s(n)) - ahc_scalar(g, Scalar(named_constant("sqrt2")) * Scalar::v());
      ctx.equal(s(i) * x(j), rhs);
    }
  }
}

void spin_relations(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const SahElt one = sah_scalar(g, 1), u = sah_scalar(g, Scalar::u());
  const auto b = [&](int j) { return sah_b(g, j); };
  const auto tt = [&](int i) { return sah_t(g, i); };
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) ctx.equal(b(j) * b(k), -(b(k) * b(j)));
  for (int i = 1; i <= g.generators(); ++i) {
    ctx.equal(tt(i) * tt(i), one);
    for (int i2 = 1; i2 <= g.generators(); ++i2) {
      if (i2 == i) continue;
      const int m = coxeter_order(t, i, i2);
      const SahElt p = alternating(one, tt, i, i2, m), q = alternating(one, tt, i2, i, m);
      ctx.equal(p, m % 2 ? q : -q);
    }
    for (int j = 1; j <= n; ++j) {
      SahElt rhs = -(b(j) * tt(i));
      if (i < n && (j == i || j == i + 1)) rhs = u - b(j == i ? i + 1 : i) * tt(i);
      if (i == n && t.family == Family::D && (j == n || j == n - 1)) rhs = u - b(j == n ? n - 1 : n) * tt(i);
      if (i == n && t.family == Family::B && j == n) rhs = sah_scalar(g, Scalar::v()) - b(n) * tt(n);
      ctx.equal(tt(i) * b(j), rhs);
    }
  }
}

void cover_relations(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const CoverElt one = cover_scalar(g, 1), z = cover_z(g), u = cover_scalar(g, Scalar::u());
  const auto x = [&](int j) { return cover_x(g, j); };
  const auto tt = [&](int i) { return cover_t(g, i); };
  ctx.equal(z * z, one);
  for (int j = 1; j <= n; ++j) {
    ctx.equal(z * x(j), x(j) * z);
    for (int k = 1; k <= n; ++k)
      if (j != k) ctx.equal(x(j) * x(k), z * x(k) * x(j));
  }
  for (int i = 1; i <= g.generators(); ++i) {
    ctx.equal(tt(i) * tt(i), one);
    ctx.equal(z * tt(i), tt(i) * z);
    for (int i2 = 1; i2 <= g.generators(); ++i2) {
      if (i2 == i) continue;
      const int m = coxeter_order(t, i, i2);
      const CoverElt p = alternating(one, tt, i, i2, m), q = alternating(one, tt, i2, i, m);
      ctx.equal(p, m % 2 ? q : z * q);
    }
    for (int j = 1; j <= n; ++j) {
      CoverElt rhs = z * x(j) * tt(i);
      if (i < n && j == i + 1) rhs = z * x(i) * tt(i) + u;
      if (i < n && j == i) rhs = z * x(i + 1) * tt(i) - u * z;
      if (i == n && t.family == Family::D && j == n) rhs = -(x(n - 1) * tt(n)) - u * z;
      if (i == n && t.family == Family::D && j == n - 1) rhs = -(x(n) * tt(n)) - u * z;
      if (i == n && t.family == Family::B && j == n) rhs = cover_scalar(g, Scalar::v()) - x(n) * tt(n);
      ctx.equal(tt(i) * x(j), rhs);
    }
  }
}

// Associativity and modules.

template <class E, class R>
void associativity(Ctx& ctx, R random) {
  const WeylGroup& g = ctx.group();
  for (int k = 0; k < 200; ++k) {
    const E a = random(ctx.rng(), g), b = random(ctx.rng(), g), c = random(ctx.rng(), g);
    ctx.equal((a * b) * c, a * (b * c));
  }
}

void ind_module(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  for (int k = 0; k < 200; ++k) {
    const AhcElt a = random_ahc(ctx.rng(), g), b = random_ahc(ctx.rng(), g);
    const IndElt m = random_ind(ctx.rng(), g);
    ctx.equal(ind_as_ahc(ind_act(a * b, m)), ind_as_ahc(ind_act(a, ind_act(b, m))));
  }
}

// Hecke-Clifford intertwiners.

void intertwiner_square(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const Poly u2 = poly_constant(Scalar::u() * Scalar::u());
  const Poly two = poly_constant(2);
  for (int i = 1; i <= g.generators(); ++i) {
    const AhcElt phi = intertwiner_phi(t, i);
    Poly expected;
    if (i < n || t.family == Family::D) {
      const int a = i < n ? i : n - 1, b = i < n ? i + 1 : n;
      const Poly diff = sq(b) - sq(a);
      expected = poly_mul(two, poly_mul(u2, sq(b) + sq(a))) - poly_mul(diff, diff);
    } else {
      expected = poly_mul(poly_constant(4), poly_mul(sq(n), sq(n))) -
                 poly_mul(two, poly_mul(poly_constant(Scalar::v() * Scalar::v()), sq(n)));
    }
    ctx.equal(phi * phi, ahc_poly(g, expected));
  }
}

void intertwiner_commute(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  for (int i = 1; i <= g.generators(); ++i) {
    const AhcElt phi = intertwiner_phi(t, i);
    const WeylElt s = WeylElt::generator(t, i);
    for (int j = 1; j <= g.rank(); ++j) {
      ctx.equal(phi * ahc_x(g, j), ahc_poly(g, poly_act(s, poly_var(j))) * phi);
      ctx.equal(phi * ahc_c(g, j), ahc_clifford(g, clifford_image(t, i, j)) * phi);
    }
    for (int k = 0; k < 5; ++k) {
      const Poly f = random_poly(ctx.rng(), g.rank(), {2, 3});
      ctx.equal(phi * ahc_poly(g, f), ahc_poly(g, poly_act(s, f)) * phi);
    }
  }
}

AhcElt phi_braid_difference(const WeylGroup& g, int i, int j) {
  const WeylType& t = g.type();
  const int m = coxeter_order(t, i, j);
  const auto phi = [&](int k) { return intertwiner_phi(t, k); };
  const AhcElt one = ahc_scalar(g, 1);
  return alternating(one, phi, i, j, m) - alternating(one, phi, j, i, m);
}

void intertwiner_braid(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const auto phi = [&](int k) { return intertwiner_phi(t, k); };
  const AhcElt one = ahc_scalar(g, 1);
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = i + 1; j <= g.generators(); ++j) {
      const int m = coxeter_order(t, i, j);
      ctx.equal(alternating(one, phi, i, j, m), alternating(one, phi, j, i, m));
    }
}

void intertwiner_braid_u0(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = i + 1; j <= g.generators(); ++j) {
      const AhcElt d = phi_braid_difference(g, i, j);
      ctx.equal(specialize_parameters(d, Cyc8(0), Cyc8(0)), AhcElt(g));
    }
}

// The pairs that do not braid, against their closed-form defects.
void intertwiner_braid_defect(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const Scalar u2 = Scalar::u() * Scalar::u();
  const AhcElt cc = ahc_c(g, n - 1) * ahc_c(g, n);
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = i + 1; j <= g.generators(); ++j) {
      const int m = coxeter_order(t, i, j);
      AhcElt expected(g);
      if (t.family == Family::B && m == 4) {
        const Poly defect =
            poly_mul(poly_mul(sq(n - 1), sq(n)), sq(n - 1) + sq(n) - poly_constant(Scalar::v() * Scalar::v()));
        expected = Scalar(16) * u2 * ahc_poly(g, defect) * cc;
      } else if (t.family == Family::D && i == n - 1 && j == n) {
        expected = Scalar(4) * u2 * ahc_poly(g, sq(n - 1) + sq(n)) * cc;
      }
      ctx.equal(phi_braid_difference(g, i, j), expected);
    }
}

// Spin intertwiners.

void spin_intertwiner_square(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const SahElt u = sah_scalar(g, Scalar::u());
  const auto b = [&](int j) { return sah_b(g, j); };
  const auto bsq = [&](int j) { return b(j) * b(j); };
  for (int i = 1; i <= g.generators(); ++i) {
    const SahElt I = intertwiner_I(t, i);
    if (i < n || t.family == Family::D) {
      const int lo = i < n ? i : n - 1, hi = i < n ? i + 1 : n;
      ctx.equal(I * I, u * u * (bsq(hi) + bsq(lo)) - (bsq(hi) - bsq(lo)) * (bsq(hi) - bsq(lo)));
    } else {
      ctx.equal(I * I, sah_scalar(g, 4) * bsq(n) * bsq(n) - sah_scalar(g, Scalar::v() * Scalar::v()) * bsq(n));
    }
    // Alternative expression t_i (b_i^2 - b_{i+1}^2) + u (b_{i+1} - b_i).
    if (i < n) ctx.equal(I, sah_t(g, i) * (bsq(i) - bsq(i + 1)) + u * (b(i + 1) - b(i)));
  }
}

// f^w for f read as a polynomial in the squares b_j^2, where sign changes are invisible.
Poly act_on_squares(const WeylElt& w, const Poly& f) {
  Poly r;
  for (const auto& [alpha, c] : f) r.add(act_on_exponents(w, alpha).first, c);
  return r;
}

void spin_intertwiner_commute(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  for (int i = 1; i <= g.generators(); ++i) {
    const SahElt I = intertwiner_I(t, i);
    const WeylElt s = WeylElt::generator(t, i);
    for (int j = 1; j <= g.rank(); ++j) {
      const int img = std::abs(s.image(j));
      ctx.equal(I * sah_b(g, j), -(sah_b(g, img) * I));
    }
    // Even polynomials in the squares: I f(b^2) = f^{s_i}(b^2) I.
    for (int k = 0; k < 3; ++k) {
      const Poly f = random_poly(ctx.rng(), g.rank(), {2, 2});
      ctx.equal(I * sah_even_poly(g, f), sah_even_poly(g, act_on_squares(s, f)) * I);
    }
  }
}

void spin_intertwiner_braid(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const auto I = [&](int k) { return intertwiner_I(t, k); };
  const SahElt one = sah_scalar(g, 1);
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = i + 1; j <= g.generators(); ++j) {
      const int m = coxeter_order(t, i, j);
      const SahElt right = alternating(one, I, j, i, m);
      ctx.equal(alternating(one, I, i, j, m), m % 2 ? right : -right);
    }
}

// Affine isomorphism.

void phi_psi_inverse(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const auto gens = ahc_generators(g);
  for (const AhcElt& x : gens) {
    ctx.equal(psi_affine(phi_affine(x)), x);
    for (const AhcElt& y : gens) ctx.equal(phi_affine(x * y), phi_affine(x) * phi_affine(y));
  }
  for (const TensorSpinElt& x : tensor_spin_generators(g)) ctx.equal(phi_affine(psi_affine(x)), x);
  for (int k = 0; k < 100; ++k) {
    const AhcElt a = random_ahc(ctx.rng(), g, {2, 3});
    const TensorSpinElt s = random_tensor_spin(ctx.rng(), g, {2, 3});
    ctx.equal(psi_affine(phi_affine(a)), a);
    ctx.equal(phi_affine(psi_affine(s)), s);
  }
}

void phi_intertwiner(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const WeylType& t = g.type();
  const int n = g.rank();
  const Scalar r2m(named_constant("sqrtm2"));
  const Scalar m2i(Cyc8(-2) * named_constant("i"));
  const auto c = [&](int j) { return CliffordElt::generator(n, j); };
  for (int i = 1; i <= g.generators(); ++i) {
    const TensorSpinElt I = ts_spin_affine(intertwiner_I(t, i));
    const TensorSpinElt image = phi_affine(intertwiner_phi(t, i));
    TensorSpinElt expected;
    if (i < n) expected = -r2m * (ts_clifford(g, c(i) - c(i + 1)) * I);
    else if (t.family == Family::D) expected = -r2m * (ts_clifford(g, c(n - 1) + c(n)) * I);
    else expected = m2i * (ts_clifford(g, c(n)) * I);
    ctx.equal(image, expected);
    ctx.equal(image, m2i * (ts_clifford(g, beta(t, i)) * I));
  }
}

void spin_transport(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  for (int i = 1; i <= g.generators(); ++i)
    for (int j = 1; j <= g.rank(); ++j) {
      const TensorSpinElt ti = ts_spin_affine(sah_t(g, i)), bj = ts_spin_affine(sah_b(g, j));
      ctx.equal(phi_affine(psi_affine(ti) * psi_affine(bj)), ts_spin_affine(sah_t(g, i) * sah_b(g, j)));
    }
}

// Centers.

void center(Ctx& ctx) {
  const WeylType& t = ctx.type();
  const int n = t.n;
  const auto power_sum = [&](int k, bool squares) {
    Poly p;
    for (int j = 1; j <= n; ++j) p += poly_pow(squares ? sq(j) : poly_var(j), k);
    return p;
  };
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "p" + std::to_string(k);
    ctx.expect(center_commutator_check(t, power_sum(k, true)), name + "(x^2) central", "true", "commutator nonzero");
    ctx.expect(spin_center_check(t, power_sum(k, false)), name + "(b^2) central", "true", "commutator nonzero");
  }
  // One polynomial that is not invariant must fail.
  ctx.expect(!center_commutator_check(t, sq(1)), "x1^2 central", "false", "witness commuted");
  ctx.expect(!spin_center_check(t, poly_var(1)), "b1^2 central", "false", "witness commuted");
}

// Type D involutions.

void d_involutions(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  for (int k = 0; k < 100; ++k) {
    const AhcElt a = random_ahc(ctx.rng(), g), b = random_ahc(ctx.rng(), g);
    for (Involution inv : {Involution::Tau1, Involution::Tau2}) {
      ctx.equal(apply_involution(inv, a * b), apply_involution(inv, b) * apply_involution(inv, a));
      ctx.equal(apply_involution(inv, apply_involution(inv, a)), a);
    }
    ctx.equal(apply_involution(Involution::Sigma, a * b),
              apply_involution(Involution::Sigma, a) * apply_involution(Involution::Sigma, b));
    ctx.equal(apply_involution(Involution::Sigma, apply_involution(Involution::Sigma, a)), a);
  }
  for (int k = 0; k < 100; ++k) {
    const SahElt a = random_sah(ctx.rng(), g), b = random_sah(ctx.rng(), g);
    for (Involution inv : {Involution::Tau1, Involution::Tau2}) {
      ctx.equal(apply_spin_involution(inv, a * b), apply_spin_involution(inv, b) * apply_spin_involution(inv, a));
      ctx.equal(apply_spin_involution(inv, apply_spin_involution(inv, a)), a);
    }
    ctx.equal(apply_spin_involution(Involution::Sigma, a * b),
              apply_spin_involution(Involution::Sigma, a) * apply_spin_involution(Involution::Sigma, b));
  }
}

// Covering quotients.

void cover_quotients(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  const CoverElt z = cover_z(g);
  ctx.equal(upsilon_plus(z), lusztig_scalar(g, 1));
  ctx.equal(upsilon_minus(z), sah_scalar(g, -1));
  ctx.equal(lusztig_x(g, 1) * lusztig_x(g, 2), lusztig_x(g, 2) * lusztig_x(g, 1));
  ctx.equal(upsilon_plus(cover_x(g, 1) * cover_x(g, 2)), upsilon_plus(cover_x(g, 2) * cover_x(g, 1)));
  for (int k = 0; k < 200; ++k) {
    const CoverElt a = random_cover(ctx.rng(), g), b = random_cover(ctx.rng(), g);
    ctx.equal(upsilon_plus(a * b), upsilon_plus(a) * upsilon_plus(b));
    ctx.equal(upsilon_minus(a * b), upsilon_minus(a) * upsilon_minus(b));
  }
}

void cover_spin_match(Ctx& ctx) {
  const WeylGroup& g = ctx.group();
  std::vector<SahElt> gens;
  for (int j = 1; j <= g.rank(); ++j) gens.push_back(sah_b(g, j));
  for (int i = 1; i <= g.generators(); ++i) gens.push_back(sah_t(g, i));
  for (const SahElt& a : gens)
    for (const SahElt& b : gens) ctx.equal(upsilon_minus(lift(a) * lift(b)), a * b);
  for (int k = 0; k < 50; ++k) {
    const SahElt a = random_sah(ctx.rng(), g), b = random_sah(ctx.rng(), g);
    ctx.equal(upsilon_minus(lift(a) * lift(b)), a * b);
  }
}

std::vector<Suite> build_registry() {
  const auto finite_ok = [](const WeylType& t) {
    return (is_abd(t) && t.n <= 4) || t.family == Family::F || t.family == Family::G;
  };
  const WeylType d3{Family::D, 3, true};
  std::vector<Suite> r;
  r.push_back({"beta-braid", "(beta_i beta_j)^m_ij = (-1)^(m_ij+1) in the Clifford algebra",
               {type_A(2), type_A(3), type_A(4), type_B(2), type_B(3), type_B(4), type_D(4), type_F4(), type_G2()},
               finite_ok, beta_braid});
  r.push_back({"spin-weyl-relations", "(t_i t_j)^m_ij = (-1)^(m_ij+1) and omega is multiplicative",
               kRelations, abd_up_to(4), spin_weyl_relations});
  r.push_back({"cocycle-crosscheck", "Clifford cocycle equals the double-cover rewriting sign on all pairs",
               {type_A(2), type_A(3), type_B(2), type_B(3), d3}, abd_up_to(3), cocycle_crosscheck});
  r.push_back({"phi-psi-fin-inverse", "finite maps are inverse superalgebra homomorphisms",
               kRelations, abd_up_to(4), phi_psi_fin_inverse});
  r.push_back({"ahc-relations", "Hecke-Clifford defining relations", kRelations, abd_up_to(4), ahc_relations});
  r.push_back({"spin-relations", "spin affine defining relations", kRelations, abd_up_to(4), spin_relations});
  r.push_back({"cover-relations", "covering defining relations", kRelations, abd_up_to(4), cover_relations});
  r.push_back({"ahc-associativity", "Hecke-Clifford product on 200 random triples", kRandom, abd_up_to(4),
               [](Ctx& c) { associativity<AhcElt>(c, [](auto& rng, const WeylGroup& g) { return random_ahc(rng, g); }); }});
  r.push_back({"spin-associativity", "spin affine product on 200 random triples", kRandom, abd_up_to(4),
               [](Ctx& c) { associativity<SahElt>(c, [](auto& rng, const WeylGroup& g) { return random_sah(rng, g); }); }});
  r.push_back({"cover-associativity", "covering product on 200 random triples", kRandom, abd_up_to(4),
               [](Ctx& c) { associativity<CoverElt>(c, [](auto& rng, const WeylGroup& g) { return random_cover(rng, g); }); }});
  r.push_back({"lusztig-associativity", "z = 1 quotient product on 200 random triples", kRandom, abd_up_to(4),
               [](Ctx& c) {
                 associativity<LusztigElt>(
                     c, [](auto& rng, const WeylGroup& g) { return upsilon_plus(random_cover(rng, g)); });
               }});
  r.push_back({"ind-module", "ind_act(a b, m) = ind_act(a, ind_act(b, m)) on 200 random cases", kRandom,
               abd_up_to(4), ind_module});
  r.push_back({"thm-intertwiner-square", "squares of the intertwiners phi_i", kSmall, abd_up_to(4),
               intertwiner_square});
  r.push_back({"thm-intertwiner-commute", "phi_i f = f^s_i phi_i and phi_i c_j = c_j^s_i phi_i", kSmall,
               abd_up_to(4), intertwiner_commute});
  r.push_back({"thm-intertwiner-braid", "braid relations of the phi_i for every pair", kSmall, abd_up_to(4),
               intertwiner_braid});
  r.push_back({"intertwiner-braid-u0", "braid relations of the phi_i at u = v = 0", kSmall, abd_up_to(4),
               intertwiner_braid_u0});
  r.push_back({"intertwiner-braid-defect", "braid differences equal their closed forms", kSmall, abd_up_to(4),
               intertwiner_braid_defect});
  r.push_back({"spin-intertwiner-square", "squares and alternative form of the spin intertwiners", kSmall,
               abd_up_to(4), spin_intertwiner_square});
  r.push_back({"spin-intertwiner-commute", "I_i b_j = -b_(s_i j) I_i and twisted commutation with even polynomials",
               kSmall, abd_up_to(4), spin_intertwiner_commute});
  r.push_back({"spin-intertwiner-braid", "signed braid relations of the spin intertwiners", kSmall, abd_up_to(4),
               spin_intertwiner_braid});
  r.push_back({"phi-psi-inverse", "affine maps are inverse homomorphisms", kSmall, abd_up_to(4), phi_psi_inverse});
  r.push_back({"phi-intertwiner", "images of the phi_i are Clifford multiples of the spin intertwiners", kSmall,
               abd_up_to(4), phi_intertwiner});
  r.push_back({"spin-transport", "spin straightening agrees with the transported Hecke-Clifford rules", kSmall,
               abd_up_to(4), spin_transport});
  r.push_back({"center", "power sums in squares are central; x1^2 and b1^2 are not", kSmall, abd_up_to(4), center});
  r.push_back({"d-involutions", "type D anti-involutions tau1, tau2 and the involution sigma", {type_D(4)}, only_d(),
               d_involutions});
  r.push_back({"cover-quotients", "z = 1 and z = -1 quotient maps are homomorphisms", kRandom, abd_up_to(4),
               cover_quotients});
  r.push_back({"cover-spin-match", "the z = -1 quotient reproduces the spin product", kRandom, abd_up_to(4),
               cover_spin_match});
  return r;
}

uint64_t seed_for(const std::string& id, const WeylType& t) {
  uint64_t h = 1469598103934665603ull;
  for (char ch : id + "/" + to_string(t)) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  return h;
}

std::string family_letter(const WeylType& t) { return to_string(t).substr(0, 1); }

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = build_registry();
  return registry;
}

const Suite& find_suite(const std::string& id) {
  for (const Suite& s : suite_registry())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown suite: " + id);
}

Report run_suite(const Suite& s, const WeylType& t, const std::optional<Cyc8>& u, const std::optional<Cyc8>& v) {
  if (!s.accepts(t)) throw std::invalid_argument("suite " + s.id + " does not accept type " + to_string(t));
  Report r;
  r.suite = s.id;
  r.type = t;
  r.u = u;
  r.v = v;
  const auto start = std::chrono::steady_clock::now();
  SuiteContext ctx(r, seed_for(s.id, t));
  s.run(ctx);
  r.millis = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

Report run_suite(const std::string& id, const WeylType& t) { return run_suite(find_suite(id), t); }

std::string report_json(const Report& r, int indent) {
  nlohmann::json params = {{"type", family_letter(r.type)}, {"rank", r.type.n}};
  if (r.u) params["u"] = render_scalar(*r.u);
  if (r.v) params["v"] = render_scalar(*r.v);
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures) failures.push_back({{"lhs", f.lhs}, {"rhs", f.rhs}, {"diff", f.diff}});
  const nlohmann::json j = {{"suite", r.suite}, {"params", params},     {"cases", r.cases},
                            {"failures", failures}, {"millis", r.millis}};
  return j.dump(indent);
}

std::string report_line(const Report& r) {
  std::string line = (r.ok() ? "PASS " : "FAIL ") + r.suite + " " + to_string(r.type) +
                     " cases=" + std::to_string(r.cases);
  if (!r.ok()) line += " failures=" + std::to_string(r.failures.size());
  return line + " millis=" + std::to_string(r.millis);
}

}  // namespace hcl
