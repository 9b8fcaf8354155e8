#include <random>
#include <string>

#include "doctest.h"
#include "hcl/random_elements.hpp"
#include "hcl/session.hpp"
#include "hcl/suites.hpp"
#include "json.hpp"

using namespace hcl;

namespace {

SessionConfig config(Algebra a, WeylType t = type_A(2)) {
  SessionConfig cfg;
  cfg.algebra = a;
  cfg.type = t;
  return cfg;
}

std::string nf(const std::string& src, Algebra a = Algebra::Ahc, WeylType t = type_A(2)) {
  return normal_form(src, config(a, t));
}

ExprPtr random_tree(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"x1", "c2", "s1", "t2", "b1", "X2", "T1", "z", "u", "v", "i", "r2", "3", "2/5"};
  auto e = std::make_unique<Expr>();
  const int pick = depth <= 0 ? 5 : static_cast<int>(rng() % 6);
  if (pick == 5) return parse(atoms[rng() % std::size(atoms)]);
  static const Expr::Op ops[] = {Expr::Op::Add, Expr::Op::Sub, Expr::Op::Mul, Expr::Op::Neg, Expr::Op::Pow};
  e->op = ops[pick];
  e->args.push_back(random_tree(rng, depth - 1));
  if (e->op == Expr::Op::Pow)
    e->exponent = static_cast<int>(rng() % 4);
  else if (e->op != Expr::Op::Neg)
    e->args.push_back(random_tree(rng, depth - 1));
  return e;
}

template <class E>
void check_round_trip(const E& value, const SessionConfig& cfg) {
  const std::string text = render(Value(value), cfg);
  const Value back = eval(text, cfg);
  REQUIRE(std::holds_alternative<E>(back));
  CHECK_MESSAGE(std::get<E>(back) == value, text);
  CHECK(render(back, cfg) == text);
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  CHECK(print(*parse("s1*x1")) == "(s1*x1)");
  CHECK(print(*parse("x1^2*s1 - 3/2*u")) == "(((x1)^2*s1) - (3/2*u))");
  CHECK(print(*parse("-(x1 + c2)^3")) == "-(((x1 + c2))^3)");
  CHECK(print(*parse("1")) == "1");
  const ExprPtr e = parse("2*i*r2*z");
  CHECK(e->op == Expr::Op::Mul);
}

TEST_CASE("parse errors carry positions") {
  const auto position = [](const std::string& src) -> long {
    try {
      parse(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("x1 + ") == 5);
  CHECK(position("x1 $ x2") == 3);
  CHECK(position("(x1 + x2") == 8);
  CHECK(position("q1") == 0);
  CHECK(position("x1 x2") == 3);
  CHECK(position("x1^999") == 3);
  CHECK(position("x1 + x2") == -1);
}

TEST_CASE("atoms outside the algebra are rejected") {
  const auto rejected = [](const std::string& src, Algebra a, WeylType t = type_A(2)) {
    try {
      eval(src, config(a, t));
    } catch (const EvalError&) {
      return true;
    }
    return false;
  };
  CHECK(rejected("b1", Algebra::Ahc));
  CHECK(rejected("x1", Algebra::Spin));
  CHECK(rejected("z", Algebra::Ahc));
  CHECK(rejected("s1", Algebra::Cover));
  CHECK(rejected("x3", Algebra::Ahc));
  CHECK(rejected("s2", Algebra::Ahc));
  CHECK_THROWS_AS(eval("s0", config(Algebra::Ahc)), ParseError);
  CHECK_FALSE(rejected("s2", Algebra::Ahc, type_B(2)));
  CHECK_FALSE(rejected("c1*c2", Algebra::Clifford));
  CHECK(rejected("t1", Algebra::Clifford));
  CHECK_FALSE(rejected("c1*b2*t1", Algebra::TensorSpin));
}

TEST_CASE("golden normal forms") {
  CHECK(nf("s1*x1") == "x2*s1 - u - u*c1*c2");
  CHECK(nf("t1*b1", Algebra::Spin) == "u - b2*t1");
  CHECK(nf("z*z", Algebra::Cover) == "1");
  CHECK(nf("s1*s1") == "1");
  CHECK(nf("c1*c1") == "1");
  CHECK(nf("c2*c1") == "-c1*c2");
  CHECK(nf("x1 - x1") == "0");
  CHECK(nf("t1*t1", Algebra::FiniteSpin) == "1");
  CHECK(nf("t2*b2", Algebra::Spin, type_B(2)) == "v - b2*t2");
  CHECK(nf("T1*X2", Algebra::Cover) == "u + z*X1*T1");
  CHECK(nf("r2*r2 + i*i") == "1");
}

TEST_CASE("output specialization of u and v") {
  SessionConfig cfg = config(Algebra::Ahc);
  cfg.u = Cyc8(Rational(1, 2));
  CHECK(normal_form("s1*x1", cfg) == "x2*s1 - 1/2 - 1/2*c1*c2");
  cfg.u = Cyc8(Rational(0));
  CHECK(normal_form("s1*x1", cfg) == "x2*s1");
}

TEST_CASE("rendering is deterministic and independent of construction order") {
  const SessionConfig cfg = config(Algebra::Ahc, type_B(3));
  const std::string a = normal_form("x1*c2 + s3*x3 + u*s1*s2 + v", cfg);
  const std::string b = normal_form("v + u*s1*s2 + s3*x3 + x1*c2", cfg);
  CHECK(a == b);
  CHECK(normal_form("x1*c2 + s3*x3 + u*s1*s2 + v", cfg) == a);
}

TEST_CASE("print and parse round trip on random trees") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const ExprPtr e = random_tree(rng, 4);
    const std::string printed = print(*e);
    const ExprPtr back = parse(printed);
    CHECK_MESSAGE(same_tree(*e, *back), printed);
  }
}

TEST_CASE("rendered normal forms parse back to the same element") {
  std::mt19937_64 rng(11);
  for (const WeylType& t : {type_A(3), type_B(2), type_D(4)}) {
    const WeylGroup& g = WeylGroup::get(t);
    for (int k = 0; k < 40; ++k) {
      check_round_trip(random_ahc(rng, g, {3, 2}), config(Algebra::Ahc, t));
      check_round_trip(random_sah(rng, g, {3, 2}), config(Algebra::Spin, t));
      check_round_trip(random_cover(rng, g, {3, 2}), config(Algebra::Cover, t));
      check_round_trip(random_tensor_spin(rng, g, {2, 2}), config(Algebra::TensorSpin, t));
      check_round_trip(random_semidirect(rng, g, 3), config(Algebra::Semidirect, t));
    }
  }
}

TEST_CASE("structure maps through the session layer") {
  const SessionConfig cfg = config(Algebra::Ahc, type_A(3));
  const Value x = eval("s1*x2 + c1*x3", cfg);
  const Value image = apply_map(MapKind::Phi, x);
  CHECK(algebra_of(image) == Algebra::TensorSpin);
  const Value back = apply_map(MapKind::Psi, image);
  CHECK(std::get<AhcElt>(back) == std::get<AhcElt>(x));
  CHECK_THROWS_AS(apply_map(MapKind::Psi, x), std::invalid_argument);
  CHECK(map_domain(MapKind::Tau1, Algebra::Spin) == Algebra::Spin);
  CHECK(map_domain(MapKind::Tau1, Algebra::Cover) == Algebra::Ahc);
  CHECK(map_domain(MapKind::Up, Algebra::Ahc) == Algebra::Cover);
  CHECK_THROWS_AS(parse_map("chi"), std::invalid_argument);
}

TEST_CASE("algebra ids round trip") {
  for (Algebra a : all_algebras()) CHECK(parse_algebra(algebra_id(a)) == a);
  CHECK_THROWS_AS(parse_algebra("hecke"), std::invalid_argument);
}

TEST_CASE("suite runner") {
  const Report fin = run_suite("phi-psi-inverse", type_B(2));
  CHECK(fin.ok());
  CHECK(fin.cases > 0);
  CHECK(run_suite("cocycle-crosscheck", type_A(3)).ok());
  CHECK_THROWS_AS(run_suite("no-such-suite", type_A(2)), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("d-involutions", type_A(3)), std::invalid_argument);
  const Report again = run_suite("phi-psi-inverse", type_B(2));
  CHECK(again.cases == fin.cases);
}

TEST_CASE("report json schema") {
  Report r = run_suite("ahc-relations", type_A(2));
  nlohmann::json j = nlohmann::json::parse(report_json(r));
  CHECK(j["suite"] == "ahc-relations");
  CHECK(j["params"]["type"] == "A");
  CHECK(j["params"]["rank"] == 2);
  CHECK_FALSE(j["params"].contains("u"));
  CHECK(j["cases"].get<long>() == r.cases);
  CHECK(j["failures"].is_array());
  CHECK(j["millis"].is_number_integer());
  CHECK(report_line(r).rfind("PASS ahc-relations A2 cases=", 0) == 0);

  r.failures.push_back({"a", "b", "a - b"});
  r.u = Cyc8(Rational(1, 3));
  j = nlohmann::json::parse(report_json(r));
  CHECK(j["params"]["u"] == "1/3");
  CHECK(j["failures"][0]["lhs"] == "a");
  CHECK(j["failures"][0]["rhs"] == "b");
  CHECK(j["failures"][0]["diff"] == "a - b");
  CHECK(report_line(r).rfind("FAIL ahc-relations A2", 0) == 0);
}

TEST_CASE("suites honour the u and v specialization") {
  const Suite& s = find_suite("thm-intertwiner-braid");
  const Report generic = run_suite(s, type_B(2));
  CHECK_FALSE(generic.ok());
  const Report at_zero = run_suite(s, type_B(2), Cyc8(Rational(0)), Cyc8(Rational(0)));
  CHECK(at_zero.ok());
}
