#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ident/poly.hpp"
#include "ident/ratfun.hpp"
#include "testutil.hpp"

#include <map>

using namespace ident;
using namespace ident::testutil;

namespace {

SymbolTablePtr ab() { return make_symbols({"a", "b"}); }
SymbolTablePtr abc() { return make_symbols({"a", "b", "c"}); }

Poly P(const char* text, const SymbolTablePtr& t) { return parse_poly(text, t); }

}  // namespace

TEST_CASE("binomial product expands exactly") {
  auto t = ab();
  CHECK(P("(a + b)*(a - b)", t) == P("a^2 - b^2", t));
  CHECK(P("(a + b)^2", t) == P("a^2 + 2*a*b + b^2", t));
}

TEST_CASE("canonical rendering is grlex-descending with explicit operators") {
  auto t = ab();
  CHECK(P("(a + b)*(a - b)", t).render() == "a^2 - b^2");
  CHECK(P("b + a^2*3 - 1/2", t).render() == "3*a^2 + b - 1/2");
  CHECK(Poly(t).render() == "0");
  CHECK(P("-a", t).render() == "-a");
  CHECK(P("a*b - a - b + 1", t).render() == "a*b - a - b + 1");
}

TEST_CASE("rendering round-trips through the parser") {
  auto t = abc();
  auto rng = make_rng(12345);
  for (int k = 0; k < 1000; ++k) {
    Poly p = random_poly(rng, t);
    CHECK(parse_poly(p.render(), t) == p);
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto t = abc();
  auto rng = make_rng(777);
  for (int k = 0; k < 1000; ++k) {
    Poly f = random_poly(rng, t);
    Poly g = random_poly(rng, t);
    Poly h = random_poly(rng, t);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + Poly(t) == f);
    CHECK(f * Poly::constant(t, 1) == f);
    CHECK(f - f == Poly(t));
    CHECK((f * Poly(t)).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto t = abc();
  auto rng = make_rng(4242);
  for (int k = 0; k < 1000; ++k) {
    Poly f = random_poly(rng, t);
    Poly g = random_poly(rng, t);
    auto pt = random_point(rng, t->size());
    CHECK((f + g).eval_all(pt) == f.eval_all(pt) + g.eval_all(pt));
    CHECK((f * g).eval_all(pt) == f.eval_all(pt) * g.eval_all(pt));
  }
}

TEST_CASE("evaluation by name requires every symbol present") {
  auto t = ab();
  Poly f = P("a^2 + b", t);
  std::map<std::string, Rat> full{{"a", Rat(2)}, {"b", Rat(1, 3)}};
  CHECK(f.eval(full) == Rat(13, 3));
  std::map<std::string, Rat> missing{{"a", Rat(2)}};
  CHECK_THROWS_AS(f.eval(missing), Error);
  // Symbols the polynomial does not depend on may be omitted.
  CHECK(P("a^2", t).eval(missing) == Rat(4));
}

TEST_CASE("arithmetic between different symbol tables is rejected") {
  Poly f = P("a", ab());
  Poly g = P("c", abc());
  CHECK_THROWS_AS(f + g, Error);
  CHECK_THROWS_AS(f * g, Error);
}

TEST_CASE("derivative matches the exact Taylor expansion") {
  auto t = abc();
  auto rng = make_rng(2024);
  for (int k = 0; k < 1000; ++k) {
    Poly f = random_poly(rng, t, 4, 3);
    auto pt = random_point(rng, t->size());
    std::uniform_int_distribution<std::size_t> pick(0, t->size() - 1);
    std::size_t var = pick(rng);
    Rat h = random_rat(rng, 5, 7, /*allow_zero=*/false);

    // f(pt + h e_var) == sum_m h^m/m! * d^m f (pt), exactly.
    auto shifted = pt;
    shifted[var] += h;
    Rat lhs = f.eval_all(shifted);

    Rat rhs = 0, hpow = 1, fact = 1;
    Poly d = f;
    for (unsigned m = 0; !d.is_zero() || m == 0; ++m) {
      if (m > 0) {
        d = d.diff(var);
        hpow *= h;
        fact *= m;
      }
      rhs += hpow / fact * d.eval_all(pt);
      if (m > 50) break;  // cannot happen for polynomial inputs
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("derivative agrees with central differences to second order") {
  auto t = ab();
  Poly f = P("a^3 - 2*a*b + b^2", t);
  const Rat a0(13, 10), b0(-7, 10), h(1, 1000000);
  double fd = to_double((f.eval_all({a0 + h, b0}) - f.eval_all({a0 - h, b0})) / (2 * h));
  double exact = to_double(f.diff("a").eval_all({a0, b0}));
  CHECK(fd == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("gcd of a difference of squares") {
  auto t = ab();
  Poly g = poly_gcd(P("a^2 - b^2", t), P("a + b", t));
  CHECK(g == P("a + b", t));
}

TEST_CASE("gcd normalization and edge cases") {
  auto t = ab();
  CHECK(poly_gcd(P("2*a + 2*b", t), P("4*a + 4*b", t)) == P("a + b", t));
  // gcd(f, 0) returns the normalized (monic) f.
  CHECK(poly_gcd(P("3*a^2 - 3*b^2", t), Poly(t)) == P("a^2 - b^2", t));
  CHECK(poly_gcd(Poly(t), P("-2*b", t)) == P("b", t));
  CHECK(poly_gcd(Poly(t), Poly(t)).is_zero());
  // Coprime inputs give 1.
  CHECK(poly_gcd(P("a", t), P("b", t)) == Poly::constant(t, 1));
}

TEST_CASE("gcd divides both inputs and is multiplicative in common factors") {
  auto t = abc();
  auto rng = make_rng(99);
  for (int k = 0; k < 200; ++k) {
    Poly f = random_nonzero_poly(rng, t, 3, 2);
    Poly g = random_nonzero_poly(rng, t, 3, 2);
    Poly w = random_nonzero_poly(rng, t, 2, 1);
    Poly d = poly_gcd(f, g);
    CHECK(poly_divide_exact(f, d).has_value());
    CHECK(poly_divide_exact(g, d).has_value());
    // gcd(f*w, g*w) == monic(w * gcd(f, g))
    Poly lhs = poly_gcd(f * w, g * w);
    Poly rhs = (w * d).monic();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact division") {
  auto t = ab();
  auto q = poly_divide_exact(P("a^2 - b^2", t), P("a - b", t));
  REQUIRE(q.has_value());
  CHECK(*q == P("a + b", t));
  CHECK(!poly_divide_exact(P("a^2 + b", t), P("a - b", t)).has_value());
}

TEST_CASE("content and primitive part") {
  auto t = ab();
  Poly f = P("4*a^2 - 6*b", t);
  CHECK(f.content() == Rat(2));
  CHECK(f.primitive_part() == P("2*a^2 - 3*b", t));
  Poly g = P("-1/2*a - 1/4*b", t);
  CHECK(g.content() == Rat(-1, 4));
  CHECK(g.primitive_part() == P("2*a + b", t));
}

TEST_CASE("parser rejects non-polynomial input with positions") {
  auto t = ab();
  CHECK_THROWS_AS(parse_poly("sin(a)", t), PolyParseError);
  CHECK_THROWS_AS(parse_poly("a^-2", t), PolyParseError);
  CHECK_THROWS_AS(parse_poly("a^(1/2)", t), PolyParseError);
  CHECK_THROWS_AS(parse_poly("1/(a + b)", t), PolyParseError);
  CHECK_THROWS_AS(parse_poly("a + q", t), PolyParseError);
  CHECK_THROWS_AS(parse_poly("a + ", t), PolyParseError);
  try {
    parse_poly("a + zz*b", t);
    CHECK(false);
  } catch (const PolyParseError& e) {
    CHECK(e.column() == 5);
  }
  // Division by an expression that reduces to a constant is polynomial.
  CHECK(parse_poly("a/2 + b/(1/2)", t) == P("1/2*a + 2*b", t));
  // Decimal literals are exact.
  CHECK(parse_poly("0.125*a", t) == P("1/8*a", t));
}

TEST_CASE("ratfun reduction keeps gcd-free monic-denominator form") {
  auto t = ab();
  RatFun r(P("a^2 - b^2", t), P("a + b", t));
  CHECK(r.is_poly());
  CHECK(r.num() == P("a - b", t));

  RatFun s(P("a", t), P("2*b", t));
  CHECK(s.den() == P("b", t));  // denominator normalized monic
  CHECK(s.num() == P("1/2*a", t));
}

TEST_CASE("ratfun arithmetic cross-multiplication round-trip") {
  auto t = abc();
  auto rng = make_rng(31337);
  for (int k = 0; k < 1000; ++k) {
    Poly f = random_poly(rng, t, 3, 2);
    Poly g = random_nonzero_poly(rng, t, 2, 1);
    Poly h = random_poly(rng, t, 3, 2);
    Poly w = random_nonzero_poly(rng, t, 2, 1);
    RatFun sum = RatFun(f, g) + RatFun(h, w);
    // (f/g + h/w) * (g*w) == f*w + h*g
    RatFun lhs = sum * RatFun(g * w);
    CHECK(lhs.is_poly());
    CHECK(lhs.num() == f * w + h * g);
    RatFun prod = RatFun(f, g) * RatFun(h, w);
    RatFun back = prod * RatFun(g * w);
    CHECK(back.is_poly());
    CHECK(back.num() == f * h);
  }
}

TEST_CASE("ratfun inverse and division") {
  auto t = ab();
  RatFun r(P("a", t), P("b", t));
  CHECK(r * r.inverse() == RatFun(Poly::constant(t, 1)));
  CHECK_THROWS_AS(RatFun(Poly::constant(t, 1)) / RatFun(Poly(t)), Error);
  CHECK_THROWS_AS(RatFun(P("a", t), Poly(t)), Error);
}

TEST_CASE("ratfun quotient-rule derivative") {
  auto t = ab();
  RatFun r(P("a^2", t), P("b", t));
  RatFun da = r.diff(0);
  CHECK(da == RatFun(P("2*a", t), P("b", t)));
  RatFun db = r.diff(1);
  CHECK(db == RatFun(P("-a^2", t), P("b^2", t)));
}

TEST_CASE("ratfun render round-trips") {
  auto t = ab();
  RatFun r(P("a^2 + 1", t), P("2*b", t));
  CHECK(parse_ratfun(r.render(), t) == r);
  CHECK(RatFun(P("a", t)).render() == "a");
}

TEST_CASE("poly substitute fixes one symbol exactly") {
  auto t = abc();
  Poly f = P("a^2*b + c", t);
  Poly g = f.substitute(0, Rat(3, 2));
  CHECK(g == P("9/4*b + c", t));
}
