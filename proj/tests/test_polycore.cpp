#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isospectra/groebner.hpp"
#include "isospectra/poly.hpp"

using namespace isospectra;

namespace {

// Deterministic small random polynomials for property checks.
ExactPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int nterms,
                      OrderKind ord = OrderKind::GrevLex) {
  ExactPoly p(nvars, ord);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (int rep = 0; rep < budget; ++rep) m.e[rng() % nvars] += 1;
    long num = static_cast<long>(rng() % 11) - 5;
    p.add_term(m, Rational(num));
  }
  return p;
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational(" -1.25 ") == Rational(-5, 4));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  // Leading zeros stay decimal; the gmp string reader would call them octal.
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(parse_rational("10/08") == Rational(5, 4));
  CHECK(parse_rational("+3") == Rational(3));
  CHECK(to_string(Rational(-5, 4)) == "-5/4");
  CHECK(to_string(Rational(3)) == "3");
  CHECK_THROWS_AS(parse_rational("1/0"), argument_error);
  CHECK_THROWS_AS(parse_rational("x"), argument_error);
  CHECK_THROWS_AS(parse_rational(""), argument_error);
}

TEST_CASE("monomial orders behave as documented") {
  // v1 < v2 < ... in every order; 1 is the least monomial.
  for (OrderKind k : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    CHECK(compare(mono({0, 0}), mono({1, 0}), k) < 0);
    CHECK(compare(mono({1, 0}), mono({0, 1}), k) < 0);
  }
  // Lex: v2 dominates any power of v1.
  CHECK(compare(mono({5, 0}), mono({0, 1}), OrderKind::Lex) < 0);
  // Graded orders: degree first.
  CHECK(compare(mono({5, 0}), mono({0, 1}), OrderKind::GrLex) > 0);
  CHECK(compare(mono({5, 0}), mono({0, 1}), OrderKind::GrevLex) > 0);
  // Same degree: grevlex ranks v1*v2 below v2^2 (bigger low-variable share
  // means smaller), and grlex agrees here.
  CHECK(compare(mono({1, 1}), mono({0, 2}), OrderKind::GrevLex) < 0);
  CHECK(compare(mono({1, 1}), mono({0, 2}), OrderKind::GrLex) < 0);
  // Three variables: grevlex and grlex differ on this classic pair.
  CHECK(compare(mono({1, 0, 1}), mono({0, 2, 0}), OrderKind::GrevLex) < 0);
  CHECK(compare(mono({1, 0, 1}), mono({0, 2, 0}), OrderKind::GrLex) > 0);
}

TEST_CASE("order properties: total, multiplicative") {
  std::mt19937_64 rng(7);
  for (OrderKind k : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a(3), b(3), c(3);
      for (int i = 0; i < 3; ++i) {
        a.e[i] = rng() % 4;
        b.e[i] = rng() % 4;
        c.e[i] = rng() % 4;
      }
      int ab = compare(a, b, k);
      CHECK(compare(b, a, k) == -ab);
      if (ab == 0) CHECK(a == b);
      // Translation invariance.
      CHECK(compare(a * c, b * c, k) == ab);
    }
  }
}

TEST_CASE("polynomial ring laws on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    ExactPoly p = random_poly(rng, 3, 3, 4);
    ExactPoly q = random_poly(rng, 3, 3, 4);
    ExactPoly r = random_poly(rng, 3, 3, 4);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK(p - p == ExactPoly::zero(3));
    CHECK((p * Rational(3)) * Rational(1, 3) == p);
  }
}

TEST_CASE("derivative and evaluation are consistent") {
  // d/dv1 (v1^2 v2 + 3 v1) = 2 v1 v2 + 3
  ExactPoly p = ExactPoly::monomial(mono({2, 1}), Rational(1)) +
                ExactPoly::variable(2, 1) * Rational(3);
  ExactPoly d = p.derivative(1);
  ExactPoly expect = ExactPoly::monomial(mono({1, 1}), Rational(2)) +
                     ExactPoly::constant(2, Rational(3));
  CHECK(d == expect);

  std::vector<Rational> x = {Rational(2), Rational(-3)};
  CHECK(p.evaluate_rational(x) == Rational(2 * 2 * (-3) + 3 * 2));
}

TEST_CASE("elementary symmetric and complete homogeneous basics") {
  // e_2(v1..v3) = v1v2 + v1v3 + v2v3
  ExactPoly e2 = elementary_symmetric(3, 2);
  CHECK(e2.term_count() == 3);
  CHECK(e2.coeff(mono({1, 1, 0})) == 1);
  CHECK(e2.coeff(mono({1, 0, 1})) == 1);
  CHECK(e2.coeff(mono({0, 1, 1})) == 1);
  CHECK(elementary_symmetric(3, 0) == ExactPoly::constant(3, Rational(1)));
  CHECK(elementary_symmetric(3, 4).is_zero());

  // h_2(v1,v2) in 3 vars = v1^2 + v1v2 + v2^2
  ExactPoly h = complete_homogeneous(2, 2, 3);
  CHECK(h.term_count() == 3);
  CHECK(h.coeff(mono({2, 0, 0})) == 1);
  CHECK(h.coeff(mono({1, 1, 0})) == 1);
  CHECK(h.coeff(mono({0, 2, 0})) == 1);
  CHECK(complete_homogeneous(-1, 2, 3).is_zero());
  CHECK(complete_homogeneous(0, 0, 3) == ExactPoly::constant(3, Rational(1)));
}

TEST_CASE("classical identity sum (-1)^i e_i h_(k-i) = 0") {
  const int n = 4;
  for (int k = 1; k <= n; ++k) {
    ExactPoly acc = ExactPoly::zero(n);
    for (int i = 0; i <= k; ++i) {
      ExactPoly term = elementary_symmetric(n, i) * complete_homogeneous(k - i, n, n);
      acc += (i % 2 == 0) ? term : -term;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("buchberger on the full symmetric system, lex order") {
  // Closed form: leading terms v3, v2^2, v1^3.
  std::vector<ExactPoly> gens = {elementary_symmetric(3, 1, OrderKind::Lex),
                                 elementary_symmetric(3, 2, OrderKind::Lex),
                                 elementary_symmetric(3, 3, OrderKind::Lex)};
  GroebnerBasis gb = buchberger(gens, OrderKind::Lex);
  REQUIRE(gb.generators.size() == 3);
  CHECK(gb.generators[0].leading_monomial() == mono({3, 0, 0}));
  CHECK(gb.generators[1].leading_monomial() == mono({0, 2, 0}));
  CHECK(gb.generators[2].leading_monomial() == mono({0, 0, 1}));
  // The reduced basis is exactly the triangular complete-homogeneous family.
  CHECK(gb.generators[0] == complete_homogeneous(3, 1, 3, OrderKind::Lex));
  CHECK(gb.generators[1] == complete_homogeneous(2, 2, 3, OrderKind::Lex));
  CHECK(gb.generators[2] == complete_homogeneous(1, 3, 3, OrderKind::Lex));
}

TEST_CASE("normal form against the n=2 symmetric system") {
  std::vector<ExactPoly> gens = {elementary_symmetric(2, 1, OrderKind::Lex),
                                 elementary_symmetric(2, 2, OrderKind::Lex)};
  GroebnerBasis gb = buchberger(gens, OrderKind::Lex);
  ExactPoly v2 = ExactPoly::variable(2, 2, OrderKind::Lex);
  ExactPoly nf = normal_form(v2, gb);
  CHECK(nf == -ExactPoly::variable(2, 1, OrderKind::Lex));
  CHECK(normal_form(ExactPoly::monomial(mono({2, 0}), Rational(1), OrderKind::Lex), gb).is_zero());
}

TEST_CASE("quotient dimension counts standard monomials") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<ExactPoly> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(elementary_symmetric(n, i));
    GroebnerBasis gb = buchberger(gens, OrderKind::GrevLex);
    auto dim = quotient_dimension(gb);
    REQUIRE(dim.has_value());
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(*dim == fact);
    CHECK(vanishes_only_at_origin(gb));
  }
}

TEST_CASE("infinite quotient detected and reported as not-only-origin") {
  // (v1, v2) in three variables: the v3 axis survives.
  std::vector<ExactPoly> gens = {ExactPoly::variable(3, 1), ExactPoly::variable(3, 2)};
  GroebnerBasis gb = buchberger(gens, OrderKind::GrevLex);
  CHECK(!quotient_dimension(gb).has_value());
  CHECK(!vanishes_only_at_origin(gb));
}

TEST_CASE("unit ideal has dimension zero") {
  std::vector<ExactPoly> gens = {ExactPoly::variable(2, 1),
                                 ExactPoly::variable(2, 1) + ExactPoly::constant(2, Rational(1))};
  GroebnerBasis gb = buchberger(gens, OrderKind::GrevLex);
  auto dim = quotient_dimension(gb);
  REQUIRE(dim.has_value());
  CHECK(*dim == 0);
}

TEST_CASE("groebner runs are deterministic") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExactPoly> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(rng, 3, 2, 3));
    GroebnerBasis a = buchberger(gens, OrderKind::GrevLex);
    GroebnerBasis b = buchberger(gens, OrderKind::GrevLex);
    CHECK(a == b);
  }
}

TEST_CASE("normal form is idempotent and kills ideal members") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<ExactPoly> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(random_poly(rng, 3, 2, 3));
    GroebnerBasis gb = buchberger(gens, OrderKind::GrevLex);
    ExactPoly p = random_poly(rng, 3, 3, 5);
    ExactPoly nf = normal_form(p, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(p - nf, gb).is_zero());
    // Explicit combination of generators reduces to zero.
    ExactPoly member = ExactPoly::zero(3);
    for (const auto& g : gens) member += g * random_poly(rng, 3, 2, 2);
    CHECK(normal_form(member, gb).is_zero());
  }
}

TEST_CASE("s-polynomials of a reduced basis reduce to zero") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ExactPoly> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(random_poly(rng, 3, 2, 3));
    GroebnerBasis gb = buchberger(gens, OrderKind::GrevLex);
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
      for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
        const ExactPoly& f = gb.generators[i];
        const ExactPoly& g = gb.generators[j];
        Monomial l(f.leading_monomial());
        for (int v = 0; v < 3; ++v)
          l.e[v] = std::max(f.leading_monomial().e[v], g.leading_monomial().e[v]);
        ExactPoly s = ExactPoly::zero(3);
        s.sub_mul(Rational(-1), l / f.leading_monomial(), f);
        s.sub_mul(Rational(1), l / g.leading_monomial(), g);
        CHECK(normal_form(s, gb).is_zero());
      }
  }
}

TEST_CASE("pair budget exhaustion raises resource_error") {
  std::vector<ExactPoly> gens;
  for (int i = 1; i <= 4; ++i) gens.push_back(elementary_symmetric(4, i));
  GroebnerOptions tight;
  tight.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(gens, OrderKind::GrevLex, tight), resource_error);
}
