#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "isospectra/invariants.hpp"

using namespace isospectra;

namespace {

// Oracle: expand det(A + diag(v) - lambda*I) symbolically with lambda as an
// extra variable and read the generators off the characteristic-polynomial
// coefficients. Shares no code with the minor-table path.
std::vector<ExactPoly> oracle_invariants(const RationalMatrix& a) {
  const int n = a.n;
  const int nv = n + 1;  // v1..vn then lambda
  std::vector<std::vector<ExactPoly>> M(n, std::vector<ExactPoly>(n, ExactPoly::zero(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactPoly p = ExactPoly::constant(nv, a.at(i, j));
      if (i == j) p += ExactPoly::variable(nv, i + 1) - ExactPoly::variable(nv, nv);
      M[i][j] = p;
    }
  // Determinant by dynamic programming over column subsets, expanding along
  // the last used row.
  std::vector<ExactPoly> dp(1u << n, ExactPoly::zero(nv));
  dp[0] = ExactPoly::constant(nv, Rational(1));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int r = std::popcount(mask) - 1;
    ExactPoly acc = ExactPoly::zero(nv);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      ExactPoly term = M[r][j] * dp[mask & ~(1u << j)];
      acc += ((r + pos) % 2 == 0) ? term : -term;
      ++pos;
    }
    dp[mask] = acc;
  }
  const ExactPoly& det = dp[(1u << n) - 1];

  // det = sum_i C_i(v) * (-lambda)^(n-i); generator i is C_i - C_i(0).
  std::vector<ExactPoly> gens(n + 1, ExactPoly::zero(n));
  for (const auto& [m, c] : det.terms()) {
    const int lam = m.e[n];
    const int i = n - lam;
    if (i < 0 || i > n) continue;
    Monomial mm(n);
    for (int k = 0; k < n; ++k) mm.e[k] = m.e[k];
    Rational cc = (lam % 2 == 0) ? c : -c;
    if (mm.degree() == 0) continue;  // subtracts C_i(0)
    if (i >= 1) gens[i].add_term(mm, cc);
  }
  return {gens.begin() + 1, gens.end()};
}

RationalMatrix random_int_matrix(std::mt19937_64& rng, int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 11) - 5);
  return m;
}

RationalMatrix path3() {
  RationalMatrix m(3);
  m.at(0, 1) = m.at(1, 0) = 1;
  m.at(1, 2) = m.at(2, 1) = 1;
  return m;
}

RationalMatrix complete_minus_identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.at(i, j) = 1;
  return m;
}

ExactPoly var(int n, int i) { return ExactPoly::variable(n, i); }

// Relabels variables: v_r in the result carries the exponent of v_{p[r]+1}.
ExactPoly poly_perm(const ExactPoly& q, const std::vector<int>& p) {
  ExactPoly out(q.nvars(), q.order());
  for (const auto& [m, c] : q.terms()) {
    Monomial mm(q.nvars());
    for (std::size_t r = 0; r < p.size(); ++r) mm.e[r] = m.e[p[r]];
    out.add_term(mm, c);
  }
  return out;
}

// Example family: the three hand-picked perturbed ideals with zero locus {0}.
SpectralIdeal example_I1() {
  PerturbationTable t;
  t.n = 3;
  t.cells[{2, 0b001}] = Rational(-1);
  t.cells[{2, 0b010}] = Rational(-1);
  t.cells[{3, 0b011}] = Rational(1);
  t.cells[{3, 0b001}] = Rational(-1);
  t.cells[{3, 0b010}] = Rational(-1);
  return ideal_from_table(t);
}

SpectralIdeal example_I2() {
  std::vector<ExactPoly> g = {ExactPoly::zero(3), var(3, 1),
                              var(3, 1) * var(3, 1)};
  return SpectralIdeal::from_perturbations(3, std::move(g));
}

SpectralIdeal example_I3() {
  std::vector<ExactPoly> g = {ExactPoly::zero(3), -var(3, 2),
                              var(3, 1) * var(3, 1) + var(3, 1) * var(3, 2) + var(3, 2)};
  return SpectralIdeal::from_perturbations(3, std::move(g));
}

}  // namespace

TEST_CASE("square-free polynomials convert and evaluate consistently") {
  SquareFreePoly p;
  p.n = 3;
  p.terms[0b011] = Rational(2);
  p.terms[0b100] = Rational(-1, 2);
  ExactPoly q = p.to_exact();
  CHECK(q.term_count() == 2);
  std::vector<std::complex<double>> x = {{1, 1}, {2, 0}, {0, -1}};
  auto a = p.evaluate(x);
  auto b = q.evaluate(x);
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("spectral invariants of the 2x2 worked example") {
  RationalMatrix a(2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  // Frozen expectations, re-derived by the characteristic-polynomial oracle.
  ExactPoly s1 = var(2, 1) + var(2, 2);
  ExactPoly s2 = var(2, 1) * Rational(4) + var(2, 2) + var(2, 1) * var(2, 2);
  auto oracle = oracle_invariants(a);
  REQUIRE(oracle.size() == 2);
  CHECK(oracle[0] == s1);
  CHECK(oracle[1] == s2);

  SpectralIdeal e = spectral_invariants(a);
  CHECK(e.generators()[0] == s1);
  CHECK(e.generators()[1] == s2);
  CHECK(e.square_free());
}

TEST_CASE("minor-table route matches the characteristic-polynomial oracle") {
  std::mt19937_64 rng(211);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      RationalMatrix a = random_int_matrix(rng, n);
      SpectralIdeal e = spectral_invariants(a);
      auto oracle = oracle_invariants(a);
      for (int i = 0; i < n; ++i) CHECK(e.generators()[i] == oracle[i]);
    }
}

TEST_CASE("table-built ideal matches its hand-written generators") {
  SpectralIdeal i1 = example_I1();
  ExactPoly g1 = elementary_symmetric(3, 1);
  ExactPoly g2 = elementary_symmetric(3, 2) - var(3, 1) - var(3, 2);
  ExactPoly g3 = elementary_symmetric(3, 3) + var(3, 1) * var(3, 2) - var(3, 1) - var(3, 2);
  CHECK(i1.generators()[0] == g1);
  CHECK(i1.generators()[1] == g2);
  CHECK(i1.generators()[2] == g3);
  CHECK(i1.square_free());
  REQUIRE(i1.table().has_value());
  CHECK(i1.table()->cells.size() == 5);
}

TEST_CASE("escape hatch admits non-square-free perturbations") {
  SpectralIdeal i2 = example_I2();
  CHECK(!i2.square_free());
  CHECK(!i2.table().has_value());
  CHECK(i2.generators()[1] == elementary_symmetric(3, 2) + var(3, 1));
  CHECK(i2.generators()[2] == elementary_symmetric(3, 3) + var(3, 1) * var(3, 1));

  SpectralIdeal i3 = example_I3();
  CHECK(!i3.square_free());
}

TEST_CASE("table validation rejects malformed cells") {
  PerturbationTable t;
  t.n = 3;
  t.cells[{1, 0b001}] = Rational(1);  // |J| = 1 but slot 1 allows only degree 0
  CHECK_THROWS_AS(ideal_from_table(t), argument_error);

  PerturbationTable t2;
  t2.n = 3;
  t2.cells[{4, 0}] = Rational(1);
  CHECK_THROWS_AS(ideal_from_table(t2), argument_error);

  std::vector<ExactPoly> g = {ExactPoly::zero(2), var(2, 1) * var(2, 1)};  // degree 2 in slot 2
  CHECK_THROWS_AS(SpectralIdeal::from_perturbations(2, std::move(g)), argument_error);
}

TEST_CASE("quotient dimension is n-factorial for perturbed ideals") {
  for (const SpectralIdeal& e : {example_I1(), example_I2(), example_I3()}) {
    GroebnerBasis gb = buchberger(e.generators(), OrderKind::GrevLex);
    auto dim = quotient_dimension(gb);
    REQUIRE(dim.has_value());
    CHECK(*dim == 6);
  }
  std::mt19937_64 rng(223);
  for (int n = 3; n <= 5; ++n) {
    RationalMatrix a = random_int_matrix(rng, n);
    GroebnerBasis gb = buchberger(spectral_invariants(a).generators(), OrderKind::GrevLex);
    auto dim = quotient_dimension(gb);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    REQUIRE(dim.has_value());
    CHECK(*dim == fact);
  }
}

TEST_CASE("elementary-ideal recognition") {
  CHECK(equals_elementary_ideal(spectral_invariants(complete_minus_identity(3))));
  CHECK(equals_elementary_ideal(spectral_invariants(complete_minus_identity(4))));
  CHECK(!equals_elementary_ideal(spectral_invariants(path3())));

  // Triangular with equal diagonal: minors depend only on size.
  std::mt19937_64 rng(227);
  RationalMatrix tri(4);
  for (int i = 0; i < 4; ++i) {
    tri.at(i, i) = Rational(2);
    for (int j = i + 1; j < 4; ++j) tri.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
  }
  CHECK(equals_elementary_ideal(spectral_invariants(tri)));

  // Scalar matrix.
  RationalMatrix sc(3);
  for (int i = 0; i < 3; ++i) sc.at(i, i) = Rational(-3, 2);
  CHECK(equals_elementary_ideal(spectral_invariants(sc)));
}

TEST_CASE("scaling action on the table: frozen example") {
  SpectralIdeal scaled = scale_ideal(example_I1(), Rational(2));
  ExactPoly g2 = elementary_symmetric(3, 2) - var(3, 1) * Rational(2) - var(3, 2) * Rational(2);
  ExactPoly g3 = elementary_symmetric(3, 3) + var(3, 1) * var(3, 2) * Rational(2) -
                 var(3, 1) * Rational(4) - var(3, 2) * Rational(4);
  CHECK(scaled.generators()[1] == g2);
  CHECK(scaled.generators()[2] == g3);
}

TEST_CASE("scaling is a group action") {
  for (const SpectralIdeal& e : {example_I1(), example_I2()}) {
    SpectralIdeal once = scale_ideal(e, Rational(1));
    for (int i = 0; i < 3; ++i) CHECK(once.generators()[i] == e.generators()[i]);
    SpectralIdeal ab = scale_ideal(scale_ideal(e, Rational(2, 3)), Rational(-3));
    SpectralIdeal direct = scale_ideal(e, Rational(-2));
    for (int i = 0; i < 3; ++i) CHECK(ab.generators()[i] == direct.generators()[i]);
  }
}

TEST_CASE("scaling matches the spectrum dilation of a matrix") {
  // Invariants of t*A are the scaled invariants of A.
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 6; ++trial) {
    RationalMatrix a = random_int_matrix(rng, 3);
    Rational t(3, 2);
    RationalMatrix ta(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ta.at(i, j) = a.at(i, j) * t;
    SpectralIdeal left = spectral_invariants(ta);
    SpectralIdeal right = scale_ideal(spectral_invariants(a), t);
    for (int i = 0; i < 3; ++i) CHECK(left.generators()[i] == right.generators()[i]);
  }
}

TEST_CASE("equivariance under simultaneous permutation") {
  std::mt19937_64 rng(233);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    RationalMatrix a = random_int_matrix(rng, n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    RationalMatrix pa(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pa.at(i, j) = a.at(p[i], p[j]);
    SpectralIdeal left = spectral_invariants(pa);
    SpectralIdeal right = spectral_invariants(a);
    for (int i = 0; i < n; ++i)
      CHECK(left.generators()[i] == poly_perm(right.generators()[i], p));
  }
}
