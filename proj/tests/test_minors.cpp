#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "isospectra/minors.hpp"

using namespace isospectra;

namespace {

// Independent oracle: determinant by Laplace cofactor expansion along the
// first row. Deliberately a different algorithm from the library's Bareiss
// elimination.
Rational det_cofactor(const RationalMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return Rational(1);
  Rational acc(0);
  for (int c = 0; c < k; ++c) {
    const Rational& a = m.at(rows[0], cols[c]);
    if (a == 0) continue;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (int cc = 0; cc < k; ++cc)
      if (cc != c) sub_cols.push_back(cols[cc]);
    Rational term = a * det_cofactor(m, sub_rows, sub_cols);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

Rational det_oracle(const RationalMatrix& m) {
  std::vector<int> idx(m.n);
  std::iota(idx.begin(), idx.end(), 0);
  return det_cofactor(m, idx, idx);
}

RationalMatrix random_int_matrix(std::mt19937_64& rng, int n, int lo = -5, int hi = 5) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Rational(static_cast<long>(rng() % (hi - lo + 1)) + lo);
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

}  // namespace

TEST_CASE("bareiss determinant matches cofactor oracle") {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      RationalMatrix m = random_int_matrix(rng, n);
      CHECK(determinant(m) == det_oracle(m));
    }
}

TEST_CASE("determinant survives vanishing pivots") {
  // Leading principal minors vanish: Bareiss must fall back cleanly.
  RationalMatrix m(3);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(2, 2) = 5;
  CHECK(determinant(m) == Rational(-5));
  CHECK(determinant(m) == det_oracle(m));

  RationalMatrix z(4);  // all-zero matrix
  CHECK(determinant(z) == 0);

  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix r = random_int_matrix(rng, 4);
    for (int j = 0; j < 4; ++j) r.at(0, j) = 0;  // force singularity
    CHECK(determinant(r) == 0);
    CHECK(determinant(r) == det_oracle(r));
  }
}

TEST_CASE("principal minors of the three-vertex path") {
  RationalMatrix m = path3();
  CHECK(principal_minor(m, 0b011) == Rational(-1));  // {1,2}
  CHECK(principal_minor(m, 0b101) == Rational(0));   // {1,3}
  CHECK(principal_minor(m, 0b110) == Rational(-1));  // {2,3}
  CHECK(principal_minor(m, 0b111) == Rational(0));
  CHECK(principal_minor(m, 0) == Rational(1));

  MinorTable t = all_principal_minors(m);
  for (std::uint32_t mask = 0; mask < 8; ++mask) CHECK(t[mask] == principal_minor(m, mask));
}

TEST_CASE("minor table oracle agreement on random matrices") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m = random_int_matrix(rng, 5);
    MinorTable t = all_principal_minors(m);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < 5; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      CHECK(t[mask] == det_cofactor(m, idx, idx));
    }
  }
}

TEST_CASE("symmetrized-minor verdicts") {
  SUBCASE("complete graph is symmetric in every size") {
    for (int n = 2; n <= 5; ++n) {
      auto v = has_symmetrized_principal_minors(complete_minus_identity(n));
      CHECK(v.symmetrized);
    }
  }
  SUBCASE("path fails first at pair level") {
    auto v = has_symmetrized_principal_minors(path3());
    CHECK(!v.symmetrized);
    CHECK(v.k == 2);
    RationalMatrix m = path3();
    CHECK(principal_minor(m, v.mask_a) != principal_minor(m, v.mask_b));
  }
  SUBCASE("unequal diagonal fails at singletons") {
    RationalMatrix m(2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 2;
    auto v = has_symmetrized_principal_minors(m);
    CHECK(!v.symmetrized);
    CHECK(v.k == 1);
  }
  SUBCASE("scalar matrices pass") {
    RationalMatrix m(4);
    for (int i = 0; i < 4; ++i) m.at(i, i) = Rational(7, 3);
    CHECK(has_symmetrized_principal_minors(m).symmetrized);
  }
  SUBCASE("triangular with equal diagonal passes") {
    // Minors of a triangular matrix are products of diagonal entries, so
    // equal diagonal forces sizewise-equal minors.
    std::mt19937_64 rng(109);
    RationalMatrix m(4);
    for (int i = 0; i < 4; ++i) {
      m.at(i, i) = Rational(3);
      for (int j = i + 1; j < 4; ++j) m.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
    }
    CHECK(has_symmetrized_principal_minors(m).symmetrized);
  }
}

TEST_CASE("verdict is invariant under simultaneous permutation") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m = random_int_matrix(rng, 4);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix pm(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pm.at(i, j) = m.at(perm[i], perm[j]);
    CHECK(has_symmetrized_principal_minors(m).symmetrized ==
          has_symmetrized_principal_minors(pm).symmetrized);
  }
}

TEST_CASE("minor average defect on the path") {
  RationalMatrix m = path3();
  // Pair minors are -1, -1, 0; average -2/3; subset {1,3} has minor 0.
  CHECK(minor_average_defect(m, 2, 0b101) == Rational(2, 3));
  CHECK(minor_average_defect(m, 2, 0b011) == Rational(-1) - Rational(-2, 3));
  CHECK_THROWS_AS(minor_average_defect(m, 2, 0b001), argument_error);
}

TEST_CASE("graph rigidity trichotomy") {
  CHECK(graph_rigidity_class(RationalMatrix(3)) == GraphClass::Edgeless);
  CHECK(graph_rigidity_class(complete_minus_identity(4)) == GraphClass::CompleteEqualUpToSign);
  CHECK(graph_rigidity_class(path3()) == GraphClass::Other);

  // Signs do not matter, only squared weights.
  RationalMatrix s = complete_minus_identity(3);
  s.at(0, 1) = s.at(1, 0) = Rational(-1);
  CHECK(graph_rigidity_class(s) == GraphClass::CompleteEqualUpToSign);

  // Unequal weights on a complete graph: other.
  RationalMatrix w = complete_minus_identity(3);
  w.at(0, 1) = w.at(1, 0) = Rational(2);
  CHECK(graph_rigidity_class(w) == GraphClass::Other);

  RationalMatrix asym(2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(graph_rigidity_class(asym), argument_error);
  RationalMatrix diag(2);
  diag.at(0, 0) = 1;
  CHECK_THROWS_AS(graph_rigidity_class(diag), argument_error);
}

TEST_CASE("cap enforcement on subset enumeration") {
  RationalMatrix big(13);
  CHECK_THROWS_AS(all_principal_minors(big), resource_error);
  CHECK_NOTHROW(all_principal_minors(RationalMatrix(3), 3));
}
