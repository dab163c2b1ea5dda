#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isospectra/rational.hpp"

namespace isospectra {

// Monomial in a fixed number of variables v1..vn, dense exponent vector.
// Exponents are always >= 0 here; the Laurent ring used by the Floquet
// layer has its own representation.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_constant() const { return degree() == 0; }
  bool divides(const Monomial& m) const;

  Monomial operator*(const Monomial& m) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const;

  bool operator==(const Monomial& m) const { return e == m.e; }
};

// Term orders. Variable convention throughout: v1 < v2 < ... < vn.
//   Lex      : plain lexicographic, vn most significant.
//   GrLex    : total degree, then Lex tie-break.
//   GrevLex  : total degree, then reverse-lex (larger exponent on the
//              smallest differing variable means the *smaller* monomial).
enum class OrderKind { Lex, GrLex, GrevLex };

// Returns -1 / 0 / +1 for a < b, a == b, a > b under `kind`.
int compare(const Monomial& a, const Monomial& b, OrderKind kind);

// Stateful comparator usable as a std::map key order.
struct MonomialLess {
  OrderKind kind = OrderKind::GrevLex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, kind) < 0;
  }
};

// Sparse exact-coefficient polynomial over Q. Terms are kept in a map
// ordered by the polynomial's term order, so the leading term is rbegin().
// Invariant: no zero coefficients stored; all keys have nvars() == nvars_.
class ExactPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  ExactPoly() : ExactPoly(0, OrderKind::GrevLex) {}
  ExactPoly(int nvars, OrderKind ord)
      : nvars_(nvars), terms_(MonomialLess{ord}) {}

  static ExactPoly zero(int nvars, OrderKind ord = OrderKind::GrevLex) {
    return ExactPoly(nvars, ord);
  }
  static ExactPoly constant(int nvars, const Rational& c,
                            OrderKind ord = OrderKind::GrevLex);
  // 1-based variable index, matching the v1..vn naming everywhere else.
  static ExactPoly variable(int nvars, int i,
                            OrderKind ord = OrderKind::GrevLex);
  static ExactPoly monomial(Monomial m, const Rational& c,
                            OrderKind ord = OrderKind::GrevLex);

  int nvars() const { return nvars_; }
  OrderKind order() const { return terms_.key_comp().kind; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  void add_term(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  ExactPoly& operator+=(const ExactPoly& p);
  ExactPoly& operator-=(const ExactPoly& p);
  ExactPoly operator+(const ExactPoly& p) const;
  ExactPoly operator-(const ExactPoly& p) const;
  ExactPoly operator*(const ExactPoly& p) const;
  ExactPoly operator-() const;
  ExactPoly operator*(const Rational& c) const;
  bool operator==(const ExactPoly& p) const;

  // this -= c * m * p, the Buchberger/division inner step.
  void sub_mul(const Rational& c, const Monomial& m, const ExactPoly& p);

  ExactPoly scaled(const Rational& c) const { return (*this) * c; }
  ExactPoly monic() const;

  // Same terms under a different term order.
  ExactPoly with_order(OrderKind ord) const;

  // Formal partial derivative with respect to v_i (1-based).
  ExactPoly derivative(int i) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;
  Rational evaluate_rational(std::span<const Rational> x) const;

  // Substitutes v_i -> values[i-1] for i in [first_var..nvars], keeping the
  // first (first_var - 1) variables symbolic. Used by the scaling action and
  // by tests; result has the same arity with trailing variables unused.
  ExactPoly substitute_tail(int first_var, std::span<const Rational> values) const;

  std::string str(const std::string& stem = "v") const;

 private:
  int nvars_;
  TermMap terms_;
};

inline ExactPoly operator*(const Rational& c, const ExactPoly& p) { return p * c; }

// Elementary symmetric polynomial e_i(v1..vn); e_0 = 1.
ExactPoly elementary_symmetric(int n, int i, OrderKind ord = OrderKind::GrevLex);

// Complete homogeneous symmetric polynomial h_i(v1..vj) inside the ring
// with n variables; h_0 = 1, h_i = 0 for i < 0.
ExactPoly complete_homogeneous(int i, int j, int n, OrderKind ord = OrderKind::GrevLex);

}  // namespace isospectra
