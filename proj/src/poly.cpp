#include "isospectra/poly.hpp"

#include <algorithm>
#include <sstream>

namespace isospectra {

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
  return r;
}

int compare(const Monomial& a, const Monomial& b, OrderKind kind) {
  const int n = a.nvars();
  switch (kind) {
    case OrderKind::Lex:
      for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::GrLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case OrderKind::GrevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

ExactPoly ExactPoly::constant(int nvars, const Rational& c, OrderKind ord) {
  ExactPoly p(nvars, ord);
  if (c != 0) p.terms_.emplace(Monomial(nvars), c);
  return p;
}

ExactPoly ExactPoly::variable(int nvars, int i, OrderKind ord) {
  if (i < 1 || i > nvars) throw argument_error("variable index out of range");
  Monomial m(nvars);
  m.e[i - 1] = 1;
  ExactPoly p(nvars, ord);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

ExactPoly ExactPoly::monomial(Monomial m, const Rational& c, OrderKind ord) {
  ExactPoly p(static_cast<int>(m.e.size()), ord);
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

int ExactPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

const Monomial& ExactPoly::leading_monomial() const {
  if (terms_.empty()) throw argument_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& ExactPoly::leading_coeff() const {
  if (terms_.empty()) throw argument_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void ExactPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ExactPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, -c);
  return *this;
}

ExactPoly ExactPoly::operator+(const ExactPoly& p) const {
  ExactPoly r(*this);
  r += p;
  return r;
}

ExactPoly ExactPoly::operator-(const ExactPoly& p) const {
  ExactPoly r(*this);
  r -= p;
  return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& p) const {
  ExactPoly r(nvars_, order());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : p.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r(nvars_, order());
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

ExactPoly ExactPoly::operator*(const Rational& c) const {
  ExactPoly r(nvars_, order());
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool ExactPoly::operator==(const ExactPoly& p) const {
  if (nvars_ != p.nvars_ || terms_.size() != p.terms_.size()) return false;
  auto it = terms_.begin();
  for (const auto& [m, c] : p.terms_) {
    if (!(it->first == m) || it->second != c) return false;
    ++it;
  }
  return true;
}

void ExactPoly::sub_mul(const Rational& c, const Monomial& m, const ExactPoly& p) {
  for (const auto& [mp, cp] : p.terms_) add_term(m * mp, -(c * cp));
}

ExactPoly ExactPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = leading_coeff();
  ExactPoly r(nvars_, order());
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
  return r;
}

ExactPoly ExactPoly::with_order(OrderKind ord) const {
  ExactPoly r(nvars_, ord);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
  return r;
}

ExactPoly ExactPoly::derivative(int i) const {
  if (i < 1 || i > nvars_) throw argument_error("variable index out of range");
  ExactPoly r(nvars_, order());
  for (const auto& [m, c] : terms_) {
    int k = m.e[i - 1];
    if (k == 0) continue;
    Monomial d(m);
    d.e[i - 1] = k - 1;
    r.add_term(d, c * k);
  }
  return r;
}

std::complex<double> ExactPoly::evaluate(std::span<const std::complex<double>> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw argument_error("evaluation arity mismatch");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = to_complex(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

Rational ExactPoly::evaluate_rational(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw argument_error("evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

ExactPoly ExactPoly::substitute_tail(int first_var, std::span<const Rational> values) const {
  if (first_var < 1 || first_var > nvars_ + 1 ||
      static_cast<int>(values.size()) != nvars_ - first_var + 1)
    throw argument_error("substitute_tail arity mismatch");
  ExactPoly r(nvars_, order());
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Monomial mm(m);
    for (int i = first_var - 1; i < nvars_; ++i) {
      for (int k = 0; k < m.e[i]; ++k) t *= values[i - (first_var - 1)];
      mm.e[i] = 0;
    }
    r.add_term(mm, t);
  }
  return r;
}

std::string ExactPoly::str(const std::string& stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (ac == 1) && !m.is_constant();
    if (!unit) os << to_string(ac);
    bool any = false;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (any || !unit) os << "*";
      os << stem << (i + 1);
      if (m.e[i] > 1) os << "^" << m.e[i];
      any = true;
    }
  }
  return os.str();
}

ExactPoly elementary_symmetric(int n, int i, OrderKind ord) {
  if (n < 0 || i < 0) throw argument_error("elementary_symmetric: bad arguments");
  if (i == 0) return ExactPoly::constant(n, Rational(1), ord);
  if (i > n) return ExactPoly::zero(n, ord);
  ExactPoly p(n, ord);
  // Iterate i-subsets of [n] in combinatorial order.
  std::vector<int> idx(i);
  for (int k = 0; k < i; ++k) idx[k] = k;
  while (true) {
    Monomial m(n);
    for (int k : idx) m.e[k] = 1;
    p.add_term(m, Rational(1));
    int pos = i - 1;
    while (pos >= 0 && idx[pos] == n - i + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int k = pos + 1; k < i; ++k) idx[k] = idx[k - 1] + 1;
  }
  return p;
}

ExactPoly complete_homogeneous(int i, int j, int n, OrderKind ord) {
  if (j < 0 || j > n) throw argument_error("complete_homogeneous: bad variable count");
  if (i < 0) return ExactPoly::zero(n, ord);
  if (i == 0) return ExactPoly::constant(n, Rational(1), ord);
  if (j == 0) return ExactPoly::zero(n, ord);
  ExactPoly p(n, ord);
  // All exponent vectors on v1..vj of total degree i.
  std::vector<int> e(j, 0);
  e[0] = i;
  while (true) {
    Monomial m(n);
    for (int k = 0; k < j; ++k) m.e[k] = e[k];
    p.add_term(m, Rational(1));
    // Next composition of i into j parts (lexicographic walk).
    int pos = j - 2;
    while (pos >= 0 && e[pos] == 0) --pos;
    if (pos < 0) break;
    --e[pos];
    int tail = 1;
    for (int k = pos + 1; k < j; ++k) {
      tail += e[k];
      e[k] = 0;
    }
    e[pos + 1] = tail;
  }
  return p;
}

}  // namespace isospectra
