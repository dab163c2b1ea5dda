#include "isospectra/laurent.hpp"

#include <sstream>
#include <utility>

namespace isospectra {

namespace {

void check_arity(const LaurentPoly& p, const LaurentPoly::Exp& e) {
  if (static_cast<int>(e.size()) != p.nvars())
    throw argument_error("LaurentPoly: exponent arity mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
  if (i < 1 || i > nvars) throw argument_error("LaurentPoly: variable index out of range");
  LaurentPoly p(nvars);
  Exp e(nvars, 0);
  e[i - 1] = power;
  p.add_term(e, Rational(1));
  return p;
}

LaurentPoly LaurentPoly::term(Exp e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exp& e, const Rational& c) {
  check_arity(*this, e);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(const Exp& e) const {
  check_arity(*this, e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const LaurentPoly::Exp& LaurentPoly::leading_exp() const {
  if (terms_.empty()) throw argument_error("LaurentPoly: leading term of zero");
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw argument_error("LaurentPoly: leading term of zero");
  return terms_.rbegin()->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& p) {
  if (p.nvars_ != nvars_) throw argument_error("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : p.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& p) {
  if (p.nvars_ != nvars_) throw argument_error("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : p.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& p) const {
  LaurentPoly out = *this;
  out += p;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& p) const {
  LaurentPoly out = *this;
  out -= p;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& p) const {
  if (p.nvars_ != nvars_) throw argument_error("LaurentPoly: arity mismatch");
  LaurentPoly out(nvars_);
  Exp e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : p.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& p) const {
  return nvars_ == p.nvars_ && terms_ == p.terms_;
}

void LaurentPoly::sub_mul(const Rational& c, const Exp& e, const LaurentPoly& p) {
  check_arity(*this, e);
  if (p.nvars_ != nvars_) throw argument_error("LaurentPoly: arity mismatch");
  Exp shifted(nvars_);
  for (const auto& [ep, cp] : p.terms_) {
    for (int i = 0; i < nvars_; ++i) shifted[i] = ep[i] + e[i];
    add_term(shifted, -c * cp);
  }
}

LaurentPoly LaurentPoly::invert_vars() const {
  LaurentPoly out(nvars_);
  Exp e(nvars_);
  for (const auto& [ep, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = -ep[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::embedded(int nvars) const {
  if (nvars < nvars_) throw argument_error("LaurentPoly: embedding must not drop variables");
  LaurentPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exp wide(nvars, 0);
    for (int i = 0; i < nvars_; ++i) wide[i] = e[i];
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != nvars_) throw argument_error("LaurentPoly: arity mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> v = to_double(c);
    for (int i = 0; i < nvars_; ++i) {
      int k = e[i];
      std::complex<double> base = k >= 0 ? z[i] : 1.0 / z[i];
      for (int rep = 0; rep < (k >= 0 ? k : -k); ++rep) v *= base;
    }
    acc += v;
  }
  return acc;
}

std::string LaurentPoly::str(const std::string& stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    bool bare = true;
    for (int v : it->first)
      if (v != 0) bare = false;
    if (mag != 1 || bare) out << to_string(mag);
    bool star = mag != 1 && !bare;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (star) out << "*";
      out << stem << i + 1;
      if (it->first[i] != 1) out << "^" << it->first[i];
      star = true;
    }
  }
  return out.str();
}

LaurentPoly laurent_divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw argument_error("laurent_divide_exact: division by zero");
  if (f.nvars() != g.nvars()) throw argument_error("laurent_divide_exact: arity mismatch");
  const int n = f.nvars();
  LaurentPoly q(n);
  if (f.is_zero()) return q;

  // Exponent boxes add under exact multiplication, so the quotient has at
  // most prod(spread_i(f) - spread_i(g) + 1) terms; more steps means the
  // division is not exact.
  long long budget = 1;
  for (int i = 0; i < n; ++i) {
    int flo = f.terms().begin()->first[i], fhi = flo;
    for (const auto& [e, c] : f.terms()) {
      flo = std::min(flo, e[i]);
      fhi = std::max(fhi, e[i]);
    }
    int glo = g.terms().begin()->first[i], ghi = glo;
    for (const auto& [e, c] : g.terms()) {
      glo = std::min(glo, e[i]);
      ghi = std::max(ghi, e[i]);
    }
    int spread = (fhi - flo) - (ghi - glo);
    if (spread < 0) throw argument_error("laurent_divide_exact: not an exact multiple");
    if (budget < (1LL << 40)) budget *= spread + 1;
  }

  LaurentPoly rest = f;
  const LaurentPoly::Exp& glead = g.leading_exp();
  const Rational& gc = g.leading_coeff();
  LaurentPoly::Exp e(n);
  for (long long step = 0; !rest.is_zero(); ++step) {
    if (step > budget) throw argument_error("laurent_divide_exact: not an exact multiple");
    const LaurentPoly::Exp& flead = rest.leading_exp();
    for (int i = 0; i < n; ++i) e[i] = flead[i] - glead[i];
    Rational c = rest.leading_coeff() / gc;
    q.add_term(e, c);
    rest.sub_mul(c, e, g);
  }
  return q;
}

LaurentPoly laurent_determinant(std::vector<LaurentPoly> m, int k) {
  if (k < 0 || static_cast<int>(m.size()) != k * k)
    throw argument_error("laurent_determinant: matrix shape mismatch");
  if (k == 0) return LaurentPoly::constant(0, Rational(1));
  const int n = m[0].nvars();
  for (const LaurentPoly& p : m)
    if (p.nvars() != n) throw argument_error("laurent_determinant: arity mismatch");

  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(n, Rational(1));
  for (int r = 0; r + 1 < k; ++r) {
    if (m[r * k + r].is_zero()) {
      int swap = -1;
      for (int i = r + 1; i < k && swap < 0; ++i)
        if (!m[i * k + r].is_zero()) swap = i;
      if (swap < 0) return LaurentPoly::zero(n);
      for (int j = 0; j < k; ++j) std::swap(m[r * k + j], m[swap * k + j]);
      negate = !negate;
    }
    for (int i = r + 1; i < k; ++i) {
      for (int j = r + 1; j < k; ++j) {
        LaurentPoly num = m[r * k + r] * m[i * k + j] - m[i * k + r] * m[r * k + j];
        m[i * k + j] = laurent_divide_exact(num, prev);
      }
      m[i * k + r] = LaurentPoly::zero(n);
    }
    prev = m[r * k + r];
  }
  LaurentPoly det = std::move(m[static_cast<std::size_t>(k) * k - 1]);
  return negate ? -det : det;
}

}  // namespace isospectra
