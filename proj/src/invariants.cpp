#include "isospectra/invariants.hpp"

#include <bit>

namespace isospectra {

ExactPoly SquareFreePoly::to_exact(OrderKind ord) const {
  ExactPoly p(n, ord);
  for (const auto& [mask, c] : terms) {
    Monomial m(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m.e[i] = 1;
    p.add_term(m, c);
  }
  return p;
}

std::complex<double> SquareFreePoly::evaluate(std::span<const std::complex<double>> x) const {
  if (static_cast<int>(x.size()) != n) throw argument_error("SquareFreePoly: arity mismatch");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [mask, c] : terms) {
    std::complex<double> t = to_complex(c);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t *= x[i];
    acc += t;
  }
  return acc;
}

void PerturbationTable::validate() const {
  if (n < 1 || n > 31) throw argument_error("PerturbationTable: bad arity");
  for (const auto& [key, c] : cells) {
    auto [i, mask] = key;
    (void)c;
    if (i < 1 || i > n) throw argument_error("PerturbationTable: slot out of range");
    if (mask >= (1u << n)) throw argument_error("PerturbationTable: subset out of range");
    if (std::popcount(mask) > i - 1)
      throw argument_error("PerturbationTable: subset too large for its slot");
  }
}

SpectralIdeal SpectralIdeal::from_table(const PerturbationTable& table) {
  table.validate();
  std::vector<ExactPoly> g;
  g.reserve(table.n);
  for (int i = 1; i <= table.n; ++i) {
    SquareFreePoly gi;
    gi.n = table.n;
    for (const auto& [key, c] : table.cells)
      if (key.first == i && c != 0) gi.terms[key.second] = c;
    g.push_back(gi.to_exact());
  }
  SpectralIdeal e = from_perturbations(table.n, std::move(g));
  e.table_ = table;
  return e;
}

SpectralIdeal SpectralIdeal::from_perturbations(int n, std::vector<ExactPoly> g) {
  if (n < 1) throw argument_error("SpectralIdeal: bad arity");
  if (static_cast<int>(g.size()) > n) throw argument_error("SpectralIdeal: too many perturbations");
  g.resize(n, ExactPoly::zero(n));
  SpectralIdeal e;
  e.n_ = n;
  bool square_free = true;
  for (int i = 1; i <= n; ++i) {
    ExactPoly& gi = g[i - 1];
    if (gi.nvars() != n) throw argument_error("SpectralIdeal: perturbation arity mismatch");
    if (gi.order() != OrderKind::GrevLex) gi = gi.with_order(OrderKind::GrevLex);
    if (gi.degree() >= i)
      throw argument_error("SpectralIdeal: perturbation degree must be below its slot");
    for (const auto& [m, c] : gi.terms()) {
      (void)c;
      for (int v : m.e)
        if (v > 1) square_free = false;
    }
    e.gens_.push_back(elementary_symmetric(n, i) + gi);
  }
  e.perts_ = std::move(g);
  e.square_free_ = square_free;
  if (square_free) {
    PerturbationTable t;
    t.n = n;
    for (int i = 1; i <= n; ++i)
      for (const auto& [m, c] : e.perts_[i - 1].terms()) {
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
          if (m.e[v] == 1) mask |= (1u << v);
        t.cells[{i, mask}] = c;
      }
    e.table_ = std::move(t);
  }
  return e;
}

SpectralIdeal spectral_invariants(const RationalMatrix& a) {
  const int n = a.n;
  if (n < 1) throw argument_error("spectral_invariants: empty matrix");
  MinorTable minors = all_principal_minors(a);
  const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);

  PerturbationTable t;
  t.n = n;
  for (int i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= full; ++j) {
      const int pj = std::popcount(j);
      if (pj < 1 || pj > i - 1) continue;
      const int need = i - pj;
      // Sum principal minors over subsets N of the complement with |N| = need.
      const std::uint32_t comp = full & ~j;
      Rational c(0);
      std::uint32_t sub = comp;
      while (true) {
        if (std::popcount(sub) == need) c += minors[sub];
        if (sub == 0) break;
        sub = (sub - 1) & comp;
      }
      if (c != 0) t.cells[{i, j}] = c;
    }
  }
  return SpectralIdeal::from_table(t);
}

SpectralIdeal ideal_from_table(const PerturbationTable& table) {
  return SpectralIdeal::from_table(table);
}

bool equals_elementary_ideal(const SpectralIdeal& e, const GroebnerOptions& opts) {
  GroebnerBasis lhs = buchberger(e.generators(), OrderKind::GrevLex, opts);
  std::vector<ExactPoly> elem;
  for (int i = 1; i <= e.n(); ++i) elem.push_back(elementary_symmetric(e.n(), i));
  GroebnerBasis rhs = buchberger(elem, OrderKind::GrevLex, opts);
  return lhs == rhs;
}

SpectralIdeal scale_ideal(const SpectralIdeal& e, const Rational& t) {
  std::vector<ExactPoly> scaled;
  scaled.reserve(e.n());
  for (int i = 1; i <= e.n(); ++i) {
    const ExactPoly& g = e.perturbations()[i - 1];
    ExactPoly s(g.nvars(), g.order());
    for (const auto& [m, c] : g.terms()) {
      Rational f = c;
      for (int k = 0; k < i - m.degree(); ++k) f *= t;
      s.add_term(m, f);
    }
    scaled.push_back(std::move(s));
  }
  return SpectralIdeal::from_perturbations(e.n(), std::move(scaled));
}

}  // namespace isospectra
