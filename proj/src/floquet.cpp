#include "isospectra/floquet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace isospectra {

namespace {

// Fundamental domains stay small enough for index arithmetic in long.
constexpr long max_domain = 1L << 20;
// One symbolic determinant per subset, so 2^q of them at worst.
constexpr int max_exact_sites = 12;
constexpr int max_numeric_sites = 64;
constexpr long max_determinant_evals = 200000;
constexpr int auto_exact_sites = 8;
// The hop table is dense q x q even though most entries vanish.
constexpr int max_build_sites = 1024;

LaurentPoly lp_one(int nvars) { return LaurentPoly::constant(nvars, Rational(1)); }

// Hop structure of a single axis: tridiagonal with the wrap-around edge
// carrying the boundary multiplier. Periods 1 and 2 merge the two cycle
// edges into one entry.
std::vector<LaurentPoly> base_hop(int d, int q1) {
  std::vector<LaurentPoly> h(static_cast<std::size_t>(q1) * q1, LaurentPoly::zero(d));
  if (q1 == 1) {
    h[0] = LaurentPoly::variable(d, 1) + LaurentPoly::variable(d, 1, -1);
    return h;
  }
  if (q1 == 2) {
    h[1] = lp_one(d) + LaurentPoly::variable(d, 1, -1);
    h[2] = lp_one(d) + LaurentPoly::variable(d, 1);
    return h;
  }
  for (int i = 0; i + 1 < q1; ++i) {
    h[static_cast<std::size_t>(i) * q1 + i + 1] = lp_one(d);
    h[static_cast<std::size_t>(i + 1) * q1 + i] = lp_one(d);
  }
  h[q1 - 1] += LaurentPoly::variable(d, 1, -1);
  h[static_cast<std::size_t>(q1 - 1) * q1] += LaurentPoly::variable(d, 1);
  return h;
}

// Extends a hop table over the first k-1 axes (block size t) by axis k:
// the same cycle structure one level up, with identity couplings between
// copies of the smaller table.
std::vector<LaurentPoly> extend_hop(std::vector<LaurentPoly> prev, long t, int d, int axis,
                                    int qk) {
  if (qk == 1) {
    LaurentPoly wrap = LaurentPoly::variable(d, axis) + LaurentPoly::variable(d, axis, -1);
    for (long i = 0; i < t; ++i) prev[static_cast<std::size_t>(i) * t + i] += wrap;
    return prev;
  }
  long total = t * qk;
  std::vector<LaurentPoly> h(static_cast<std::size_t>(total) * total, LaurentPoly::zero(d));
  auto couple = [&](int bi, int bj, const LaurentPoly& p) {
    for (long r = 0; r < t; ++r)
      h[static_cast<std::size_t>(bi * t + r) * total + bj * t + r] += p;
  };
  for (int b = 0; b < qk; ++b)
    for (long r = 0; r < t; ++r)
      for (long c = 0; c < t; ++c)
        h[static_cast<std::size_t>(b * t + r) * total + b * t + c] =
            prev[static_cast<std::size_t>(r) * t + c];
  if (qk == 2) {
    couple(0, 1, lp_one(d) + LaurentPoly::variable(d, axis, -1));
    couple(1, 0, lp_one(d) + LaurentPoly::variable(d, axis));
    return h;
  }
  for (int b = 0; b + 1 < qk; ++b) {
    couple(b, b + 1, lp_one(d));
    couple(b + 1, b, lp_one(d));
  }
  couple(0, qk - 1, LaurentPoly::variable(d, axis, -1));
  couple(qk - 1, 0, LaurentPoly::variable(d, axis));
  return h;
}

DispersionPoly dispersion_exact(const Periods& p, const Potential& v) {
  long q = p.total();
  if (q > max_exact_sites) throw resource_error("dispersion_poly: exact mode size above cap");
  if (!v.is_exact()) throw argument_error("dispersion_poly: exact mode needs an exact potential");
  FloquetMatrix fm = build_floquet_matrix(p, v);
  int nv = p.dim() + 1;
  LaurentPoly lambda = LaurentPoly::variable(nv, nv);
  std::vector<LaurentPoly> m(static_cast<std::size_t>(q) * q);
  for (long k = 0; k < q * q; ++k) m[k] = fm.hop[k].embedded(nv);
  for (long i = 0; i < q; ++i) {
    LaurentPoly& diag = m[static_cast<std::size_t>(i) * q + i];
    diag += LaurentPoly::constant(nv, (*v.exact)[i]);
    diag -= lambda;
  }
  DispersionPoly out;
  out.periods = p;
  out.exact_mode = true;
  out.exact = laurent_determinant(std::move(m), static_cast<int>(q));
  for (const auto& [e, c] : out.exact.terms())
    out.approx.emplace(e, std::complex<double>(to_double(c), 0.0));
  return out;
}

DispersionPoly dispersion_numeric(const Periods& p, const Potential& v) {
  long q = p.total();
  if (q > max_numeric_sites) throw resource_error("dispersion_poly: numeric mode size above cap");
  int d = p.dim();
  std::vector<int> bound(d), nodes(d);
  long grid = 1;
  for (int j = 0; j < d; ++j) {
    bound[j] = static_cast<int>(q / p.q[j]);
    nodes[j] = 2 * bound[j] + 1;
    grid *= nodes[j];
    if (grid > max_determinant_evals)
      throw resource_error("dispersion_poly: evaluation budget exceeded");
  }
  int nl = static_cast<int>(q) + 1;
  if (grid * nl > max_determinant_evals)
    throw resource_error("dispersion_poly: evaluation budget exceeded");

  FloquetMatrix fm = build_floquet_matrix(p, v);
  double vmax = 0.0;
  for (const auto& x : v.values) vmax = std::max(vmax, std::abs(x));
  // Gershgorin keeps every eigenvalue inside this circle, so the lambda
  // nodes interpolate on a scale matching the coefficients.
  const double radius = std::max(1.0, vmax) + 2.0 * d + 2.0;
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<std::vector<std::complex<double>>> coef(
      static_cast<std::size_t>(grid), std::vector<std::complex<double>>(nl));
  std::vector<int> k(d);
  std::vector<std::complex<double>> zv(d);
  Eigen::MatrixXcd base(q, q), shifted(q, q);
  for (long g = 0; g < grid; ++g) {
    long rest = g;
    for (int j = 0; j < d; ++j) {
      k[j] = static_cast<int>(rest % nodes[j]);
      rest /= nodes[j];
      zv[j] = std::polar(1.0, two_pi * k[j] / nodes[j]);
    }
    std::vector<std::complex<double>> dense = fm.at(zv);
    for (long i = 0; i < q; ++i)
      for (long j = 0; j < q; ++j) base(i, j) = dense[static_cast<std::size_t>(i) * q + j];
    std::vector<std::complex<double>> samples(nl);
    for (int s = 0; s < nl; ++s) {
      shifted = base;
      std::complex<double> lam = std::polar(radius, two_pi * s / nl);
      for (long i = 0; i < q; ++i) shifted(i, i) -= lam;
      samples[s] = shifted.partialPivLu().determinant();
    }
    // Inverse transform in lambda; dividing by radius^b rescales the node
    // circle back to coefficients.
    double scale = 1.0;
    for (int b = 0; b < nl; ++b) {
      std::complex<double> acc = 0.0;
      for (int s = 0; s < nl; ++s) acc += samples[s] * std::polar(1.0, -two_pi * s * b / nl);
      coef[g][b] = acc / (static_cast<double>(nl) * scale);
      scale *= radius;
    }
  }

  // Inverse transform along each z axis in turn.
  long stride = 1;
  for (int j = 0; j < d; ++j) {
    int n = nodes[j];
    std::vector<std::vector<std::complex<double>>> line(n);
    for (long g = 0; g < grid; ++g) {
      if ((g / stride) % n != 0) continue;
      for (int s = 0; s < n; ++s) line[s] = coef[g + s * stride];
      for (int a = 0; a < n; ++a) {
        std::vector<std::complex<double>>& out = coef[g + a * stride];
        for (int b = 0; b < nl; ++b) {
          std::complex<double> acc = 0.0;
          for (int s = 0; s < n; ++s)
            acc += line[s][b] * std::polar(1.0, -two_pi * s * a / n);
          out[b] = acc / static_cast<double>(n);
        }
      }
    }
    stride *= n;
  }

  DispersionPoly out;
  out.periods = p;
  out.exact_mode = false;
  out.exact = LaurentPoly::zero(d + 1);
  for (long g = 0; g < grid; ++g) {
    long rest = g;
    LaurentPoly::Exp e(d + 1, 0);
    for (int j = 0; j < d; ++j) {
      int a = static_cast<int>(rest % nodes[j]);
      rest /= nodes[j];
      e[j] = a <= bound[j] ? a : a - nodes[j];
    }
    for (int b = 0; b < nl; ++b) {
      e[d] = b;
      out.approx.emplace(e, coef[g][b]);
    }
  }
  return out;
}

}  // namespace

long Periods::total() const {
  long t = 1;
  for (int x : q) {
    if (x < 1) throw argument_error("Periods: every period must be positive");
    if (t > max_domain / x) throw resource_error("Periods: fundamental domain too large");
    t *= x;
  }
  return t;
}

void Periods::validate() const {
  if (q.empty()) throw argument_error("Periods: need at least one axis");
  (void)total();
}

long Periods::index(std::span<const int> n) const {
  if (static_cast<int>(n.size()) != dim()) throw argument_error("Periods: point arity mismatch");
  long idx = 0;
  long stride = 1;
  for (int j = 0; j < dim(); ++j) {
    if (n[j] < 0 || n[j] >= q[j]) throw argument_error("Periods: point out of range");
    idx += stride * n[j];
    stride *= q[j];
  }
  return idx;
}

std::vector<int> Periods::point(long idx) const {
  if (idx < 0 || idx >= total()) throw argument_error("Periods: index out of range");
  std::vector<int> n(dim());
  for (int j = 0; j < dim(); ++j) {
    n[j] = static_cast<int>(idx % q[j]);
    idx /= q[j];
  }
  return n;
}

Potential Potential::zero(const Periods& p) {
  p.validate();
  Potential v;
  v.periods = p;
  v.values.assign(static_cast<std::size_t>(p.total()), std::complex<double>(0.0));
  v.exact = std::vector<Rational>(static_cast<std::size_t>(p.total()), Rational(0));
  return v;
}

Potential Potential::from_exact(const Periods& p, std::vector<Rational> vals) {
  p.validate();
  if (static_cast<long>(vals.size()) != p.total())
    throw argument_error("Potential: one value per lattice point");
  Potential v;
  v.periods = p;
  v.values.reserve(vals.size());
  for (const Rational& r : vals) v.values.emplace_back(to_double(r), 0.0);
  v.exact = std::move(vals);
  return v;
}

Potential Potential::from_values(const Periods& p, std::vector<std::complex<double>> vals) {
  p.validate();
  if (static_cast<long>(vals.size()) != p.total())
    throw argument_error("Potential: one value per lattice point");
  Potential v;
  v.periods = p;
  v.values = std::move(vals);
  return v;
}

void Potential::validate() const {
  periods.validate();
  if (static_cast<long>(values.size()) != periods.total())
    throw argument_error("Potential: one value per lattice point");
  if (exact && exact->size() != values.size())
    throw argument_error("Potential: exact and numeric values disagree in length");
}

LaurentPoly FloquetMatrix::entry(int i, int j) const {
  if (i < 0 || i >= size || j < 0 || j >= size)
    throw argument_error("FloquetMatrix: entry out of range");
  LaurentPoly e = hop[static_cast<std::size_t>(i) * size + j];
  if (i == j) {
    if (!v.is_exact())
      throw argument_error("FloquetMatrix: exact entries need an exact potential");
    e += LaurentPoly::constant(periods.dim(), (*v.exact)[i]);
  }
  return e;
}

std::vector<std::complex<double>> FloquetMatrix::at(
    std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != periods.dim())
    throw argument_error("FloquetMatrix: boundary point arity mismatch");
  std::vector<std::complex<double>> m(static_cast<std::size_t>(size) * size);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = hop[k].evaluate(z);
  for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i) * size + i] += v.values[i];
  return m;
}

FloquetMatrix build_floquet_matrix(const Periods& p, const Potential& v) {
  p.validate();
  v.validate();
  if (!(v.periods == p)) throw argument_error("build_floquet_matrix: period mismatch");
  long q = p.total();
  if (q > max_build_sites) throw resource_error("build_floquet_matrix: size above cap");
  int d = p.dim();
  std::vector<LaurentPoly> hop = base_hop(d, p.q[0]);
  long t = p.q[0];
  for (int k = 1; k < d; ++k) {
    hop = extend_hop(std::move(hop), t, d, k + 1, p.q[k]);
    t *= p.q[k];
  }
  FloquetMatrix fm;
  fm.periods = p;
  fm.size = static_cast<int>(q);
  fm.hop = std::move(hop);
  fm.v = v;
  return fm;
}

RationalMatrix cycle_adjacency(int q) {
  if (q < 1) throw argument_error("cycle_adjacency: cycle needs at least one vertex");
  RationalMatrix m(q);
  for (int i = 0; i < q; ++i)
    for (int delta : {1, q - 1}) m.at(i, (i + delta) % q) += 1;
  return m;
}

DispersionPoly dispersion_poly(const Periods& p, const Potential& v, DispersionMode mode) {
  p.validate();
  v.validate();
  if (!(v.periods == p)) throw argument_error("dispersion_poly: period mismatch");
  if (mode == DispersionMode::Auto)
    mode = (v.is_exact() && p.total() <= auto_exact_sites) ? DispersionMode::Exact
                                                           : DispersionMode::Numeric;
  return mode == DispersionMode::Exact ? dispersion_exact(p, v) : dispersion_numeric(p, v);
}

bool floquet_isospectral(const Potential& v, const Potential& w, DispersionMode mode,
                         double tol) {
  v.validate();
  w.validate();
  if (!(v.periods == w.periods))
    throw argument_error("floquet_isospectral: potentials live on different lattices");
  if (mode == DispersionMode::Auto)
    mode = (v.is_exact() && w.is_exact() && v.periods.total() <= auto_exact_sites)
               ? DispersionMode::Exact
               : DispersionMode::Numeric;
  DispersionPoly a = dispersion_poly(v.periods, v, mode);
  DispersionPoly b = dispersion_poly(w.periods, w, mode);
  if (mode == DispersionMode::Exact) return a.exact == b.exact;
  auto covered = [tol](const DispersionPoly& x, const DispersionPoly& y) {
    for (const auto& [e, c] : x.approx) {
      auto it = y.approx.find(e);
      std::complex<double> other = it == y.approx.end() ? std::complex<double>(0.0) : it->second;
      if (std::abs(c - other) > tol) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

FloquetIdeal spectral_invariant_system(const Periods& p) {
  return spectral_invariant_system(p, std::span<const Rational>{});
}

FloquetIdeal spectral_invariant_system(const Periods& p, std::span<const Rational> base) {
  p.validate();
  long q = p.total();
  if (q > max_exact_sites) throw resource_error("spectral_invariant_system: size above cap");
  if (!base.empty() && static_cast<long>(base.size()) != q)
    throw argument_error("spectral_invariant_system: base length must match the site count");
  FloquetMatrix fm = build_floquet_matrix(p, Potential::zero(p));
  int d = p.dim();
  int nv = d + 1;
  LaurentPoly lambda = LaurentPoly::variable(nv, nv);
  std::vector<LaurentPoly> a(static_cast<std::size_t>(q) * q);
  for (long k = 0; k < q * q; ++k) a[k] = fm.hop[k].embedded(nv);
  for (long i = 0; i < q; ++i) {
    LaurentPoly& diag = a[static_cast<std::size_t>(i) * q + i];
    if (!base.empty() && base[i] != 0) diag += LaurentPoly::constant(nv, base[i]);
    diag -= lambda;
  }

  // det(L_0 + diag(v) - lambda I) expands multilinearly in v: the subset J
  // of diagonal slots contributing their v factor leaves the complementary
  // principal minor behind. Bucketing those minors by monomial in z and
  // lambda yields one polynomial condition per bucket.
  const std::uint32_t full = (1u << q) - 1;
  std::map<LaurentPoly::Exp, ExactPoly> buckets;
  std::vector<LaurentPoly> sub;
  for (std::uint32_t keep = 0; keep < full; ++keep) {
    int k = std::popcount(keep);
    LaurentPoly det = LaurentPoly::constant(nv, Rational(1));
    if (k > 0) {
      sub.clear();
      for (long i = 0; i < q; ++i) {
        if (!(keep & (1u << i))) continue;
        for (long j = 0; j < q; ++j)
          if (keep & (1u << j)) sub.push_back(a[static_cast<std::size_t>(i) * q + j]);
      }
      det = laurent_determinant(std::move(sub), k);
    }
    Monomial mon(static_cast<int>(q));
    std::uint32_t j_mask = full & ~keep;
    for (long i = 0; i < q; ++i)
      if (j_mask & (1u << i)) mon.e[i] = 1;
    for (const auto& [e, c] : det.terms()) {
      auto it = buckets.try_emplace(e, ExactPoly::zero(static_cast<int>(q))).first;
      it->second.add_term(mon, c);
    }
  }

  std::vector<std::pair<LaurentPoly::Exp, ExactPoly>> items;
  for (auto& [e, poly] : buckets)
    if (!poly.is_zero()) items.emplace_back(e, std::move(poly));
  std::sort(items.begin(), items.end(), [d](const auto& x, const auto& y) {
    if (x.first[d] != y.first[d]) return x.first[d] > y.first[d];
    return x.first < y.first;
  });

  FloquetIdeal out;
  out.periods = p;
  out.nvars = static_cast<int>(q);
  ExactPoly minus_one = ExactPoly::constant(static_cast<int>(q), Rational(-1));
  for (auto& [e, poly] : items) {
    out.keys.push_back(e);
    if (e[d] % 2 == 0)
      out.generators.push_back(std::move(poly));
    else
      out.generators.push_back(poly * minus_one);
  }
  return out;
}

Potential lift_potential(const Potential& v, const Periods& target) {
  v.validate();
  target.validate();
  if (target.dim() != v.periods.dim())
    throw argument_error("lift_potential: period dimensions differ");
  for (int j = 0; j < target.dim(); ++j)
    if (target.q[j] % v.periods.q[j] != 0)
      throw argument_error("lift_potential: each target period must be a multiple of the source");
  Potential out;
  out.periods = target;
  long n = target.total();
  out.values.resize(static_cast<std::size_t>(n));
  if (v.is_exact()) out.exact = std::vector<Rational>(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    std::vector<int> pt = target.point(i);
    for (int j = 0; j < target.dim(); ++j) pt[j] %= v.periods.q[j];
    long s = v.periods.index(pt);
    out.values[i] = v.values[s];
    if (v.is_exact()) (*out.exact)[i] = (*v.exact)[s];
  }
  return out;
}

std::vector<BandSample> band_spectrum_sample(const Periods& p, const Potential& v, int grid) {
  p.validate();
  v.validate();
  if (!(v.periods == p)) throw argument_error("band_spectrum_sample: period mismatch");
  if (grid < 1) throw argument_error("band_spectrum_sample: grid needs at least one point");
  long q = p.total();
  if (q > 128) throw resource_error("band_spectrum_sample: size above cap");
  long points = 1;
  for (int j = 0; j < p.dim(); ++j) {
    points *= grid;
    if (points > 65536) throw resource_error("band_spectrum_sample: grid too large");
  }
  FloquetMatrix fm = build_floquet_matrix(p, v);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<BandSample> out;
  out.reserve(static_cast<std::size_t>(points));
  Eigen::MatrixXcd m(q, q);
  for (long g = 0; g < points; ++g) {
    long rest = g;
    std::vector<std::complex<double>> zv(p.dim());
    for (int j = 0; j < p.dim(); ++j) {
      long kj = rest % grid;
      rest /= grid;
      zv[j] = std::polar(1.0, two_pi * kj / grid);
    }
    std::vector<std::complex<double>> dense = fm.at(zv);
    for (long i = 0; i < q; ++i)
      for (long j = 0; j < q; ++j) m(i, j) = dense[static_cast<std::size_t>(i) * q + j];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success)
      throw resource_error("band_spectrum_sample: eigenvalue iteration failed");
    std::vector<std::complex<double>> eigs(static_cast<std::size_t>(q));
    for (long i = 0; i < q; ++i) eigs[i] = es.eigenvalues()(i);
    std::sort(eigs.begin(), eigs.end(), [](std::complex<double> x, std::complex<double> y) {
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    });
    out.push_back(BandSample{std::move(zv), std::move(eigs)});
  }
  return out;
}

bool eigenvalue_multisets_match(std::span<const std::complex<double>> a,
                                std::span<const std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<std::complex<double>> x(a.begin(), a.end());
  std::vector<std::complex<double>> y(b.begin(), b.end());
  auto lt = [](std::complex<double> u, std::complex<double> w) {
    if (u.real() != w.real()) return u.real() < w.real();
    return u.imag() < w.imag();
  };
  std::sort(x.begin(), x.end(), lt);
  std::sort(y.begin(), y.end(), lt);
  std::vector<bool> used(y.size(), false);
  for (const auto& u : x) {
    int best = -1;
    double best_dist = tol;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      double dist = std::abs(u - y[j]);
      if (dist <= best_dist) {
        best_dist = dist;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) return false;
    used[static_cast<std::size_t>(best)] = true;
  }
  return true;
}

FloquetSearch find_isospectral_potential(const Periods& p, const SolveConfig& cfg,
                                         const GroebnerOptions& gopts) {
  p.validate();
  cfg.validate();
  FloquetSearch s;
  int d = p.dim();

  // Any axis of period >= 4 settles the question: its cycle system has
  // nonzero solutions, and solutions of one axis lift to the full lattice.
  int axis = -1;
  for (int j = 0; j < d; ++j)
    if (p.q[j] >= 4 && (axis == -1 || p.q[j] < p.q[axis])) axis = j;
  if (axis >= 0) {
    int qa = p.q[axis];
    std::optional<Witness> w = find_nonzero_witness(cycle_adjacency(qa), cfg);
    if (!w) {
      s.outcome = FloquetOutcome::Inconclusive;
      s.axis = axis;
      s.detail = "restart budget exhausted on the period-" + std::to_string(qa) + " cycle of axis " +
                 std::to_string(axis);
      return s;
    }
    Periods line;
    line.q.assign(static_cast<std::size_t>(d), 1);
    line.q[axis] = qa;
    Potential seed = Potential::from_values(line, w->d);
    s.outcome = FloquetOutcome::WitnessFound;
    s.potential = lift_potential(seed, p);
    s.witness = std::move(w);
    s.axis = axis;
    s.detail = "solved the period-" + std::to_string(qa) + " cycle on axis " +
               std::to_string(axis) + " and lifted the solution";
    return s;
  }

  // Axes of period 1 and 2 impose conditions solved only by zero, so they
  // drop out; what remains is the period-3 core.
  int threes = 0;
  for (int j = 0; j < d; ++j) threes += p.q[j] == 3 ? 1 : 0;
  if (threes == 0) {
    s.outcome = FloquetOutcome::Rigid;
    s.detail = "every axis has period at most 2, which forces the zero potential";
    return s;
  }
  if (threes > 2) {
    s.outcome = FloquetOutcome::Inconclusive;
    s.detail = "more than two period-3 axes remain after reduction; no certificate is known";
    return s;
  }
  Periods core;
  core.q.assign(static_cast<std::size_t>(threes), 3);
  try {
    FloquetIdeal sys = spectral_invariant_system(core);
    GroebnerBasis gb = buchberger(sys.generators, OrderKind::GrevLex, gopts);
    if (vanishes_only_at_origin(gb)) {
      s.outcome = FloquetOutcome::Rigid;
      s.detail = "the period-3 core system vanishes only at the origin";
    } else {
      s.outcome = FloquetOutcome::Inconclusive;
      s.detail = "the period-3 core system has nonzero solutions, but none was constructed";
    }
  } catch (const resource_error&) {
    s.outcome = FloquetOutcome::Inconclusive;
    s.detail = "certificate computation for the period-3 core exceeded its budget";
  }
  return s;
}

}  // namespace isospectra
