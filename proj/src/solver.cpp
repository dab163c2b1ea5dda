#include "isospectra/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace isospectra {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_bits() {
    state = splitmix64(state);
    return state;
  }
  // 53-bit mantissa uniform in [0, 1).
  double uniform() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }
};

long factorial_long(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Generators flattened to double coefficients for the numeric loops; the
// coefficients themselves are exact rationals rounded once.
struct Compiled {
  int n = 0;
  struct Term {
    double c;
    std::vector<int> e;
  };
  std::vector<std::vector<Term>> f;   // n generators
  std::vector<std::vector<Term>> df;  // n*n partials, row-major
};

std::vector<Compiled::Term> flatten(const ExactPoly& p) {
  std::vector<Compiled::Term> out;
  out.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) out.push_back({to_double(c), m.e});
  return out;
}

Compiled compile(const SpectralIdeal& e) {
  Compiled sys;
  sys.n = e.n();
  for (const ExactPoly& g : e.generators()) {
    sys.f.push_back(flatten(g));
    for (int j = 1; j <= sys.n; ++j) sys.df.push_back(flatten(g.derivative(j)));
  }
  return sys;
}

template <class X>
X eval_terms(const std::vector<Compiled::Term>& terms, std::span<const X> x) {
  X acc{};
  for (const auto& t : terms) {
    X v = X{1.0} * t.c;
    for (std::size_t i = 0; i < t.e.size(); ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

template <class X>
void eval_f(const Compiled& sys, std::span<const X> x, std::span<X> out) {
  for (int i = 0; i < sys.n; ++i) out[i] = eval_terms(sys.f[i], x);
}

template <class X>
double inf_norm(std::span<const X> v) {
  double m = 0.0;
  for (const X& c : v) m = std::max(m, std::abs(c));
  return m;
}

template <class Scalar, class Mat, class Vec>
struct NewtonKit {
  const Compiled& sys;
  int n;
  Mat jac;
  Vec rhs;

  explicit NewtonKit(const Compiled& s) : sys(s), n(s.n), jac(s.n, s.n), rhs(s.n) {}

  void fill_jacobian(std::span<const Scalar> x) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) jac(i, j) = eval_terms(sys.df[i * n + j], x);
  }

  // One linear solve J * dx = -F; false on a numerically broken system.
  bool solve_step(std::span<const Scalar> x, std::span<const Scalar> fx, std::vector<Scalar>& dx) {
    fill_jacobian(x);
    for (int i = 0; i < n; ++i) rhs(i) = -fx[i];
    Vec sol = jac.partialPivLu().solve(rhs);
    if (!sol.allFinite()) return false;
    dx.assign(sol.begin(), sol.end());
    return true;
  }
};

template <class Scalar, class Mat, class Vec>
struct NewtonOutcome {
  bool converged = false;
  std::vector<Scalar> x;
  double fnorm = 0.0;
};

template <class Scalar, class Mat, class Vec>
NewtonOutcome<Scalar, Mat, Vec> newton_damped(const Compiled& sys, std::vector<Scalar> x,
                                              int max_iter, double tol) {
  const int n = sys.n;
  NewtonKit<Scalar, Mat, Vec> kit(sys);
  std::vector<Scalar> fx(n), dx(n), xn(n), fn_vec(n);
  eval_f<Scalar>(sys, x, fx);
  double fn = inf_norm<Scalar>(fx);
  for (int it = 0; it < max_iter && fn > tol; ++it) {
    if (!kit.solve_step(x, fx, dx)) return {false, std::move(x), fn};
    double step = 1.0;
    bool accepted = false;
    for (int k = 0; k < 9; ++k) {
      for (int i = 0; i < n; ++i) xn[i] = x[i] + dx[i] * Scalar(step);
      eval_f<Scalar>(sys, std::span<const Scalar>(xn), fn_vec);
      double f_new = inf_norm<Scalar>(fn_vec);
      if (std::isfinite(f_new) && (f_new <= tol || f_new < fn * (1.0 - 0.25 * step))) {
        x = xn;
        fx = fn_vec;
        fn = f_new;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) return {false, std::move(x), fn};
  }
  return {fn <= tol, std::move(x), fn};
}

using NewtonC = NewtonOutcome<Complex, Eigen::MatrixXcd, Eigen::VectorXcd>;
using NewtonR = NewtonOutcome<double, Eigen::MatrixXd, Eigen::VectorXd>;

NewtonC newton_complex(const Compiled& sys, std::vector<Complex> x, int max_iter, double tol) {
  return newton_damped<Complex, Eigen::MatrixXcd, Eigen::VectorXcd>(sys, std::move(x), max_iter,
                                                                    tol);
}

NewtonR newton_real(const Compiled& sys, std::vector<double> x, int max_iter, double tol) {
  return newton_damped<double, Eigen::MatrixXd, Eigen::VectorXd>(sys, std::move(x), max_iter, tol);
}

// Deterministic first-success scheduling: worker t owns indices t, t+T, ...
// and stops once its next index exceeds the smallest success so far, so the
// chosen index is thread-count independent.
template <class TryOne>
std::optional<std::pair<long, Witness>> run_strided(long budget, int threads, TryOne&& try_one) {
  std::mutex mu;
  long best_idx = -1;
  Witness best;
  std::atomic<long> stop_before{budget};
  std::exception_ptr first_error;

  auto worker = [&](int t) {
    try {
      for (long r = t; r < budget; r += threads) {
        if (r >= stop_before.load(std::memory_order_relaxed)) break;
        std::optional<Witness> w = try_one(r);
        if (!w) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (best_idx < 0 || r < best_idx) {
          best_idx = r;
          best = std::move(*w);
          long cur = stop_before.load(std::memory_order_relaxed);
          while (r < cur && !stop_before.compare_exchange_weak(cur, r)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  if (best_idx < 0) return std::nullopt;
  return std::make_pair(best_idx, std::move(best));
}

// --- total-degree homotopy ---------------------------------------------

struct StartSystem {
  Complex gamma;
  std::vector<Complex> c;  // unimodular constants, one per variable
};

StartSystem make_start_system(int n, std::uint64_t seed) {
  Rng rng(splitmix64(seed ^ 0xA076'1D64'78BD'642Full));
  const double two_pi = 2.0 * std::numbers::pi;
  StartSystem s;
  s.gamma = std::polar(1.0, two_pi * rng.uniform());
  s.c.reserve(n);
  for (int i = 0; i < n; ++i) s.c.push_back(std::polar(1.0, two_pi * rng.uniform()));
  return s;
}

std::vector<Complex> start_point(const StartSystem& s, long path) {
  const int n = static_cast<int>(s.c.size());
  std::vector<Complex> x(n);
  long p = path;
  for (int i = 1; i <= n; ++i) {
    long k = p % i;
    p /= i;
    double theta = (std::arg(s.c[i - 1]) + 2.0 * std::numbers::pi * static_cast<double>(k)) / i;
    x[i - 1] = std::polar(1.0, theta);
  }
  return x;
}

struct PathResult {
  bool converged = false;
  std::vector<Complex> endpoint;
  double fnorm = 0.0;
};

PathResult track_path(const Compiled& sys, const StartSystem& start, long path, int max_iter,
                      double tol) {
  const int n = sys.n;
  std::vector<Complex> x = start_point(start, path);
  std::vector<Complex> fx(n), gx(n), hx(n), dx(n);
  Eigen::MatrixXcd J(n, n);
  Eigen::VectorXcd rhs(n);

  auto fill_h = [&](std::span<const Complex> p, double t, std::span<Complex> out) {
    eval_f<Complex>(sys, p, fx);
    for (int i = 0; i < n; ++i) {
      Complex pw = 1.0;
      for (int k = 0; k <= i; ++k) pw *= p[i];
      gx[i] = pw - start.c[i];
      out[i] = (1.0 - t) * start.gamma * gx[i] + t * fx[i];
    }
  };
  auto fill_hx = [&](std::span<const Complex> p, double t) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) J(i, j) = t * eval_terms(sys.df[i * n + j], p);
    for (int i = 0; i < n; ++i) {
      Complex pw = 1.0;
      for (int k = 0; k < i; ++k) pw *= p[i];
      J(i, i) += (1.0 - t) * start.gamma * static_cast<double>(i + 1) * pw;
    }
  };

  double t = 0.0, dt = 0.05;
  std::vector<Complex> xnew(n);
  while (t < 1.0) {
    dt = std::min(dt, 1.0 - t);
    const double t2 = t + dt;
    // Euler predictor: Hx * x' = -Ht, with Ht = F - gamma * G.
    fill_hx(x, t);
    eval_f<Complex>(sys, x, fx);
    for (int i = 0; i < n; ++i) {
      Complex pw = 1.0;
      for (int k = 0; k <= i; ++k) pw *= x[i];
      rhs(i) = -(fx[i] - start.gamma * (pw - start.c[i]));
    }
    Eigen::VectorXcd dxdt = J.partialPivLu().solve(rhs);
    bool ok = dxdt.allFinite();
    if (ok) {
      for (int i = 0; i < n; ++i) xnew[i] = x[i] + dxdt(i) * dt;
      // Newton corrector at t2.
      for (int it = 0; it < 3 && ok; ++it) {
        fill_h(xnew, t2, hx);
        if (inf_norm<Complex>(hx) <= 1e-10) break;
        fill_hx(xnew, t2);
        for (int i = 0; i < n; ++i) rhs(i) = -hx[i];
        Eigen::VectorXcd step = J.partialPivLu().solve(rhs);
        if (!step.allFinite()) {
          ok = false;
          break;
        }
        for (int i = 0; i < n; ++i) xnew[i] += step(i);
      }
      if (ok) {
        fill_h(xnew, t2, hx);
        ok = inf_norm<Complex>(hx) <= 1e-6 && inf_norm<Complex>(xnew) < 1e8;
      }
    }
    if (ok) {
      x = xnew;
      t = t2;
      dt = std::min(dt * 1.5, 0.1);
    } else {
      dt *= 0.5;
      if (dt < 1e-7) return {};
    }
  }
  NewtonC sharp = newton_complex(sys, std::move(x), max_iter, tol);
  if (!sharp.converged) return {false, std::move(sharp.x), sharp.fnorm};
  // Drive to the limit point so endpoints inside the origin's multiple
  // root collapse to a genuinely tiny norm.
  NewtonC extra = newton_complex(sys, std::move(sharp.x), 40, 1e-15);
  return {extra.fnorm <= tol, std::move(extra.x), extra.fnorm};
}

// --- extended-precision polish ------------------------------------------

struct BigC {
  mpf_class re, im;
};

BigC bc_mul(const BigC& a, const BigC& b) {
  return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}

mpf_class bc_norm2(const BigC& a) { return a.re * a.re + a.im * a.im; }

BigC bc_div(const BigC& a, const BigC& b) {
  mpf_class d = bc_norm2(b);
  return {mpf_class((a.re * b.re + a.im * b.im) / d), mpf_class((a.im * b.re - a.re * b.im) / d)};
}

BigC eval_big(const ExactPoly& p, const std::vector<BigC>& x) {
  BigC acc{mpf_class(0), mpf_class(0)};
  for (const auto& [m, c] : p.terms()) {
    BigC v{mpf_class(mpq_class(c)), mpf_class(0)};
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < m.e[i]; ++k) v = bc_mul(v, x[i]);
    acc.re += v.re;
    acc.im += v.im;
  }
  return acc;
}

bool polish_witness(const SpectralIdeal& e, Witness& w, double zero_threshold) {
  const int n = e.n();
  mpf_set_default_prec(256);
  std::vector<ExactPoly> gens = e.generators();
  std::vector<std::vector<ExactPoly>> partials(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) partials[i].push_back(gens[i].derivative(j));

  std::vector<BigC> x(n);
  for (int i = 0; i < n; ++i) x[i] = {mpf_class(w.d[i].real()), mpf_class(w.d[i].imag())};

  std::vector<BigC> fx(n), dx(n);
  std::vector<std::vector<BigC>> jac(n, std::vector<BigC>(n));
  for (int round = 0; round < 4; ++round) {
    for (int i = 0; i < n; ++i) fx[i] = eval_big(gens[i], x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) jac[i][j] = eval_big(partials[i][j], x);
    // Gaussian elimination with magnitude pivoting on J * dx = -F.
    std::vector<std::vector<BigC>> a = jac;
    std::vector<BigC> b(n);
    for (int i = 0; i < n; ++i) b[i] = {mpf_class(-fx[i].re), mpf_class(-fx[i].im)};
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (bc_norm2(a[r][col]) > bc_norm2(a[piv][col])) piv = r;
      if (bc_norm2(a[piv][col]) == 0) return false;
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      for (int r = col + 1; r < n; ++r) {
        BigC factor = bc_div(a[r][col], a[col][col]);
        for (int cc = col; cc < n; ++cc) {
          BigC sub = bc_mul(factor, a[col][cc]);
          a[r][cc].re -= sub.re;
          a[r][cc].im -= sub.im;
        }
        BigC sub = bc_mul(factor, b[col]);
        b[r].re -= sub.re;
        b[r].im -= sub.im;
      }
    }
    for (int r = n - 1; r >= 0; --r) {
      BigC acc = b[r];
      for (int cc = r + 1; cc < n; ++cc) {
        BigC sub = bc_mul(a[r][cc], dx[cc]);
        acc.re -= sub.re;
        acc.im -= sub.im;
      }
      dx[r] = bc_div(acc, a[r][r]);
    }
    for (int i = 0; i < n; ++i) {
      x[i].re += dx[i].re;
      x[i].im += dx[i].im;
    }
  }
  mpf_class worst(0);
  mpf_class biggest(0);
  for (int i = 0; i < n; ++i) {
    mpf_class mag = sqrt(bc_norm2(eval_big(gens[i], x)));
    if (mag > worst) worst = mag;
    mpf_class sz = sqrt(bc_norm2(x[i]));
    if (sz > biggest) biggest = sz;
  }
  // Keep the double-precision witness if sharpening drifted toward the
  // origin or failed to actually improve the residual.
  if (biggest.get_d() <= zero_threshold || worst.get_d() > w.residual) return false;
  for (int i = 0; i < n; ++i) w.d[i] = Complex(x[i].re.get_d(), x[i].im.get_d());
  w.residual = worst.get_d();
  return true;
}

// A shift that preserves the spectrum moves each diagonal entry onto some
// eigenvalue, and eigenvalues stay inside the Gershgorin row bound, so every
// witness component has modulus at most twice the largest absolute row sum.
// Sampling starts from that ball keeps all witnesses reachable.
double start_radius(const RationalMatrix& a) {
  double worst = 1.0;
  for (int i = 0; i < a.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < a.n; ++j) row += std::abs(to_double(a.at(i, j)));
    worst = std::max(worst, row);
  }
  return 2.0 * worst;
}

// The solution set is finite, so a converged iterate either sits on an
// isolated nonzero root or is still sliding down a flat direction into the
// origin's multiple root.  Zero-tolerance sharpening separates the two:
// isolated roots are stationary, slides keep contracting until rounding
// stalls them.  A stall can happen above the plain zero threshold (on a
// degree-d flat curve the residual hits the rounding floor at norm roughly
// floor^(1/d)), so a large contraction that ends small is rejected too.
bool accept_sharpened(const SolveConfig& cfg, double radius, double before, double after,
                      double fnorm) {
  if (fnorm > cfg.residual_tol) return false;
  if (after <= cfg.zero_threshold) return false;
  return after >= 1e-2 * radius || after > 0.1 * before;
}

}  // namespace

void SolveConfig::validate() const {
  if (!(residual_tol > 0) || !(zero_threshold > residual_tol))
    throw argument_error("SolveConfig: need zero_threshold > residual_tol > 0");
  if (newton_max_iter < 1 || threads < 1 || max_restarts < 0)
    throw argument_error("SolveConfig: bad budget");
}

std::vector<Complex> evaluate_system(const SpectralIdeal& e, std::span<const Complex> d) {
  if (static_cast<int>(d.size()) != e.n()) throw argument_error("evaluate_system: arity mismatch");
  Compiled sys = compile(e);
  std::vector<Complex> out(sys.n);
  eval_f<Complex>(sys, d, out);
  return out;
}

std::vector<Complex> jacobian(const SpectralIdeal& e, std::span<const Complex> d) {
  if (static_cast<int>(d.size()) != e.n()) throw argument_error("jacobian: arity mismatch");
  Compiled sys = compile(e);
  std::vector<Complex> out(static_cast<std::size_t>(sys.n) * sys.n);
  for (int i = 0; i < sys.n; ++i)
    for (int j = 0; j < sys.n; ++j) out[i * sys.n + j] = eval_terms(sys.df[i * sys.n + j], d);
  return out;
}

std::optional<Witness> find_nonzero_witness(const RationalMatrix& a, const SolveConfig& cfg) {
  cfg.validate();
  const int n = a.n;
  if (n < 1 || n > 10) throw argument_error("find_nonzero_witness: arity out of range");
  SpectralIdeal e = spectral_invariants(a);
  Compiled sys = compile(e);
  const double radius = start_radius(a);

  std::optional<std::pair<long, Witness>> hit;
  if (cfg.mode == SolveMode::NewtonMultistart) {
    const long budget = cfg.max_restarts > 0 ? cfg.max_restarts : 200 * factorial_long(n);
    auto try_restart = [&](long r) -> std::optional<Witness> {
      Rng rng(splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(r + 1))));
      if (cfg.real_only) {
        std::vector<double> x0(n);
        for (int i = 0; i < n; ++i) x0[i] = radius * (2.0 * rng.uniform() - 1.0);
        NewtonR out = newton_real(sys, std::move(x0), cfg.newton_max_iter, cfg.residual_tol);
        if (!out.converged) return std::nullopt;
        const double before = inf_norm<double>(out.x);
        NewtonR sharp = newton_real(sys, std::move(out.x), 40, 0.0);
        if (!accept_sharpened(cfg, radius, before, inf_norm<double>(sharp.x), sharp.fnorm))
          return std::nullopt;
        Witness w;
        w.d.assign(sharp.x.begin(), sharp.x.end());
        w.residual = sharp.fnorm;
        return w;
      }
      std::vector<Complex> x0(n);
      for (int i = 0; i < n; ++i) {
        double rr = radius * std::sqrt(rng.uniform());
        x0[i] = std::polar(rr, 2.0 * std::numbers::pi * rng.uniform());
      }
      NewtonC out = newton_complex(sys, std::move(x0), cfg.newton_max_iter, cfg.residual_tol);
      if (!out.converged) return std::nullopt;
      const double before = inf_norm<Complex>(out.x);
      NewtonC sharp = newton_complex(sys, std::move(out.x), 40, 0.0);
      if (!accept_sharpened(cfg, radius, before, inf_norm<Complex>(sharp.x), sharp.fnorm))
        return std::nullopt;
      Witness w;
      w.d = std::move(sharp.x);
      w.residual = sharp.fnorm;
      return w;
    };
    hit = run_strided(budget, cfg.threads, try_restart);
  } else {
    if (cfg.real_only)
      throw argument_error("find_nonzero_witness: homotopy tracking is inherently complex");
    if (n > 7) throw argument_error("find_nonzero_witness: homotopy path count too large");
    const StartSystem start = make_start_system(n, cfg.seed);
    const long budget = factorial_long(n);
    auto try_path = [&](long p) -> std::optional<Witness> {
      PathResult res = track_path(sys, start, p, cfg.newton_max_iter, cfg.residual_tol);
      if (!res.converged) return std::nullopt;
      const double before = inf_norm<Complex>(res.endpoint);
      NewtonC sharp = newton_complex(sys, std::move(res.endpoint), 40, 0.0);
      if (!accept_sharpened(cfg, radius, before, inf_norm<Complex>(sharp.x), sharp.fnorm))
        return std::nullopt;
      Witness w;
      w.d = std::move(sharp.x);
      w.residual = sharp.fnorm;
      return w;
    };
    hit = run_strided(budget, cfg.threads, try_path);
  }

  if (!hit) return std::nullopt;
  Witness w = std::move(hit->second);
  w.method = cfg.mode;
  w.seed = cfg.seed;
  w.restarts_used = hit->first + 1;
  w.certified_nonzero = inf_norm<Complex>(w.d) > cfg.zero_threshold;
  if (cfg.polish) polish_witness(e, w, cfg.zero_threshold);
  return w;
}

double verify_witness(const RationalMatrix& a, std::span<const Complex> d) {
  SpectralIdeal e = spectral_invariants(a);
  std::vector<Complex> values = evaluate_system(e, d);
  return inf_norm<Complex>(values);
}

CertifyResult certify_rigid(const RationalMatrix& a, const GroebnerOptions& opts) {
  CertifyResult out;
  out.minor_criterion = has_symmetrized_principal_minors(a).symmetrized;
  try {
    SpectralIdeal e = spectral_invariants(a);
    GroebnerBasis gb = buchberger(e.generators(), OrderKind::GrevLex, opts);
    const bool rigid = vanishes_only_at_origin(gb);
    out.status = rigid ? CertifyStatus::Rigid : CertifyStatus::NotRigid;
    out.detail = rigid ? "generators vanish only at the origin"
                       : "the vanishing locus is strictly larger than the origin";
  } catch (const resource_error& err) {
    out.status = CertifyStatus::Inconclusive;
    out.detail = err.what();
  }
  return out;
}

HomotopyRun homotopy_endpoints(const SpectralIdeal& e, std::uint64_t seed, int threads) {
  const int n = e.n();
  if (n < 1 || n > 7) throw argument_error("homotopy_endpoints: arity out of range");
  if (threads < 1) throw argument_error("homotopy_endpoints: bad thread count");
  Compiled sys = compile(e);
  const StartSystem start = make_start_system(n, seed);
  const long budget = factorial_long(n);

  std::vector<PathResult> results(budget);
  std::exception_ptr first_error;
  std::mutex mu;
  auto worker = [&](int t) {
    try {
      for (long p = t; p < budget; p += threads)
        results[p] = track_path(sys, start, p, 100, 1e-10);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  HomotopyRun run;
  run.paths_tracked = budget;
  for (PathResult& r : results) {
    if (r.converged)
      run.endpoints.push_back(std::move(r.endpoint));
    else
      ++run.paths_failed;
  }
  return run;
}

}  // namespace isospectra
