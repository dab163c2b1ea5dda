#include "isospectra/coinvariant.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "isospectra/minors.hpp"

namespace isospectra {

namespace {

Rational factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

// Per-arity data for the staircase reduction: the basis, an index into it,
// the triangular divisors G_j = H_(n-j+1)(v1..vj) whose lex leading terms
// are the pure powers v_j^(n-j+1), and the expansion of each G_j over the
// elementary symmetrics, G_j = sum_s ecoeff[j-1][s-1] * e_s.
struct Context {
  int n = 0;
  std::vector<Monomial> basis;
  std::map<Monomial, long long, MonomialLess> index{MonomialLess{OrderKind::GrLex}};
  std::vector<ExactPoly> g;
  std::vector<std::vector<ExactPoly>> ecoeff;
};

Context build_context(int n) {
  Context ctx;
  ctx.n = n;
  Monomial m(n);
  // Walk the staircase box: exponent of v_i runs over 0..n-i.
  while (true) {
    ctx.basis.push_back(m);
    int pos = 0;
    while (pos < n && m.e[pos] == n - 1 - pos) {
      m.e[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++m.e[pos];
  }
  std::sort(ctx.basis.begin(), ctx.basis.end(),
            [](const Monomial& a, const Monomial& b) {
              return compare(a, b, OrderKind::GrLex) < 0;
            });
  for (std::size_t i = 0; i < ctx.basis.size(); ++i)
    ctx.index.emplace(ctx.basis[i], static_cast<long long>(i));

  ctx.g.reserve(n);
  ctx.ecoeff.resize(n);
  for (int j = 1; j <= n; ++j) {
    ctx.g.push_back(complete_homogeneous(n - j + 1, j, n, OrderKind::Lex));
    auto& row = ctx.ecoeff[j - 1];
    row.reserve(n);
    for (int s = 1; s <= n; ++s) {
      Rational sign = (s % 2 == 1) ? Rational(1) : Rational(-1);
      row.push_back(complete_homogeneous(n - j + 1 - s, j, n, OrderKind::Lex) * sign);
    }
  }
  return ctx;
}

const Context& context(int n) {
  // The basis has n! elements; past 8 variables it stops being a sane
  // in-memory object.
  if (n < 1 || n > 8) throw argument_error("coinvariant: arity out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<Context>(build_context(n))).first;
  return *it->second;
}

// Division by {G_j} in lex. Divisor choice: the largest j whose pure power
// divides the current lead term. Since each G_j is monic with new terms lex
// below the rewritten one, the loop is a standard terminating division.
struct RawReduction {
  ExactPoly remainder;
  std::vector<ExactPoly> q;  // q[j-1] multiplies G_j
};

RawReduction divide_by_staircase(const Context& ctx, const ExactPoly& p, bool want_cofactors) {
  const int n = ctx.n;
  RawReduction out{ExactPoly::zero(n, OrderKind::Lex), {}};
  if (want_cofactors) out.q.assign(n, ExactPoly::zero(n, OrderKind::Lex));
  ExactPoly work = p.with_order(OrderKind::Lex);
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial();
    const Rational c = work.leading_coeff();
    int jstar = 0;
    for (int j = n; j >= 1; --j) {
      if (m.e[j - 1] >= n - j + 1) {
        jstar = j;
        break;
      }
    }
    if (jstar == 0) {
      out.remainder.add_term(m, c);
      work.add_term(m, -c);
    } else {
      Monomial q(m);
      q.e[jstar - 1] -= n - jstar + 1;
      if (want_cofactors) out.q[jstar - 1].add_term(q, c);
      work.sub_mul(c, q, ctx.g[jstar - 1]);
    }
  }
  return out;
}

}  // namespace

std::vector<Monomial> artin_basis(int n) { return context(n).basis; }

ExactPoly artin_reduction(const ExactPoly& p) {
  const Context& ctx = context(p.nvars());
  return divide_by_staircase(ctx, p, false).remainder;
}

ArtinReduction artin_reduction_with_cofactors(const ExactPoly& p) {
  const Context& ctx = context(p.nvars());
  const int n = ctx.n;
  RawReduction raw = divide_by_staircase(ctx, p, true);
  ArtinReduction out{std::move(raw.remainder), {}};
  out.e_cofactors.assign(n, ExactPoly::zero(n, OrderKind::Lex));
  for (int j = 1; j <= n; ++j) {
    if (raw.q[j - 1].is_zero()) continue;
    for (int s = 1; s <= n; ++s) {
      const ExactPoly& coeff = ctx.ecoeff[j - 1][s - 1];
      if (coeff.is_zero()) continue;
      out.e_cofactors[s - 1] += raw.q[j - 1] * coeff;
    }
  }
  return out;
}

ExactPoly normal_form_mod_ideal(const ExactPoly& p, const SpectralIdeal& e) {
  const int n = e.n();
  if (p.nvars() != n) throw argument_error("normal_form_mod_ideal: arity mismatch");
  std::vector<ExactPoly> pert_lex;
  pert_lex.reserve(n);
  bool any_pert = false;
  for (const ExactPoly& g : e.perturbations()) {
    pert_lex.push_back(g.with_order(OrderKind::Lex));
    if (!g.is_zero()) any_pert = true;
  }
  if (!any_pert) return artin_reduction(p);

  ExactPoly result = ExactPoly::zero(n, OrderKind::Lex);
  ExactPoly work = p.with_order(OrderKind::Lex);
  // deg(q_s * g_s) <= deg(work) - 1, so each pass lowers the degree.
  int guard = std::max(p.degree(), 0) + 2;
  while (!work.is_zero()) {
    if (--guard < 0) throw resource_error("normal_form_mod_ideal: no descent");
    ArtinReduction step = artin_reduction_with_cofactors(work);
    result += step.remainder;
    ExactPoly next = ExactPoly::zero(n, OrderKind::Lex);
    for (int s = 1; s <= n; ++s) {
      if (pert_lex[s - 1].is_zero() || step.e_cofactors[s - 1].is_zero()) continue;
      next -= step.e_cofactors[s - 1] * pert_lex[s - 1];
    }
    work = std::move(next);
  }
  return result;
}

MultMatrix mult_matrix(const ExactPoly& u, const SpectralIdeal& e) {
  const int n = e.n();
  if (u.nvars() != n) throw argument_error("mult_matrix: arity mismatch");
  const Context& ctx = context(n);
  MultMatrix m;
  m.n = n;
  m.dim = static_cast<long long>(ctx.basis.size());
  m.u = u;
  m.basis = ctx.basis;
  m.entries.assign(static_cast<std::size_t>(m.dim) * m.dim, Rational(0));
  for (long long col = 0; col < m.dim; ++col) {
    ExactPoly prod = u * ExactPoly::monomial(ctx.basis[col], Rational(1), u.order());
    ExactPoly nf = normal_form_mod_ideal(prod, e);
    for (const auto& [mono, c] : nf.terms()) {
      auto it = ctx.index.find(mono);
      if (it == ctx.index.end()) throw resource_error("mult_matrix: off-basis residue");
      m.entries[static_cast<std::size_t>(it->second) * m.dim + col] = c;
    }
  }
  return m;
}

Rational MultMatrix::trace() const {
  Rational t(0);
  for (long long i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

std::vector<Rational> MultMatrix::charpoly() const {
  const long long d = dim;
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[0] = 1;
  std::vector<Rational> mk = entries;  // M_1 = M
  std::vector<Rational> tmp(entries.size());
  for (long long k = 1; k <= d; ++k) {
    Rational tr(0);
    for (long long i = 0; i < d; ++i) tr += mk[i * d + i];
    c[k] = Rational(-tr) / Rational(static_cast<long>(k));
    if (k == d) break;
    // M_(k+1) = M * (M_k + c_k I)
    for (long long i = 0; i < d; ++i) mk[i * d + i] += c[k];
    for (long long i = 0; i < d; ++i) {
      for (long long j = 0; j < d; ++j) {
        Rational acc(0);
        for (long long l = 0; l < d; ++l) {
          const Rational& a = entries[i * d + l];
          if (a == 0) continue;
          const Rational& b = mk[l * d + j];
          if (b == 0) continue;
          acc += a * b;
        }
        tmp[i * d + j] = std::move(acc);
      }
    }
    mk.swap(tmp);
  }
  return c;
}

Rational mult_trace(const ExactPoly& u, const SpectralIdeal& e) {
  const int n = e.n();
  if (u.nvars() != n) throw argument_error("mult_trace: arity mismatch");
  const Context& ctx = context(n);
  Rational t(0);
  for (const Monomial& b : ctx.basis) {
    ExactPoly prod = u * ExactPoly::monomial(b, Rational(1), u.order());
    t += normal_form_mod_ideal(prod, e).coeff(b);
  }
  return t;
}

Rational hc_obstruction(const SpectralIdeal& e, std::uint32_t mask_j) {
  const int n = e.n();
  if (mask_j >= (1u << n)) throw argument_error("hc_obstruction: subset out of range");
  Monomial m(n);
  for (int i = 0; i < n; ++i)
    if (mask_j & (1u << i)) m.e[i] = 1;
  return mult_trace(ExactPoly::monomial(std::move(m), Rational(1)), e);
}

Rational lambda_closed_form(const LambdaKey& key) {
  const auto [n, m, k, j] = key;
  if (n < 1 || m < 1 || m > n) throw argument_error("lambda_closed_form: bad (n, m)");
  if (k < 0 || m + k > n) throw argument_error("lambda_closed_form: bad k");
  if (j < 0 || j > std::min(k, m)) throw argument_error("lambda_closed_form: bad j");
  Rational value = Rational(m) * factorial(m + k - j - 1) * factorial(n - m - k + j);
  return (j % 2 == 0) ? Rational(-value) : value;
}

Rational lambda_via_trace(int n, int m, int k, std::uint32_t mask_j) {
  if (n < 1 || m < 1 || m > n || k < 0 || m + k > n)
    throw argument_error("lambda_via_trace: bad parameters");
  if (mask_j >= (1u << n) || std::popcount(mask_j) != k)
    throw argument_error("lambda_via_trace: subset size must equal k");
  Monomial vj(n);
  for (int i = 0; i < n; ++i)
    if (mask_j & (1u << i)) vj.e[i] = 1;
  std::vector<ExactPoly> g(n, ExactPoly::zero(n));
  g[m + k - 1] = ExactPoly::monomial(std::move(vj), Rational(1));
  SpectralIdeal e = SpectralIdeal::from_perturbations(n, std::move(g));
  Monomial u(n);
  for (int i = 0; i < m; ++i) u.e[i] = 1;
  return mult_trace(ExactPoly::monomial(std::move(u), Rational(1)), e);
}

Rational top_obstruction_value(const RationalMatrix& a, int m) {
  const int n = a.n;
  if (m < 1 || m > n) throw argument_error("top_obstruction_value: bad size");
  Rational sum(0);
  // All m-subsets of [n], via mask enumeration.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    sum += principal_minor(a, mask);
  }
  const std::uint32_t head = (1u << m) - 1;
  return factorial(m) * factorial(n - m) * sum - factorial(n) * principal_minor(a, head);
}

std::vector<LambdaKey> lambda_keys(int n) {
  if (n < 1) throw argument_error("lambda_keys: bad arity");
  std::vector<LambdaKey> keys;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; m + k <= n; ++k)
      for (int j = 0; j <= std::min(k, m); ++j) keys.push_back({n, m, k, j});
  return keys;
}

}  // namespace isospectra
