#include "isospectra/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace isospectra {

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

struct BasisEntry {
  ExactPoly poly;  // monic
  Monomial lm;
  int sugar;
};

struct Pair {
  int i, j;
  Monomial l;
  int sugar;
  int ldeg;
};

struct PairLess {
  OrderKind ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.ldeg != b.ldeg) return a.ldeg < b.ldeg;
    int c = compare(a.l, b.l, ord);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

// Full reduction of p by the current basis; counts cancellation work into
// *steps. Returns the remainder (not made monic).
ExactPoly reduce_full(ExactPoly p, const std::vector<BasisEntry>& basis,
                      long long* steps, long long max_steps) {
  ExactPoly rem(p.nvars(), p.order());
  while (!p.is_zero()) {
    const Monomial& m = p.leading_monomial();
    const Rational c = p.leading_coeff();
    bool hit = false;
    for (const auto& b : basis) {
      if (b.lm.divides(m)) {
        *steps += static_cast<long long>(b.poly.term_count());
        if (*steps > max_steps) throw resource_error("groebner reduction budget exceeded");
        p.sub_mul(c, m / b.lm, b.poly);
        hit = true;
        break;
      }
    }
    if (!hit) {
      // Irreducible leading term: move it from p into the remainder.
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

}  // namespace

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  if (nvars != other.nvars || order != other.order ||
      generators.size() != other.generators.size())
    return false;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!(generators[i] == other.generators[i])) return false;
  return true;
}

GroebnerBasis buchberger(const std::vector<ExactPoly>& gens, OrderKind order,
                         const GroebnerOptions& opts) {
  int nvars = -1;
  for (const auto& g : gens) {
    if (nvars < 0) nvars = g.nvars();
    if (g.nvars() != nvars) throw argument_error("buchberger: mixed arities");
  }
  if (nvars < 0) nvars = 0;

  long long steps = 0;
  std::vector<BasisEntry> basis;
  std::set<Pair, PairLess> pending(PairLess{order});
  std::set<std::pair<int, int>> pending_idx;  // mirrors `pending` for the chain criterion

  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].lm, basis[j].lm);
      if (coprime(basis[i].lm, basis[j].lm)) continue;  // product criterion
      int sugar = std::max(basis[i].sugar + (l / basis[i].lm).degree(),
                           basis[j].sugar + (l / basis[j].lm).degree());
      pending.insert(Pair{i, j, l, sugar, l.degree()});
      pending_idx.insert({i, j});
    }
  };

  auto add_element = [&](ExactPoly p, int sugar) {
    Monomial lm = p.leading_monomial();
    basis.push_back(BasisEntry{p.monic(), std::move(lm), sugar});
    push_pairs(static_cast<int>(basis.size()) - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    ExactPoly p = g.order() == order ? g : g.with_order(order);
    const int d = p.degree();
    add_element(std::move(p), d);
  }

  long long pairs_done = 0;
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({pr.i, pr.j});

    // Chain criterion: drop (i,j) when some other basis element divides the
    // lcm and both side pairs are already settled.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].lm.divides(pr.l)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (!pending_idx.count({key_ik.first, key_ik.second}) &&
          !pending_idx.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;

    if (++pairs_done > opts.max_pairs) throw resource_error("groebner pair budget exceeded");

    const BasisEntry& f = basis[pr.i];
    const BasisEntry& g = basis[pr.j];
    ExactPoly s(nvars, order);
    s.sub_mul(Rational(-1), pr.l / f.lm, f.poly);
    s.sub_mul(Rational(1), pr.l / g.lm, g.poly);
    ExactPoly r = reduce_full(std::move(s), basis, &steps, opts.max_steps);
    if (!r.is_zero()) add_element(std::move(r), pr.sugar);
  }

  // Interreduce to the unique reduced basis.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (basis[j].lm.divides(basis[i].lm) && !(basis[i].lm == basis[j].lm)) keep[i] = 0;
      if (basis[i].lm == basis[j].lm && j < i) keep[i] = 0;
    }
  std::vector<BasisEntry> kept;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));

  std::vector<ExactPoly> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<BasisEntry> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    ExactPoly r = reduce_full(kept[i].poly, others, &steps, opts.max_steps);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ExactPoly& a, const ExactPoly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });

  GroebnerBasis out;
  out.nvars = nvars;
  out.order = order;
  out.generators = std::move(reduced);
  return out;
}

ExactPoly normal_form(const ExactPoly& p, const GroebnerBasis& gb) {
  if (gb.generators.empty()) return p.order() == gb.order ? p : p.with_order(gb.order);
  if (p.nvars() != gb.nvars) throw argument_error("normal_form: arity mismatch");
  std::vector<BasisEntry> basis;
  basis.reserve(gb.generators.size());
  for (const auto& g : gb.generators)
    basis.push_back(BasisEntry{g, g.leading_monomial(), g.degree()});
  long long steps = 0;
  ExactPoly q = p.order() == gb.order ? p : p.with_order(gb.order);
  return reduce_full(std::move(q), basis, &steps, (1LL << 62));
}

std::optional<long long> quotient_dimension(const GroebnerBasis& gb) {
  const int n = gb.nvars;
  if (gb.generators.empty()) return n == 0 ? std::optional<long long>(1) : std::nullopt;
  std::vector<Monomial> lms;
  for (const auto& g : gb.generators) {
    if (g.leading_monomial().is_constant()) return 0;  // unit ideal
    lms.push_back(g.leading_monomial());
  }

  // Finiteness: every variable needs a pure power among the leading terms.
  std::vector<int> bound(n, -1);
  for (const auto& m : lms) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      if (var >= 0) { pure = false; break; }
      var = i;
    }
    if (pure && var >= 0)
      bound[var] = bound[var] < 0 ? m.e[var] : std::min(bound[var], m.e[var]);
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;

  // DFS over the exponent box, pruning as soon as a leading monomial
  // supported on the first (depth+1) variables divides the prefix.
  long long count = 0;
  std::vector<int> exps(n, 0);
  auto dominated = [&](int depth) {
    for (const auto& m : lms) {
      bool ok = true;
      for (int i = 0; i <= depth && ok; ++i)
        if (m.e[i] > exps[i]) ok = false;
      if (!ok) continue;
      for (int i = depth + 1; i < n && ok; ++i)
        if (m.e[i] > 0) ok = false;
      if (ok) return true;
    }
    return false;
  };
  auto dfs = [&](auto&& self, int depth) -> void {
    for (int e = 0; e < bound[depth]; ++e) {
      exps[depth] = e;
      if (dominated(depth)) break;  // larger exponents stay dominated
      if (depth == n - 1) {
        if (++count > (1LL << 40)) throw resource_error("quotient dimension too large");
      } else {
        self(self, depth + 1);
      }
    }
    exps[depth] = 0;
  };
  dfs(dfs, 0);
  return count;
}

bool vanishes_only_at_origin(const GroebnerBasis& gb) {
  auto dim = quotient_dimension(gb);
  if (!dim) return false;  // positive-dimensional variety: nonzero points exist
  if (*dim == 0) return true;  // unit ideal: empty variety
  for (int i = 1; i <= gb.nvars; ++i) {
    Monomial m(gb.nvars);
    m.e[i - 1] = static_cast<int>(*dim);
    if (!normal_form(ExactPoly::monomial(m, Rational(1), gb.order), gb).is_zero())
      return false;
  }
  return true;
}

}  // namespace isospectra
