#include "isospectra/minors.hpp"

#include <bit>

namespace isospectra {

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RationalMatrix::has_zero_diagonal() const {
  for (int i = 0; i < n; ++i)
    if (at(i, i) != 0) return false;
  return true;
}

namespace {

// Plain fraction arithmetic with partial pivoting; used when Bareiss hits a
// zero pivot (singular leading principal minor).
Rational det_gauss(std::vector<Rational> w, int k) {
  Rational det(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (w[static_cast<std::size_t>(r) * k + col] != 0) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int c = 0; c < k; ++c)
        std::swap(w[static_cast<std::size_t>(piv) * k + c], w[static_cast<std::size_t>(col) * k + c]);
      det = -det;
    }
    const Rational& p = w[static_cast<std::size_t>(col) * k + col];
    det *= p;
    for (int r = col + 1; r < k; ++r) {
      Rational f = w[static_cast<std::size_t>(r) * k + col] / p;
      if (f == 0) continue;
      for (int c = col; c < k; ++c)
        w[static_cast<std::size_t>(r) * k + c] -= f * w[static_cast<std::size_t>(col) * k + c];
    }
  }
  return det;
}

Rational det_workspace(std::vector<Rational> w, int k) {
  if (k == 0) return Rational(1);
  // Bareiss: w[r][c] <- (w[r][c]*pivot - w[r][step]*w[step][c]) / prev_pivot,
  // exact division guaranteed while all pivots are nonzero. The fallback must
  // see the *original* matrix: intermediate Bareiss rows are rescaled.
  const std::vector<Rational> original = w;
  Rational prev(1);
  for (int step = 0; step < k - 1; ++step) {
    const Rational pivot = w[static_cast<std::size_t>(step) * k + step];
    if (pivot == 0) return det_gauss(original, k);
    for (int r = step + 1; r < k; ++r)
      for (int c = step + 1; c < k; ++c) {
        Rational& x = w[static_cast<std::size_t>(r) * k + c];
        x = (x * pivot - w[static_cast<std::size_t>(r) * k + step] *
                             w[static_cast<std::size_t>(step) * k + c]) /
            prev;
      }
    prev = pivot;
  }
  return w[static_cast<std::size_t>(k - 1) * k + (k - 1)];
}

}  // namespace

Rational determinant(const RationalMatrix& m) { return det_workspace(m.a, m.n); }

Rational principal_minor(const RationalMatrix& m, std::uint32_t mask) {
  if (mask >= (1u << m.n)) throw argument_error("principal_minor: mask out of range");
  std::vector<int> idx;
  for (int i = 0; i < m.n; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  const int k = static_cast<int>(idx.size());
  std::vector<Rational> w(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) w[static_cast<std::size_t>(r) * k + c] = m.at(idx[r], idx[c]);
  return det_workspace(std::move(w), k);
}

MinorTable all_principal_minors(const RationalMatrix& m, int cap) {
  if (m.n > cap) throw resource_error("all_principal_minors: size above cap");
  MinorTable t;
  t.n = m.n;
  t.det_by_mask.resize(1u << m.n);
  for (std::uint32_t mask = 0; mask < (1u << m.n); ++mask)
    t.det_by_mask[mask] = principal_minor(m, mask);
  return t;
}

SymmetrizedVerdict has_symmetrized_principal_minors(const RationalMatrix& m, int cap) {
  MinorTable t = all_principal_minors(m, cap);
  SymmetrizedVerdict v;
  for (int k = 1; k <= m.n; ++k) {
    std::uint32_t ref_mask = 0;
    bool have_ref = false;
    for (std::uint32_t mask = 0; mask < (1u << m.n); ++mask) {
      if (std::popcount(mask) != k) continue;
      if (!have_ref) {
        ref_mask = mask;
        have_ref = true;
        continue;
      }
      if (t[mask] != t[ref_mask]) {
        v.symmetrized = false;
        v.k = k;
        v.mask_a = ref_mask;
        v.mask_b = mask;
        return v;
      }
    }
  }
  return v;
}

Rational minor_average_defect(const RationalMatrix& m, int size, std::uint32_t mask) {
  if (size < 1 || size > m.n) throw argument_error("minor_average_defect: bad size");
  if (std::popcount(mask) != size) throw argument_error("minor_average_defect: mask size mismatch");
  Rational sum(0);
  long count = 0;
  for (std::uint32_t s = 0; s < (1u << m.n); ++s) {
    if (std::popcount(s) != size) continue;
    sum += principal_minor(m, s);
    ++count;
  }
  return principal_minor(m, mask) - sum / Rational(count);
}

GraphClass graph_rigidity_class(const RationalMatrix& m) {
  if (!m.is_symmetric() || !m.has_zero_diagonal())
    throw argument_error("graph_rigidity_class: expects a symmetric zero-diagonal matrix");
  bool any_edge = false, all_edges = true;
  Rational ref_sq(0);
  bool have_ref = false;
  bool equal_weights = true;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      const Rational& x = m.at(i, j);
      if (x == 0) {
        all_edges = false;
        continue;
      }
      any_edge = true;
      Rational sq = x * x;  // equal up to sign == equal squares over Q
      if (!have_ref) {
        ref_sq = sq;
        have_ref = true;
      } else if (sq != ref_sq) {
        equal_weights = false;
      }
    }
  if (!any_edge) return GraphClass::Edgeless;
  if (all_edges && equal_weights) return GraphClass::CompleteEqualUpToSign;
  return GraphClass::Other;
}

}  // namespace isospectra
