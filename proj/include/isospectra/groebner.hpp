#pragma once

#include <optional>
#include <vector>

#include "isospectra/poly.hpp"

namespace isospectra {

// Resource caps for Buchberger runs. Exceeding either throws resource_error;
// callers that must stay total (rigidity certification, the Floquet search)
// catch it and report "inconclusive".
struct GroebnerOptions {
  long long max_pairs = 200000;        // S-pairs actually reduced
  long long max_steps = 200000000;     // term-cancellation steps across the run
};

// Reduced Groebner basis: monic generators, no leading monomial divides
// another, every tail fully reduced. Generators are sorted by increasing
// leading monomial, which makes the representation canonical for an ideal
// and a term order.
struct GroebnerBasis {
  int nvars = 0;
  OrderKind order = OrderKind::GrevLex;
  std::vector<ExactPoly> generators;

  bool operator==(const GroebnerBasis& other) const;
};

GroebnerBasis buchberger(const std::vector<ExactPoly>& gens, OrderKind order,
                         const GroebnerOptions& opts = {});

// Remainder of p on division by gb; unique because gb is reduced.
ExactPoly normal_form(const ExactPoly& p, const GroebnerBasis& gb);

// Number of standard monomials, std::nullopt when the quotient is
// infinite-dimensional.
std::optional<long long> quotient_dimension(const GroebnerBasis& gb);

// True iff the complex vanishing locus of the ideal is contained in {0}:
// every variable must be nilpotent modulo the ideal (power bounded by the
// quotient dimension). An infinite-dimensional quotient means a positive-
// dimensional variety, which always carries nonzero points, hence false.
bool vanishes_only_at_origin(const GroebnerBasis& gb);

}  // namespace isospectra
