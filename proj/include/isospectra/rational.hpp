#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isospectra {

// Exact rational scalar. mpq_class keeps values canonical (reduced form,
// positive denominator), which is the representation invariant we rely on
// when hashing/comparing and when printing "p/q".
using Rational = mpq_class;

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p/q", or a plain decimal literal like "-1.25" (mapped to
// -125/100 and reduced). Throws argument_error on malformed input or q = 0.
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& r);

// Nearest double; fine for diagnostics, never used on an exact path.
double to_double(const Rational& r);

inline std::complex<double> to_complex(const Rational& r) {
  return {to_double(r), 0.0};
}

}  // namespace isospectra
