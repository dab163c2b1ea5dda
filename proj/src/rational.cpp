#include "isospectra/rational.hpp"

#include <cctype>

namespace isospectra {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Base 10 always; the gmp string constructor would read a leading zero as
// octal. Expects a literal already vetted by is_integer_literal.
mpz_class parse_integer(std::string_view s) {
  bool neg = s[0] == '-';
  if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  // Strip surrounding spaces.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw argument_error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw argument_error("malformed rational literal: " + std::string(s));
    mpz_class p = parse_integer(num), q = parse_integer(den);
    if (q == 0) throw argument_error("zero denominator: " + std::string(s));
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty() || (!head.empty() && !is_integer_literal(head)) || head == "-" || head == "+")
      if (!(head.empty() || is_integer_literal(head)))
        throw argument_error("malformed decimal literal: " + std::string(s));
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw argument_error("malformed decimal literal: " + std::string(s));
    bool neg = !head.empty() && head[0] == '-';
    std::string digits;
    for (char c : head)
      if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
    digits += std::string(tail);
    if (digits.empty()) throw argument_error("malformed decimal literal: " + std::string(s));
    mpz_class p(digits, 10);
    mpz_class q = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) q *= 10;
    Rational r(p, q);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  if (!is_integer_literal(s)) throw argument_error("malformed rational literal: " + std::string(s));
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace isospectra
