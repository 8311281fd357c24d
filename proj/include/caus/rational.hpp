#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace caus {

/// Exact rational number; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// "p/q" form used on the wire: always reduced, q > 0, zero is "0/1".
std::string to_string(const Rational& q);

/// num / den in lowest terms; throws InvalidArgument when den is zero.
Rational make_rational(long num, long den);

/// Accepts "p/q", "p" or "-p/q". Throws InvalidArgument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const RationalVector& v);

RationalVector zeros(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
bool is_zero(const RationalVector& v);

/// Kronecker product a (x) b, with b's index running fastest.
RationalVector kron(const RationalVector& a, const RationalVector& b);

/// Concatenation (a, b).
RationalVector concat(const RationalVector& a, const RationalVector& b);

}  // namespace caus
