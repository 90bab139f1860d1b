#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "hirsch/error.hpp"

namespace hirsch {

// All coordinates, offsets and pivots in this library are exact rationals.
// GMP keeps them canonical (reduced, positive denominator) automatically.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);

bool is_zero_vec(const RatVec& v);

// Strict lexicographic order on coordinate vectors; the canonical vertex
// order everywhere in the library.
bool lex_less(const RatVec& a, const RatVec& b);

// Parses "p/q" or "p" with arbitrary-precision integers. Rejects zero
// denominators and malformed text with ErrorCode::Parse.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q" when q != 1, plain integer otherwise.
std::string rational_to_string(const Rational& r);

// Parses "a,b,c" into a coordinate vector of the given dimension.
RatVec parse_coords(const std::string& text, int expected_dim);

std::string coords_to_string(const RatVec& v);

}  // namespace hirsch
