#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>

namespace matchbox {

// Exact integers throughout; cumulative covering degrees overflow 64 bits
// past depth ~60 even for the dyadic tower.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// prime -> exponent, keys ascending, exponents >= 1
using Factorization = std::map<std::int64_t, std::int64_t>;

// Trial division; covering degrees are small enough that nothing smarter is
// warranted.  Rejects n < 2.
Factorization factor(std::int64_t n);

bool is_prime(std::int64_t n);

// Residue in [0, m), for any sign of x.  Requires m > 0.
Int mod_floor(const Int& x, const Int& m);

// Quotient rounded toward negative infinity.  Requires b != 0.
Int div_floor(const Int& a, const Int& b);

}  // namespace matchbox
