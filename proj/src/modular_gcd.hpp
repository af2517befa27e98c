#pragma once

#include <gmpxx.h>

#include <vector>

#include "rigiditykit/upoly.hpp"

namespace rigiditykit::detail {

/// Clears denominators and removes the integer content; the sign of the
/// leading coefficient is kept. Input must be nonzero.
std::vector<mpz_class> primitive_integer(const UPoly& p);

/// Monic gcd of two nonzero polynomials via images modulo word-size primes,
/// Chinese remaindering and exact trial division. A degree-0 image modulo a
/// prime that divides neither leading coefficient certifies coprimality.
UPoly modular_gcd(const UPoly& p, const UPoly& q);

/// Monic remainder-sequence gcd over the rationals. Slow on high degrees;
/// used when the prime table is exhausted.
UPoly euclid_gcd(const UPoly& p, const UPoly& q);

}  // namespace rigiditykit::detail
