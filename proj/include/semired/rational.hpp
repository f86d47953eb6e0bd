#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace semired {

// Exact scalars of Q_p: arbitrary-precision rationals, always in lowest
// terms with positive denominator. A rational is handled through its p-adic
// valuation; the norm is p^(-v_p) and is never materialised as a float.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// v_p(0) = +infinity.
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

bool is_prime(std::uint64_t p);

long val_p(const Int& x, std::uint64_t p);
long val_p(const Rat& x, std::uint64_t p);

inline bool is_p_integral(const Rat& x, std::uint64_t p) { return val_p(x, p) >= 0; }

// p^e as an exact integer, e >= 0.
Int pow_p(std::uint64_t p, long e);

// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Inverse of a modulo m (requires gcd(a, m) = 1), returned in [0, m).
Int mod_inverse(const Int& a, const Int& m);

// Residue of a p-integral rational mod p, with the denominator inverted
// mod p. Throws NotIntegralError when v_p(x) < 0.
std::uint64_t reduce_mod_p(const Rat& x, std::uint64_t p);

// Unique integer t in [0, modulus) with x ≡ t mod modulus·Z_(p), where
// modulus is a power of p and x is p-integral.
Int canonical_residue(const Rat& x, const Int& modulus);

// Grammar: "a" or "a/b" with optional leading minus; b > 0 after parsing.
Rat parse_rational(const std::string& text);
std::string rat_to_string(const Rat& x);

}  // namespace semired
