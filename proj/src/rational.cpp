#include "semired/rational.hpp"

#include <cctype>

#include "semired/errors.hpp"

namespace semired {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long val_p(const Int& x, std::uint64_t p) {
  if (x == 0) return kValInfinity;
  Int n = abs(x);
  Int prime(p);
  long v = 0;
  Int q, r;
  for (;;) {
    divide_qr(n, prime, q, r);
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

long val_p(const Rat& x, std::uint64_t p) {
  if (x == 0) return kValInfinity;
  long vn = val_p(numerator(x), p);
  long vd = val_p(denominator(x), p);
  return vn - vd;
}

Int pow_p(std::uint64_t p, long e) {
  Int r(1);
  Int base(p);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? Int(-1) : Int(1);
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(a % m, m, x, y);
  if (g != 1) throw InternalError("mod_inverse: arguments are not coprime");
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

std::uint64_t reduce_mod_p(const Rat& x, std::uint64_t p) {
  if (val_p(x, p) < 0) throw NotIntegralError("scalar has negative p-adic valuation");
  Int prime(p);
  Int num = numerator(x) % prime;
  if (num < 0) num += prime;
  Int den = denominator(x) % prime;
  Int r = (num * mod_inverse(den, prime)) % prime;
  return r.convert_to<std::uint64_t>();
}

Int canonical_residue(const Rat& x, const Int& modulus) {
  if (modulus == 1) return Int(0);
  Int num = numerator(x) % modulus;
  if (num < 0) num += modulus;
  Int den = denominator(x) % modulus;
  return (num * mod_inverse(den, modulus)) % modulus;
}

Rat parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rat {
    throw InputError("invalid rational literal: \"" + text + "\"");
  };
  if (text.empty()) return fail();
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) return fail();
  Int num(text.substr(start, i - start));
  Int den(1);
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    std::size_t dstart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == dstart || i != text.size()) return fail();
    den = Int(text.substr(dstart, i - dstart));
    if (den == 0) return fail();
  }
  if (neg) num = -num;
  return Rat(num, den);
}

std::string rat_to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/";
    s += denominator(x).str();
  }
  return s;
}

}  // namespace semired
