#include "turan/numbers.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "turan/errors.hpp"

namespace turan {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

// First twelve primes: a deterministic witness set for all n < 3.3 * 10^24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (m == w) return true;
    if (m % w == 0) return false;
  }
  const int s = std::countr_zero(m - 1);
  const std::uint64_t d = (m - 1) >> s;
  for (std::uint64_t w : kWitnesses) {
    if (!strong_probable_prime(m, w, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    out.push_back(f);
    while (m % f == 0) m /= f;
  }
  if (m > 1) out.push_back(m);
  return out;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw InvalidModulus("p must be prime and at least 3, got " + std::to_string(p));
  }
}

FieldElement::FieldElement(std::uint64_t value, PrimeModulus modulus)
    : value_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  const std::uint64_t p = modulus_.value();
  std::uint64_t s = value_ + rhs.value_;
  if (s >= p) s -= p;
  return {s, modulus_};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  const std::uint64_t p = modulus_.value();
  return {value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p - rhs.value_, modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  return {mul_mod(value_, rhs.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
  return {pow_mod(value_, exp, modulus_.value()), modulus_};
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw DomainError("zero has no multiplicative inverse");
  return pow(modulus_.value() - 2);
}

std::uint64_t multiplicative_order(const FieldElement& x) {
  if (x.value() == 0) throw DomainError("zero has no multiplicative order");
  const std::uint64_t p = x.modulus().value();
  std::uint64_t order = p - 1;
  for (std::uint64_t r : prime_factors(p - 1)) {
    while (order % r == 0 && x.pow(order / r).value() == 1) order /= r;
  }
  return order;
}

FieldElement element_of_order(const PrimeModulus& p, std::uint64_t t) {
  const std::uint64_t q = p.value();
  if (t == 0 || (q - 1) % t != 0) {
    throw OrderUnavailable("no element of order " + std::to_string(t) + " in F_" +
                           std::to_string(q) + "^*");
  }
  const auto factors = prime_factors(t);
  for (std::uint64_t g = 1; g < q; ++g) {
    const FieldElement x(g, p);
    if (x.pow(t).value() != 1) continue;
    bool exact = true;
    for (std::uint64_t r : factors) {
      if (x.pow(t / r).value() == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return x;
  }
  // Unreachable: F_p^* is cyclic, so every divisor of p - 1 is realized.
  throw OrderUnavailable("order search exhausted F_" + std::to_string(q));
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::uint64_t prime_search(std::uint64_t n, std::uint64_t t) {
  if (n < 2 || t < 1) throw DomainError("prime_search requires n >= 2 and t >= 1");
  const std::uint64_t nt = n * t;
  const std::uint64_t hi = isqrt(nt);
  const long double lo =
      std::sqrt(static_cast<long double>(nt)) - std::cbrt(static_cast<long double>(n));
  for (std::uint64_t p = hi; p >= 3 && static_cast<long double>(p) >= lo; --p) {
    if (p % t == 1 % t && is_prime(p)) return p;
  }
  throw NoPrimeInWindow("no prime p = 1 (mod " + std::to_string(t) + ") in [" +
                        std::to_string(static_cast<double>(lo)) + ", " + std::to_string(hi) +
                        "] for n = " + std::to_string(n));
}

}  // namespace turan
