#pragma once

#include <cstdint>
#include <vector>

namespace turan {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Distinct prime divisors of m in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// An odd prime p, checked on construction. Throws InvalidModulus otherwise.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

class FieldElement {
 public:
  FieldElement(std::uint64_t value, PrimeModulus modulus);

  std::uint64_t value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement pow(std::uint64_t exp) const;
  /// Multiplicative inverse; throws DomainError for zero.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint64_t value_;
  PrimeModulus modulus_;
};

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldElement& x);

/// Smallest g (by value) of multiplicative order exactly t.
/// Throws OrderUnavailable unless t >= 1 divides p - 1.
FieldElement element_of_order(const PrimeModulus& p, std::uint64_t t);

/// Largest odd prime p with p = 1 (mod t) and sqrt(nt) - n^(1/3) <= p <= sqrt(nt).
/// Throws NoPrimeInWindow when the window holds no such prime.
std::uint64_t prime_search(std::uint64_t n, std::uint64_t t);

}  // namespace turan
