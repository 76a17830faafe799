#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latin {

/// One entry of the built-in modulus table: monic polynomial of degree k over
/// GF(p), coefficients listed from the constant term upwards.
struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t k;
  std::vector<std::uint32_t> coefficients;
};

/// The embedded modulus table. Every prime p <= 23 with k = 1, p = 2 with
/// k <= 16, and a few small extensions of 3, 5, 7, 11.
const std::vector<ModulusEntry>& modulus_table();

/// GF(p^k) with elements encoded as integers in [0, p^k): the polynomial
/// c0 + c1 x + ... + c(k-1) x^(k-1) is the integer c0 + c1 p + ... .
///
/// Multiplication goes through discrete log tables built at construction, so
/// a field object costs O(p^k) memory. Immutable and safe to share.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Field from the built-in table. Throws PreconditionError if p is not
  /// prime, k == 0, or (p, k) is not in the table.
  static FiniteField make(std::uint32_t p, std::uint32_t k);

  /// Field from a caller-supplied monic modulus of degree >= 1 (constant
  /// term first). Throws PreconditionError if p is not prime or the modulus
  /// is reducible.
  static FiniteField with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// The modulus written as e.g. "x^3 + x + 1".
  std::string modulus_string() const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws PreconditionError for a == 0.
  Element inv(Element a) const;

  /// Element of maximal multiplicative order used for the log tables.
  Element generator() const noexcept { return generator_; }

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Splits q = p^k with p prime; returns {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept;

/// Rabin irreducibility test for a monic polynomial over GF(p).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace latin
