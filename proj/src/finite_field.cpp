#include "latin/finite_field.hpp"

#include <algorithm>

#include "latin/error.hpp"

namespace latin {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first, no trailing zeros

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_pow(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  result = poly_mod(result, f, p);
  base = poly_mod(std::move(base), f, p);
  for (; e != 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod f for i = 0..k, computed by repeated p-th powers.
std::vector<Poly> frobenius_powers(const Poly& f, std::uint32_t p, std::size_t k) {
  std::vector<Poly> out;
  Poly h = poly_mod(Poly{0, 1}, f, p);
  out.push_back(h);
  for (std::size_t i = 1; i <= k; ++i) {
    h = poly_pow(h, p, f, p);
    out.push_back(h);
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string monomial(std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return "x";
  return "x^" + std::to_string(i);
}

}  // namespace

const std::vector<ModulusEntry>& modulus_table() {
  static const std::vector<ModulusEntry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 14, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {2, 15, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {11, 1, {9, 1}},
      {11, 2, {2, 7, 1}},
      {13, 1, {11, 1}},
      {17, 1, {14, 1}},
      {19, 1, {17, 1}},
      {23, 1, {18, 1}},
  };
  return table;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const auto powers = frobenius_powers(f, p, k);
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  auto minus_x = [&](Poly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(powers[k]).empty()) return false;
  for (auto d : prime_factors(k)) {
    Poly g = poly_gcd(f, minus_x(powers[k / d]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (k == 0) throw PreconditionError("extension degree must be at least 1");
  for (const auto& e : modulus_table()) {
    if (e.p == p && e.k == k) return FiniteField(p, e.coefficients);
  }
  throw PreconditionError("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) +
                          "); supply one explicitly");
}

FiniteField FiniteField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p > 65521) throw PreconditionError("characteristic too large");
  for (auto c : modulus) {
    if (c >= p) throw PreconditionError("modulus coefficient outside [0, p)");
  }
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw PreconditionError("modulus must be monic of degree >= 1");
  if (!is_irreducible(p, modulus)) throw PreconditionError("supplied modulus is reducible over GF(" + std::to_string(p) + ")");
  return FiniteField(p, std::move(modulus));
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    q *= p_;
    if (q > kMaxFieldSize) throw PreconditionError("field too large for table-based arithmetic");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (!is_irreducible(p_, modulus_)) throw InvariantViolation("built-in modulus is reducible: " + modulus_string());

  // Smallest-encoded element of order q - 1.
  const std::uint32_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto pow_slow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    for (; e != 0; e >>= 1) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
    }
    return r;
  };
  generator_ = 1;
  if (group > 1) {
    for (Element g = 2; g < q_; ++g) {
      if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) { return pow_slow(g, group / l) != 1; })) {
        generator_ = g;
        break;
      }
    }
  }
  exp_.resize(group);
  log_.assign(q_, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, generator_);
  }
  if (x != 1) throw InvariantViolation("generator search failed for " + modulus_string());
}

std::string FiniteField::modulus_string() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    out += monomial(i);
  }
  return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t group = q_ - 1;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % group];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative inverse");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  Poly pa, pb;
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_) {
    pa.push_back(a % p_);
    pb.push_back(b % p_);
  }
  trim(pa);
  trim(pb);
  const Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  Element out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
  return out;
}

}  // namespace latin
