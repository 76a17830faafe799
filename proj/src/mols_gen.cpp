#include "latin/mols_gen.hpp"

#include <algorithm>

#include "latin/error.hpp"
#include "latin/transform.hpp"
#include "latin/verify.hpp"

namespace latin {

std::vector<FiniteField::Element> mols_multipliers(const FiniteField& field) {
  const auto q = field.size();
  std::vector<FiniteField::Element> out;
  for (FiniteField::Element a = 1; a < q; ++a) {
    if (field.add(a, 1) != 0) {
      out.push_back(a);
      break;
    }
  }
  for (FiniteField::Element a = 1; a < q; ++a) {
    if (out.empty() || a != out.front()) out.push_back(a);
  }
  return out;
}

MolsSet mols_from_field(const FiniteField& field) {
  const std::size_t q = field.size();
  std::vector<LatinSquare> squares;
  for (const auto a : mols_multipliers(field)) {
    std::vector<Symbol> cells(q * q);
    for (std::size_t x = 0; x < q; ++x) {
      const auto ax = field.mul(a, static_cast<FiniteField::Element>(x));
      for (std::size_t y = 0; y < q; ++y) cells[x * q + y] = field.add(ax, static_cast<FiniteField::Element>(y));
    }
    squares.emplace_back(q, std::move(cells));
  }
  return certify(MolsSet(std::move(squares)));
}

MolsSet gen_mols_prime_power(std::uint64_t q) {
  if (q < 2) throw PreconditionError("MOLS need order at least 2");
  const auto [p, k] = prime_power_decompose(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return mols_from_field(FiniteField::make(p, k));
}

MolsSet macneish_product(const MolsSet& a, const MolsSet& b) {
  if (a.empty() || b.empty()) throw PreconditionError("MacNeish product of an empty set");
  const MolsSet& ca = a.certified() ? a : certify(a);
  const MolsSet& cb = b.certified() ? b : certify(b);
  std::vector<LatinSquare> out;
  const std::size_t size = std::min(ca.size(), cb.size());
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(direct_product(ca[i], cb[i]));
  return certify(MolsSet(std::move(out)));
}

}  // namespace latin
