#pragma once

#include <cstdint>
#include <vector>

#include "latin/finite_field.hpp"
#include "latin/square.hpp"

namespace latin {

/// Multipliers a used by mols_from_field, in output order: first the
/// smallest nonzero a with a + 1 != 0 (so the diagonal of a*x + x is a
/// transversal through (0,0,0)), then the remaining nonzero elements in
/// increasing encoding. For GF(2) the only multiplier is 1.
std::vector<FiniteField::Element> mols_multipliers(const FiniteField& field);

/// The q - 1 squares F_a(x, y) = a*x + y over the field, certified. Every
/// square has F(0, y) = y.
MolsSet mols_from_field(const FiniteField& field);

/// mols_from_field over the built-in field of order q. Throws
/// PreconditionError for q = 1, non prime powers, or orders outside the
/// modulus table.
MolsSet gen_mols_prime_power(std::uint64_t q);

/// Componentwise direct products of two certified sets; the result has
/// min(|a|, |b|) squares of order a.order() * b.order() and is re-certified.
MolsSet macneish_product(const MolsSet& a, const MolsSet& b);

}  // namespace latin
