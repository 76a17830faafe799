#pragma once

#include <cstdint>
#include <span>

#include "latin/square.hpp"

namespace latin {

/// Direct (Kronecker) product: cell (p*n + r, q*n + c) of the result holds
/// a(p,q)*n + b(r,c), where n = b.order().
LatinSquare direct_product(const LatinSquare& a, const LatinSquare& b);

/// Row i of the result is row perm[i] of the input.
LatinSquare permute_rows(const LatinSquare& square, std::span<const std::uint32_t> perm);

/// Every symbol s is replaced by perm[s].
LatinSquare rename_symbols(const LatinSquare& square, std::span<const std::uint32_t> perm);

}  // namespace latin
