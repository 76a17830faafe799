#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latin/square.hpp"

namespace latin {

/// A host square with mutually orthogonal mates and the location of the
/// embedded source inside the host.
struct SquareEmbedResult {
  LatinSquare host;
  std::vector<LatinSquare> mates;
  EmbeddingWitness witness;

  /// host followed by the mates, certified.
  MolsSet as_mols() const;
};

/// Order n^2 host with t mates built from a Latin square `l` of order n and
/// t MOLS f of order n. Writing rows as (p, r), columns as (q, c) and
/// symbols as pairs, all flattened block * n + offset:
///
///   host(p r, q c)   = ( f[0](p, q),          l(f[0](p, r), c) )
///   mate_k(p r, q c) = ( f[k](f[0](p, r), q), f[k](f[0](p, q), c) )
///
/// Block (0, 0) of the host holds row f[0](0, r) of l in row r with symbols
/// shifted by f[0](0, 0) * n; for standard-form f[0] this is l itself and
/// the witness is the identity. The output is certified before returning.
SquareEmbedResult square_embed(const LatinSquare& l, const MolsSet& f);

/// Result of the partial-square pipeline, with the intermediate pieces kept
/// for reporting.
struct PlsEmbedding {
  SquareEmbedResult result;
  /// Order of the completed square; the host has order m * m.
  std::size_t m = 0;
  /// The completion of the source into an order-m Latin square.
  LatinSquare completed;
};

/// Smallest power of two m with m > 2n (so 2n >= m / 2).
std::size_t embedding_power_of_two(std::size_t n);

/// Completes p into an order-m square (m = embedding_power_of_two(n)),
/// then square_embed with the field MOLS of order m, giving m - 1 >= 2n
/// mates on a host of order m^2 <= 16 n^2. With `idempotent`, the completion
/// is idempotent and make_idempotent is applied to the result.
PlsEmbedding embed_pls_with_mates(const PartialLatinSquare& p, bool idempotent);

/// Turns the host of a square_embed(l, f) result idempotent: rows inside each
/// row block p are permuted so the diagonal becomes a transversal, and the
/// block part of each symbol is renamed so the diagonal reads 0, 1, 2, ...
/// The same row permutation and renaming are applied to every mate. Block 0
/// and the witness are unchanged; a second application is the identity.
///
/// Throws PreconditionError if f0's diagonal is not a transversal, f0 is not
/// in standard form, or l is not idempotent.
SquareEmbedResult make_idempotent(const SquareEmbedResult& result, const LatinSquare& f0, const LatinSquare& l);

/// Inputs of pair_embed. `d1`, `d2` are the pair to be located in the
/// output; `f` is a bijection on [0, c.size()) (identity when empty).
struct PairEmbedInputs {
  LatinSquare a1;
  LatinSquare a2;
  LatinSquare d1;
  LatinSquare d2;
  MolsSet c;
  std::vector<std::uint32_t> f;
};

struct PairEmbedResult {
  /// b1, b2, then one mate per index i of c, certified.
  MolsSet squares;
  /// d1 inside squares[0], d2 inside squares[1], both in block (0, 0).
  EmbeddingWitness witness_d1;
  EmbeddingWitness witness_d2;
};

/// Order n^2 set of c.size() + 2 MOLS:
///
///   b1(p r, q c)  = ( a1(p, q), d1(r, c) )
///   b2(p r, q c)  = ( a2(p, q), d2(r, c) )
///   x_i(p r, q c) = ( c[i](p, d1(r, c)), c[f(i)](q, d2(r, c)) )
///
/// Throws CertificationError if a1/a2 or d1/d2 are not orthogonal pairs or c
/// is not a MOLS set, PreconditionError on order mismatch or a bad f.
PairEmbedResult pair_embed(const PairEmbedInputs& inputs);

/// n^2-order MOLS of size s.size() + 2 by pair_embed with
/// a = d = (s[0], s[1]), c = s and f the identity. Requires s.size() >= 2.
MolsSet amplify(const MolsSet& s);

/// MOLS of order 576. With `mols24` (which must certify as MOLS of order
/// 24) the result has mols24.size() + 2 squares; without it the MacNeish
/// product of the field MOLS of orders 8 and 3 supplies 2 MOLS of order 24
/// and the result has 4 squares.
MolsSet build_576(const std::optional<MolsSet>& mols24 = std::nullopt);

}  // namespace latin
