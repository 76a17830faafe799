#include "latin/constructions.hpp"

#include <numeric>
#include <string>

#include "latin/completion.hpp"
#include "latin/error.hpp"
#include "latin/mols_gen.hpp"
#include "latin/transform.hpp"
#include "latin/verify.hpp"

namespace latin {

namespace {

// Outputs are always re-verified; a failure here is a construction bug, not
// bad input.
MolsSet certify_output(std::vector<LatinSquare> squares, const char* what) {
  try {
    return certify(MolsSet(std::move(squares)));
  } catch (const CertificationError& e) {
    throw InvariantViolation(std::string(what) + " produced an uncertified set: " + e.what());
  }
}

const MolsSet& ensure_certified(const MolsSet& s, MolsSet& storage) {
  if (s.certified()) return s;
  storage = certify(s);
  return storage;
}

void require_orthogonal(const LatinSquare& x, const LatinSquare& y, const char* name) {
  const auto rep = are_orthogonal(x, y);
  if (!rep.ok()) throw CertificationError(std::string(name) + " is not an orthogonal pair: " + rep.describe());
}

}  // namespace

MolsSet SquareEmbedResult::as_mols() const {
  std::vector<LatinSquare> all;
  all.reserve(mates.size() + 1);
  all.push_back(host);
  all.insert(all.end(), mates.begin(), mates.end());
  return certify_output(std::move(all), "square embedding");
}

SquareEmbedResult square_embed(const LatinSquare& l, const MolsSet& f) {
  if (f.empty()) throw PreconditionError("square_embed needs at least one MOLS");
  if (f.order() != l.order()) throw PreconditionError("latin square and MOLS must have the same order");
  if (auto rep = is_latin(l); !rep.ok()) throw PreconditionError("input square is not latin: " + rep.describe());
  MolsSet storage;
  const MolsSet& mols = ensure_certified(f, storage);

  const std::size_t n = l.order();
  const std::size_t big = n * n;
  const LatinSquare& f0 = mols[0];
  const auto sym = [n](Symbol hi, Symbol lo) { return hi * static_cast<Symbol>(n) + lo; };

  std::vector<Symbol> host(big * big);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      const Symbol lrow = f0(p, r);
      Symbol* out = host.data() + (p * n + r) * big;
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t c = 0; c < n; ++c) out[q * n + c] = sym(f0(p, q), l(lrow, c));
      }
    }
  }

  SquareEmbedResult result;
  result.host = LatinSquare(big, std::move(host));
  result.mates.reserve(mols.size());
  for (const LatinSquare& fk : mols) {
    std::vector<Symbol> mate(big * big);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = 0; r < n; ++r) {
        const Symbol pr = f0(p, r);
        Symbol* out = mate.data() + (p * n + r) * big;
        for (std::size_t q = 0; q < n; ++q) {
          const Symbol hi = fk(pr, q);
          const Symbol pq = f0(p, q);
          for (std::size_t c = 0; c < n; ++c) out[q * n + c] = sym(hi, fk(pq, c));
        }
      }
    }
    result.mates.emplace_back(big, std::move(mate));
  }

  // Row r of block (0, 0) carries row f0(0, r) of l.
  EmbeddingWitness& w = result.witness;
  w.host_order = big;
  w.rows.resize(n);
  w.cols.resize(n);
  w.symbols.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    w.rows[f0(0, r)] = r;
    w.cols[r] = r;
    w.symbols[r] = sym(f0(0, 0), r);
  }

  (void)result.as_mols();
  if (!check_embedding(PartialLatinSquare::from_square(l), result.host, w)) {
    throw InvariantViolation("square embedding witness does not validate");
  }
  return result;
}

std::size_t embedding_power_of_two(std::size_t n) {
  std::size_t m = 1;
  while (m <= 2 * n) m *= 2;
  return m;
}

PlsEmbedding embed_pls_with_mates(const PartialLatinSquare& p, bool idempotent) {
  const std::size_t n = p.order();
  PlsEmbedding out;
  out.m = embedding_power_of_two(n);
  out.completed = idempotent ? idempotent_complete(p, out.m) : evans_complete(p, out.m);
  const MolsSet field = gen_mols_prime_power(out.m);
  out.result = square_embed(out.completed, field);
  if (idempotent) out.result = make_idempotent(out.result, field[0], out.completed);

  // p sits in the corner of the completion, so the completion's witness
  // restricted to [0, n) locates p in the host.
  EmbeddingWitness& w = out.result.witness;
  w.rows.resize(n);
  w.cols.resize(n);
  w.symbols.resize(n);
  if (!check_embedding(p, out.result.host, w)) throw InvariantViolation("embedding witness does not validate");
  return out;
}

SquareEmbedResult make_idempotent(const SquareEmbedResult& result, const LatinSquare& f0, const LatinSquare& l) {
  const std::size_t n = f0.order();
  const std::size_t big = n * n;
  if (l.order() != n || result.host.order() != big) throw PreconditionError("orders do not match the embedding");
  for (std::size_t j = 0; j < n; ++j) {
    if (f0(0, j) != j) throw PreconditionError("first MOLS square is not in standard form");
  }
  {
    std::vector<bool> seen(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      if (seen[f0(p, p)]) throw PreconditionError("diagonal of the first MOLS square is not a transversal");
      seen[f0(p, p)] = true;
    }
  }
  if (!is_idempotent(l)) throw PreconditionError("embedded square is not idempotent");

  const auto& host = result.host;
  const auto lo = [n](Symbol s) { return s % static_cast<Symbol>(n); };
  const auto hi = [n](Symbol s) { return s / static_cast<Symbol>(n); };

  // Inside row block p, the row r* whose cell in column (p, r) has second
  // coordinate r moves to position (p, r).
  std::vector<std::uint32_t> rows(big);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t found = n;
      for (std::size_t rs = 0; rs < n; ++rs) {
        if (lo(host(p * n + rs, p * n + r)) != r) continue;
        if (found != n) throw PreconditionError("diagonal block has no unique transversal row choice");
        found = rs;
      }
      if (found == n) throw PreconditionError("diagonal block has no row for column " + std::to_string(r));
      rows[p * n + r] = static_cast<std::uint32_t>(p * n + found);
    }
  }
  if (!is_permutation(rows)) throw PreconditionError("derived row permutation is not a bijection");

  // First coordinates on diagonal block p become p.
  std::vector<std::uint32_t> block_name(n, static_cast<std::uint32_t>(n));
  for (std::uint32_t p = 0; p < n; ++p) {
    const Symbol first = hi(host(p * n, p * n));
    if (block_name[first] != n) throw PreconditionError("diagonal blocks share a first coordinate");
    block_name[first] = p;
  }
  std::vector<std::uint32_t> rename(big);
  for (std::uint32_t s = 0; s < big; ++s) rename[s] = block_name[hi(s)] * static_cast<Symbol>(n) + lo(s);

  SquareEmbedResult out;
  out.host = rename_symbols(permute_rows(host, rows), rename);
  out.mates.reserve(result.mates.size());
  for (const auto& mate : result.mates) out.mates.push_back(rename_symbols(permute_rows(mate, rows), rename));
  out.witness = result.witness;

  if (!is_idempotent(out.host)) throw InvariantViolation("row permutation did not make the host idempotent");
  (void)out.as_mols();
  return out;
}

PairEmbedResult pair_embed(const PairEmbedInputs& in) {
  const std::size_t n = in.a1.order();
  for (const auto* sq : {&in.a2, &in.d1, &in.d2}) {
    if (sq->order() != n) throw PreconditionError("pair_embed inputs must share one order");
  }
  if (in.c.empty()) throw PreconditionError("pair_embed needs at least one square in c");
  if (in.c.order() != n) throw PreconditionError("pair_embed inputs must share one order");
  const std::size_t t = in.c.size();
  std::vector<std::uint32_t> f = in.f;
  if (f.empty()) {
    f.resize(t);
    std::iota(f.begin(), f.end(), 0u);
  }
  if (f.size() != t || !is_permutation(f)) throw PreconditionError("f must be a permutation of [0, |c|)");

  require_orthogonal(in.a1, in.a2, "(a1, a2)");
  require_orthogonal(in.d1, in.d2, "(d1, d2)");
  MolsSet storage;
  const MolsSet& c = ensure_certified(in.c, storage);

  const std::size_t big = n * n;
  std::vector<LatinSquare> squares;
  squares.reserve(t + 2);
  squares.push_back(direct_product(in.a1, in.d1));
  squares.push_back(direct_product(in.a2, in.d2));
  for (std::size_t i = 0; i < t; ++i) {
    const LatinSquare& ci = c[i];
    const LatinSquare& cf = c[f[i]];
    std::vector<Symbol> cells(big * big);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = 0; r < n; ++r) {
        Symbol* out = cells.data() + (p * n + r) * big;
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t col = 0; col < n; ++col) {
            out[q * n + col] = ci(p, in.d1(r, col)) * static_cast<Symbol>(n) + cf(q, in.d2(r, col));
          }
        }
      }
    }
    squares.emplace_back(big, std::move(cells));
  }

  PairEmbedResult result;
  result.squares = certify_output(std::move(squares), "pair embedding");
  result.witness_d1 = EmbeddingWitness::identity(n, big);
  result.witness_d2 = EmbeddingWitness::identity(n, big);
  for (std::uint32_t e = 0; e < n; ++e) {
    result.witness_d1.symbols[e] = in.a1(0, 0) * static_cast<Symbol>(n) + e;
    result.witness_d2.symbols[e] = in.a2(0, 0) * static_cast<Symbol>(n) + e;
  }
  if (!check_embedding(PartialLatinSquare::from_square(in.d1), result.squares[0], result.witness_d1) ||
      !check_embedding(PartialLatinSquare::from_square(in.d2), result.squares[1], result.witness_d2)) {
    throw InvariantViolation("pair embedding witness does not validate");
  }
  return result;
}

MolsSet amplify(const MolsSet& s) {
  if (s.size() < 2) throw PreconditionError("amplify needs at least 2 MOLS, got " + std::to_string(s.size()));
  return pair_embed({s[0], s[1], s[0], s[1], s, {}}).squares;
}

MolsSet build_576(const std::optional<MolsSet>& mols24) {
  if (!mols24) return amplify(macneish_product(gen_mols_prime_power(8), gen_mols_prime_power(3)));
  if (mols24->order() != 24) {
    throw PreconditionError("supplied MOLS have order " + std::to_string(mols24->order()) + ", expected 24");
  }
  return amplify(certify(*mols24));
}

}  // namespace latin
