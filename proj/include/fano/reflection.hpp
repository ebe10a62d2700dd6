#pragma once

// The complex reflection group G(3,3,5): monomial 5x5 matrices whose nonzero
// entries are cube roots of unity with product 1.  Elements are stored as a
// permutation plus an exponent vector; the matrix sends e_k to w^{exp
// [k]} e_{perm[k]}, so multiplication composes permutations and adds
// exponents without any matrix arithmetic.

#include <array>
#include <cstdint>
#include <vector>

#include "fano/eisenstein.hpp"

namespace fano {

struct MonomialMatrix {
  std::array<uint8_t, 5> perm{0, 1, 2, 3, 4};  // k -> perm[k]
  std::array<uint8_t, 5> exp{0, 0, 0, 0, 0};   // scalar on e_k is w^exp[k]

  static MonomialMatrix identity() { return {}; }
  static MonomialMatrix transposition(int i, int j);        // 0-indexed
  static MonomialMatrix diagonal(std::array<uint8_t, 5> e);  // exps mod 3

  /// True when the product of the five scalar entries is 1.
  bool product_one() const { return (exp[0] + exp[1] + exp[2] + exp[3] + exp[4]) % 3 == 0; }

  MonomialMatrix inverse() const;
  EisVec apply(const EisVec& v) const;

  friend MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h);
  friend bool operator==(const MonomialMatrix& g, const MonomialMatrix& h) {
    return g.perm == h.perm && g.exp == h.exp;
  }

  /// Injective encoding, used for closure bookkeeping.
  uint32_t key() const;
};

/// Generators: the adjacent transpositions and diag(w,w,w,w,w^2).
const std::vector<MonomialMatrix>& g335_generators();

/// The whole group by closure under multiplication; 9720 elements.
const std::vector<MonomialMatrix>& g335_elements();

/// Orbit of a line under the group, as canonical representatives in a
/// deterministic order.
std::vector<EisVec> line_orbit(const EisVec& start);

/// Basis of the space of Hermitian 5x5 matrices H over Q(w) satisfying
/// M^T H conj(M) = H for every generator M in gens.  Each solution is
/// returned as a dense matrix of Q(w) entries.
std::vector<std::array<std::array<EisRat, 5>, 5>> invariant_hermitian_forms(
    const std::vector<MonomialMatrix>& gens);

}  // namespace fano
