#pragma once

// Exact linear algebra over Z and Q on dense Eigen matrices: Hermite and
// Smith normal forms with unimodular transforms, saturated integer kernels,
// rational rank/kernel/solve, fraction-free determinants, and a congruence
// normal form for alternating integer matrices.
//
// Lattices are handled as row spans: the rows of a matrix are generators.

#include <optional>
#include <utility>
#include <vector>

#include "fano/numeric.hpp"

namespace fano {

bool mat_eq(const MatZ& a, const MatZ& b);
bool mat_eq(const MatQ& a, const MatQ& b);
MatZ stack_rows(const MatZ& a, const MatZ& b);
MatQ stack_rows(const MatQ& a, const MatQ& b);

/// Row-style Hermite normal form of the lattice spanned by the rows of A.
/// Returns one basis row per pivot (zero rows dropped): pivots positive,
/// entries above a pivot reduced into [0, pivot).  Pivot columns are taken
/// left to right; among candidate pivots the minimal absolute value wins.
MatZ hnf_rows(MatZ a);

struct Snf {
  std::vector<Int> d;  // invariant factors d_1 | d_2 | ..., zeros trailing
  MatZ u, v;           // unimodular, u * a * v = diag(d)
};
Snf smith_normal_form(MatZ a);

/// Basis rows of the saturated kernel {x in Z^m : x A = 0}.
MatZ left_kernel_z(const MatZ& a);

int rank_q(MatQ a);
int rank_z(const MatZ& a);

/// Columns span {x in Q^n : A x = 0}.
MatQ right_kernel_q(MatQ a);

/// One particular solution of A x = b, or nullopt when inconsistent.
std::optional<VecQ> solve_q(MatQ a, VecQ b);

/// Fraction-free (Bareiss) determinant.
Int det_z(MatZ a);
Rat det_q(const MatQ& a);

struct AltNormalForm {
  MatZ t;              // unimodular, t^T A t block-diagonal
  std::vector<Int> d;  // one positive d per plane block [[0,d],[-d,0]]
  int sign;            // det(t), +1 or -1
};
/// Congruence normal form of an alternating integer matrix.
AltNormalForm alternating_normal_form(MatZ a);

/// (#positive, #negative) diagonal entries after congruence
/// diagonalization of a symmetric rational matrix.
std::pair<int, int> signature_q(MatQ a);

/// HNF-based equality of the row lattices of two rational matrices.
bool row_lattices_equal_q(const MatQ& a, const MatQ& b);

/// Does v lie in the lattice spanned by the rows of gens?
bool in_row_lattice_q(const MatQ& gens, const VecQ& v);

}  // namespace fano
