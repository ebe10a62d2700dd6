#pragma once

// Lattice invariants built on the normal forms: discriminants of lattices
// presented by (possibly dependent) generators, indices of sublattices,
// Pfaffians, and top-degree coefficients of products of alternating 2-forms.

#include <span>
#include <vector>

#include "fano/linalg.hpp"

namespace fano {

/// Alternating rational form on a lattice basis.
struct TwoForm {
  MatQ m;

  TwoForm() = default;
  explicit TwoForm(MatQ coeffs);

  Eigen::Index dim() const { return m.rows(); }
  bool is_integral() const;
  MatZ integral_matrix() const;  // throws MathError("NotIntegral")
};

/// Discriminant of the lattice generated by n classes with Gram matrix g:
/// the integer kernel {x : x g = 0} is treated as the relation module,
/// a basis of Z^n modulo the kernel is selected through the Smith
/// transforms, and |det| of the induced Gram on that basis is returned.
/// Throws MathError("DegeneratePairing") when the pairing carries no rank.
Int generated_lattice_discriminant(const MatZ& gram);

struct LatticeIndex {
  bool finite;
  Int value;  // meaningful when finite
};

/// Group index [<sup> : <sub>] for generator rows in a common coordinate
/// system.  Throws MathError("NotSublattice") when sub is not contained in
/// sup; returns finite=false when the rational spans differ.
LatticeIndex sublattice_index(const MatQ& sub_gens, const MatQ& sup_gens);

/// Pfaffian by recursive expansion along the first row; pf^2 = det.
Int pfaffian(const MatZ& a);
Rat pfaffian_q(const MatQ& a);

/// Coefficient of e_1^...^e_10 in the product of five 2-forms on a
/// 10-dimensional space: the sum over all assignments of disjoint index
/// pairs (p_i < q_i) to the five forms of sign * prod_i form_i(p_i, q_i).
Rat wedge_top_coefficient(std::span<const TwoForm> forms);

}  // namespace fano
