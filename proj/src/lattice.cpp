#include "fano/lattice.hpp"

namespace fano {

TwoForm::TwoForm(MatQ coeffs) : m(std::move(coeffs)) {
  if (m.rows() != m.cols()) throw MathError("NotSquare", "two-form matrix");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (m(i, j) != -m(j, i)) throw MathError("NotAlternating", "two-form matrix");
}

bool TwoForm::is_integral() const {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

MatZ TwoForm::integral_matrix() const {
  if (!is_integral()) throw MathError("NotIntegral", "two-form has fractional entries");
  MatZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
  return out;
}

Int generated_lattice_discriminant(const MatZ& gram) {
  const Eigen::Index n = gram.rows();
  if (gram.cols() != n) throw MathError("NotSquare", "Gram matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw MathError("NotSymmetric", "Gram matrix");
  if (n == 0) return 1;

  Snf s = smith_normal_form(gram);
  int r = 0;
  for (const Int& d : s.d)
    if (d != 0) ++r;
  if (r == 0) throw MathError("DegeneratePairing", "pairing vanishes on all generators");

  // Rows of U beyond r span the relations; the first r rows of U^{-1}... or
  // rather: with U A V = D, the images of the last n-r rows of U span the
  // kernel, and any rows completing them to a basis of Z^n represent a basis
  // of the quotient.  Completing is free: U is unimodular, so its first r
  // rows work.
  MatZ basis = s.u.topRows(r);
  // But U's own top rows represent the quotient basis only after noting that
  // the kernel rows are exactly u.bottomRows(n-r); Z^n = span(all rows of U).
  MatZ induced = basis * gram * basis.transpose();
  Int det = det_z(induced);
  if (det == 0) throw MathError("DegeneratePairing", "induced Gram is singular");
  return abs(det);
}

LatticeIndex sublattice_index(const MatQ& sub_gens, const MatQ& sup_gens) {
  if (sub_gens.cols() != sup_gens.cols())
    throw MathError("NotSublattice", "mismatched coordinate systems");
  auto [ssub, dsub] = clear_denominators(sub_gens);
  auto [ssup, dsup] = clear_denominators(sup_gens);
  Int d = lcm(dsub, dsup);
  MatZ hs = hnf_rows(ssub * (d / dsub));
  MatZ ht = hnf_rows(ssup * (d / dsup));

  // Express each basis row of sub over the basis of sup.
  MatQ tq = to_q(ht).transpose();  // solve x^T ht = row  <=>  ht^T x = row^T
  MatZ coords(hs.rows(), ht.rows());
  for (Eigen::Index i = 0; i < hs.rows(); ++i) {
    VecQ rhs(hs.cols());
    for (Eigen::Index j = 0; j < hs.cols(); ++j) rhs(j) = Rat(hs(i, j));
    auto x = solve_q(tq, rhs);
    if (!x) throw MathError("NotSublattice", "sub generators outside the span of sup");
    for (Eigen::Index j = 0; j < ht.rows(); ++j) {
      if (!is_integer((*x)(j)))
        throw MathError("NotSublattice", "sub is not contained in sup as a group");
      coords(i, j) = (*x)(j).get_num();
    }
  }
  if (hs.rows() < ht.rows()) return {false, Int(0)};
  Int det = det_z(coords);
  return {true, abs(det)};
}

namespace {

Rat pfaffian_rec(const MatQ& a, std::vector<Eigen::Index>& idx) {
  const size_t k = idx.size();
  if (k == 0) return Rat(1);
  Rat acc(0);
  // expand along the row of idx[0]
  std::vector<Eigen::Index> rest(k - 2);
  for (size_t j = 1; j < k; ++j) {
    const Rat& c = a(idx[0], idx[j]);
    if (c == 0) continue;
    size_t pos = 0;
    for (size_t t = 1; t < k; ++t)
      if (t != j) rest[pos++] = idx[t];
    Rat sub = pfaffian_rec(a, rest);
    if (j % 2 == 1) acc += c * sub;
    else acc -= c * sub;
  }
  return acc;
}

}  // namespace

Rat pfaffian_q(const MatQ& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw MathError("NotSquare", "Pfaffian of non-square matrix");
  if (n % 2 != 0) throw MathError("OddDimension", "Pfaffian needs even dimension");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (a(i, j) != -a(j, i)) throw MathError("NotAlternating", "Pfaffian input");
  std::vector<Eigen::Index> idx(n);
  for (Eigen::Index i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_rec(a, idx);
}

Int pfaffian(const MatZ& a) { return to_int_exact(pfaffian_q(to_q(a))); }

namespace {

void wedge_rec(std::span<const TwoForm> forms, size_t level, unsigned used, int inversions,
               const Rat& partial, Rat& acc) {
  if (level == forms.size()) {
    if (inversions % 2 == 0) acc += partial;
    else acc -= partial;
    return;
  }
  const MatQ& f = forms[level].m;
  const int n = static_cast<int>(f.rows());
  for (int p = 0; p < n; ++p) {
    if (used & (1u << p)) continue;
    for (int q = p + 1; q < n; ++q) {
      if (used & (1u << q)) continue;
      const Rat& c = f(p, q);
      if (c == 0) continue;
      // parity of appending p then q to the index word
      auto above = [&](int v) {
        int cnt = 0;
        for (int t = v + 1; t < n; ++t)
          if (used & (1u << t)) ++cnt;
        return cnt;
      };
      int inv = above(p) + above(q);  // q > p and p placed first adds nothing
      wedge_rec(forms, level + 1, used | (1u << p) | (1u << q),
                inversions + inv, partial * c, acc);
    }
  }
}

}  // namespace

Rat wedge_top_coefficient(std::span<const TwoForm> forms) {
  if (forms.size() != 5) throw MathError("BadArity", "expected five 2-forms");
  for (const TwoForm& f : forms)
    if (f.dim() != 10) throw MathError("BadDimension", "expected dimension 10");
  Rat acc(0);
  wedge_rec(forms, 0, 0u, 0, Rat(1), acc);
  return acc;
}

}  // namespace fano
