#include "fano/linalg.hpp"

namespace fano {

bool mat_eq(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool mat_eq(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

MatZ stack_rows(const MatZ& a, const MatZ& b) {
  MatZ out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

MatQ stack_rows(const MatQ& a, const MatQ& b) {
  MatQ out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

MatZ hnf_rows(MatZ a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    // Euclid within column j until a single nonzero entry remains below r.
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < m; ++i) {
        if (a(i, j) == 0) continue;
        if (piv < 0 || abs(a(i, j)) < abs(a(piv, j))) piv = i;
      }
      if (piv < 0) break;
      bool lone = true;
      for (Eigen::Index i = r; i < m; ++i) {
        if (i == piv || a(i, j) == 0) continue;
        Int q = round_div(a(i, j), a(piv, j));
        a.row(i) -= a.row(piv) * q;
        if (a(i, j) != 0) lone = false;
      }
      if (lone) {
        if (piv != r) a.row(piv).swap(a.row(r));
        break;
      }
    }
    if (a(r, j) == 0) continue;
    if (a(r, j) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = fdiv(a(i, j), a(r, j));
      if (q != 0) a.row(i) -= a.row(r) * q;
    }
    ++r;
  }
  return a.topRows(r);
}

Snf smith_normal_form(MatZ a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  Snf res;
  res.u = MatZ::Identity(m, m);
  res.v = MatZ::Identity(n, n);
  MatZ& u = res.u;
  MatZ& v = res.v;

  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t) { a.row(pi).swap(a.row(t)); u.row(pi).swap(u.row(t)); }
    if (pj != t) { a.col(pj).swap(a.col(t)); v.col(pj).swap(v.col(t)); }

    while (true) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = round_div(a(i, t), a(t, t));
        if (q != 0) { a.row(i) -= a.row(t) * q; u.row(i) -= u.row(t) * q; }
        if (a(i, t) != 0) {
          a.row(i).swap(a.row(t));
          u.row(i).swap(u.row(t));
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = round_div(a(t, j), a(t, t));
        if (q != 0) { a.col(j) -= a.col(t) * q; v.col(j) -= v.col(t) * q; }
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          v.col(j).swap(v.col(t));
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // Fold in any entry the pivot does not divide yet.
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t + 1; i < m && bi < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) { bi = i; bj = j; break; }
      if (bi < 0) break;
      a.row(t) += a.row(bi);
      u.row(t) += u.row(bi);
    }
    if (a(t, t) < 0) { a.row(t) = -a.row(t); u.row(t) = -u.row(t); }
  }
  res.d.resize(steps);
  for (Eigen::Index t = 0; t < steps; ++t) res.d[t] = a(t, t);
  return res;
}

MatZ left_kernel_z(const MatZ& a) {
  Snf s = smith_normal_form(a);
  int r = 0;
  for (const Int& d : s.d)
    if (d != 0) ++r;
  return s.u.bottomRows(a.rows() - r);
}

namespace {

// Row echelon reduction over Q; returns pivot column per used row.
std::vector<Eigen::Index> echelon(MatQ& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, j) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    a.row(r) /= a(r, j);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || a(i, j) == 0) continue;
      a.row(i) -= a.row(r) * a(i, j);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_q(MatQ a) { return static_cast<int>(echelon(a).size()); }

int rank_z(const MatZ& a) { return rank_q(to_q(a)); }

MatQ right_kernel_q(MatQ a) {
  const Eigen::Index n = a.cols();
  std::vector<Eigen::Index> pivots = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;
  MatQ k = MatQ::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) k(pivots[r], col) = -a(r, f);
    ++col;
  }
  return k;
}

std::optional<VecQ> solve_q(MatQ a, VecQ b) {
  const Eigen::Index n = a.cols();
  MatQ aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  std::vector<Eigen::Index> pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  VecQ x = VecQ::Zero(n);
  for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(r, n);
  return x;
}

Int det_z(MatZ a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw MathError("NotSquare", "determinant of non-square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.row(piv).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det_q(const MatQ& a) {
  auto [m, d] = clear_denominators(a);
  Rat det(det_z(m));
  Rat scale(1);
  for (Eigen::Index i = 0; i < a.rows(); ++i) scale *= Rat(d);
  return det / scale;
}

AltNormalForm alternating_normal_form(MatZ a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (a(i, j) != -a(j, i))
        throw MathError("NotAlternating", "matrix is not antisymmetric");

  AltNormalForm res;
  res.t = MatZ::Identity(n, n);
  res.sign = 1;
  MatZ& t = res.t;

  // Every op is a congruence: the column op applied to A and T, and the
  // matching row op applied to A, keeping t^T A0 t = A.
  auto add = [&](Eigen::Index dst, Eigen::Index src, const Int& c) {
    a.col(dst) += a.col(src) * c;
    t.col(dst) += t.col(src) * c;
    a.row(dst) += a.row(src) * c;
  };
  auto swap = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    t.col(i).swap(t.col(j));
    a.row(i).swap(a.row(j));
    res.sign = -res.sign;
  };

  Eigen::Index k = 0;
  while (k + 1 < n) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    swap(pi, k);
    if (pj == k) pj = pi;  // the swap moved it
    swap(pj, k + 1);

    while (true) {
      bool clean = true;
      for (Eigen::Index j = k + 2; j < n; ++j) {
        if (a(k, j) == 0) continue;
        Int q = round_div(a(k, j), a(k, k + 1));
        if (q != 0) add(j, k + 1, -q);
        if (a(k, j) != 0) { swap(j, k + 1); clean = false; break; }
      }
      if (!clean) continue;
      for (Eigen::Index j = k + 2; j < n; ++j) {
        if (a(k + 1, j) == 0) continue;
        Int q = round_div(a(k + 1, j), a(k + 1, k));
        if (q != 0) add(j, k, -q);
        if (a(k + 1, j) != 0) { swap(j, k); clean = false; break; }
      }
      if (clean) break;
    }
    if (a(k, k + 1) < 0) swap(k, k + 1);
    res.d.push_back(a(k, k + 1));
    k += 2;
  }
  return res;
}

std::pair<int, int> signature_q(MatQ a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (a(i, j) != a(j, i)) throw MathError("NotSymmetric", "signature of non-symmetric matrix");
  int pos = 0, neg = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index dj = -1;
      for (Eigen::Index j = k + 1; j < n; ++j)
        if (a(j, j) != 0) { dj = j; break; }
      if (dj >= 0) {
        a.row(k).swap(a.row(dj));
        a.col(k).swap(a.col(dj));
      } else {
        Eigen::Index p = -1, q = -1;
        for (Eigen::Index i = k; i < n && p < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (a(i, j) != 0) { p = i; q = j; break; }
        if (p < 0) break;  // trailing block is zero
        a.row(p) += a.row(q);
        a.col(p) += a.col(q);
        if (p != k) {
          a.row(k).swap(a.row(p));
          a.col(k).swap(a.col(p));
        }
      }
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat c = a(i, k) / a(k, k);
      a.row(i) -= a.row(k) * c;
      a.col(i) -= a.col(k) * c;
    }
    if (a(k, k) > 0) ++pos;
    else if (a(k, k) < 0) ++neg;
  }
  return {pos, neg};
}

bool row_lattices_equal_q(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.cols()) return false;
  auto [sa, da] = clear_denominators(a);
  auto [sb, db] = clear_denominators(b);
  Int d = lcm(da, db);
  return mat_eq(hnf_rows(sa * (d / da)), hnf_rows(sb * (d / db)));
}

bool in_row_lattice_q(const MatQ& gens, const VecQ& v) {
  MatQ all = stack_rows(gens, MatQ(v.transpose()));
  auto [s, d] = clear_denominators(all);
  MatZ h = hnf_rows(s.topRows(gens.rows()));
  VecZ w = s.row(gens.rows()).transpose();
  // Greedy reduction against the HNF basis.
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    Eigen::Index p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (w(p) % h(r, p) != 0) return false;
    Int q = w(p) / h(r, p);
    if (q != 0) w -= (h.row(r) * q).transpose();
  }
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (w(j) != 0) return false;
  return true;
}

}  // namespace fano
