#pragma once

// Exact scalar types (GMP) and Eigen matrix aliases used throughout.
// Every computation in this library is over Z or Q; no floating point.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>

namespace fano {

using Int = mpz_class;
using Rat = mpq_class;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Error with a stable machine-readable code ("ZeroVector", "NotSublattice", ...).
struct MathError : std::runtime_error {
  std::string code;
  MathError(std::string c, const std::string& detail)
      : std::runtime_error(c + ": " + detail), code(std::move(c)) {}
};

inline Rat make_rat(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int_exact(const Rat& r) {
  if (!is_integer(r)) throw MathError("NotInteger", r.get_str());
  return r.get_num();
}

// Floor division / remainder (gmp's operator% truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
// Quotient rounded to nearest, so that |a - q*b| <= |b|/2.
inline Int round_div(const Int& a, const Int& b) {
  Int q = fdiv(a, b);
  Int r = a - q * b;
  if (2 * r > abs(b)) q += 1;
  return q;
}

inline MatQ to_q(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

// Smallest d > 0 with d*m integral, together with d*m.
inline std::pair<MatZ, Int> clear_denominators(const MatQ& m) {
  Int d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      d = lcm(d, Int(m(i, j).get_den()));
  MatZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Rat s = m(i, j) * Rat(d);
      out(i, j) = s.get_num();
    }
  return {out, d};
}

/// "2^a*3^b" when the value factors over {2,3}, else plain decimal.
/// Big lattice determinants are much easier to eyeball factored.
std::string factored_str(const Int& value);

}  // namespace fano

namespace Eigen {

template <>
struct NumTraits<fano::Int> : GenericNumTraits<fano::Int> {
  using Real = fano::Int;
  using NonInteger = fano::Rat;
  using Nested = fano::Int;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<fano::Rat> : GenericNumTraits<fano::Rat> {
  using Real = fano::Rat;
  using NonInteger = fano::Rat;
  using Nested = fano::Rat;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen
