#pragma once

// Exact arithmetic in Z[w] and Q(w), where w is a primitive cube root of
// unity: w^2 = -1 - w.  Elements are stored on the free basis (1, w); no
// reduction step exists, so equality is literal.  Conjugation sends w to
// w^2 and the norm of a + b*w is a^2 - a*b + b^2.

#include <array>
#include <optional>
#include <string>

#include "fano/numeric.hpp"

namespace fano {

struct EisInt {
  Int a{0};  // coefficient of 1
  Int b{0};  // coefficient of w

  EisInt() = default;
  EisInt(Int ra) : a(std::move(ra)) {}
  EisInt(long ra) : a(ra) {}
  EisInt(Int ra, Int rb) : a(std::move(ra)), b(std::move(rb)) {}

  static EisInt alpha() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }
  EisInt conj() const { return {a - b, -b}; }
  Int norm() const { return a * a - a * b + b * b; }

  friend EisInt operator+(const EisInt& x, const EisInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisInt operator-(const EisInt& x, const EisInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisInt operator-(const EisInt& x) { return {-x.a, -x.b}; }
  // (a+bw)(c+dw) = ac - bd + (ad + bc - bd)w, after reducing w^2 = -1-w.
  friend EisInt operator*(const EisInt& x, const EisInt& y) {
    Int bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
  }
  friend bool operator==(const EisInt& x, const EisInt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const EisInt& x, const EisInt& y) { return !(x == y); }
};

/// Exact quotient x/y in Z[w], or nullopt when y = 0 or y does not divide x.
std::optional<EisInt> div_exact(const EisInt& x, const EisInt& y);

/// Membership in the prime ideal (1-w), decided by exact division.
bool divisible_by_lambda(const EisInt& x);

/// w^k for k >= 0.
EisInt alpha_pow(int k);

std::string to_string(const EisInt& x);

// ---------------------------------------------------------------------------

/// Element of Q(w) in lowest terms: num/den with den > 0 and
/// gcd(content(num), den) = 1.
struct EisRat {
  EisInt num;
  Int den{1};

  EisRat() = default;
  EisRat(EisInt n) : num(std::move(n)) {}
  EisRat(Int n) : num(std::move(n)) {}
  EisRat(long n) : num(Int(n)) {}
  EisRat(EisInt n, Int d);

  static EisRat alpha() { return EisRat(EisInt::alpha()); }

  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
  /// Membership in the conductor-3 order Z[3w].
  bool in_z3alpha() const { return den == 1 && num.b % 3 == 0; }

  EisRat conj() const { return {num.conj(), den}; }
  Rat norm_q() const { return make_rat(num.norm(), den * den); }
  /// Coefficient of w (equals (2/sqrt 3) * Im under any embedding).
  Rat alpha_coeff() const { return make_rat(num.b, den); }
  Rat unit_coeff() const { return make_rat(num.a, den); }

  EisRat inverse() const;

  friend EisRat operator+(const EisRat& x, const EisRat& y) {
    return {x.num * EisInt(y.den) + y.num * EisInt(x.den), x.den * y.den};
  }
  friend EisRat operator-(const EisRat& x, const EisRat& y) {
    return {x.num * EisInt(y.den) - y.num * EisInt(x.den), x.den * y.den};
  }
  friend EisRat operator-(const EisRat& x) { return {-x.num, x.den}; }
  friend EisRat operator*(const EisRat& x, const EisRat& y) {
    return {x.num * y.num, x.den * y.den};
  }
  friend EisRat operator/(const EisRat& x, const EisRat& y) { return x * y.inverse(); }
  friend bool operator==(const EisRat& x, const EisRat& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const EisRat& x, const EisRat& y) { return !(x == y); }
};

std::string to_string(const EisRat& x);

// ---------------------------------------------------------------------------

/// Vector in Q(w)^5 on the basis e_1,...,e_5.
struct EisVec {
  std::array<EisRat, 5> c{};

  static EisVec e(int i);  // 1-indexed
  /// e_i - w^beta_exp e_j, the direction of a cone-vertex line.
  static EisVec line(int i, int j, int beta_exp);
  /// w = e_1 + ... + e_5.
  static EisVec w_sum();

  bool is_zero() const;
  EisVec conj() const;

  friend EisVec operator+(const EisVec& u, const EisVec& v);
  friend EisVec operator-(const EisVec& u, const EisVec& v);
  friend EisVec operator*(const EisRat& s, const EisVec& v);
  friend bool operator==(const EisVec& u, const EisVec& v) { return u.c == v.c; }
};

/// sum_k u_k * conj(v_k).
EisRat hermitian_inner(const EisVec& u, const EisVec& v);

/// The unique scalar multiple whose first nonzero coordinate is 1.
/// Throws MathError("ZeroVector") on the zero vector.
EisVec canonical_line_rep(const EisVec& v);

/// Coordinates over Q: (a_1, b_1, ..., a_5, b_5) for entries a_k + b_k w.
VecQ rational_coords(const EisVec& v);

std::string to_string(const EisVec& v);

}  // namespace fano
