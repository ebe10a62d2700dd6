#include "fano/eisenstein.hpp"

#include <sstream>

namespace fano {

std::string factored_str(const Int& value) {
  if (value == 0) return "0";
  Int v = abs(value);
  int e2 = 0, e3 = 0;
  while (v % 2 == 0) { v /= 2; ++e2; }
  while (v % 3 == 0) { v /= 3; ++e3; }
  if (v != 1 || (e2 + e3) < 2) return value.get_str();
  std::ostringstream os;
  if (value < 0) os << "-";
  bool first = true;
  if (e2 > 0) {
    os << (e2 == 1 ? "2" : "2^" + std::to_string(e2));
    first = false;
  }
  if (e3 > 0) {
    if (!first) os << "*";
    os << (e3 == 1 ? "3" : "3^" + std::to_string(e3));
  }
  os << " (= " << value.get_str() << ")";
  return os.str();
}

std::optional<EisInt> div_exact(const EisInt& x, const EisInt& y) {
  if (y.is_zero()) return std::nullopt;
  // x/y = x*conj(y)/norm(y); exact iff both coordinates divide out.
  EisInt t = x * y.conj();
  Int n = y.norm();
  if (t.a % n != 0 || t.b % n != 0) return std::nullopt;
  return EisInt{t.a / n, t.b / n};
}

bool divisible_by_lambda(const EisInt& x) {
  return div_exact(x, EisInt{1, -1}).has_value();
}

EisInt alpha_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return EisInt{1};
    case 1: return EisInt{0, 1};
    default: return EisInt{-1, -1};
  }
}

std::string to_string(const EisInt& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  if (x.a != 0) os << x.a.get_str();
  if (x.b != 0) {
    if (x.b > 0 && x.a != 0) os << "+";
    if (x.b == -1) os << "-";
    else if (x.b != 1) os << x.b.get_str() << "*";
    os << "w";
  }
  return os.str();
}

EisRat::EisRat(EisInt n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw MathError("DivisionByZero", "zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  Int g = gcd(gcd(num.a, num.b), den);
  if (g > 1) {
    num.a /= g;
    num.b /= g;
    den /= g;
  }
}

EisRat EisRat::inverse() const {
  if (is_zero()) throw MathError("DivisionByZero", "inverse of zero");
  return {num.conj() * EisInt(den), num.norm()};
}

std::string to_string(const EisRat& x) {
  if (x.den == 1) return to_string(x.num);
  bool two_terms = x.num.a != 0 && x.num.b != 0;
  std::string n = to_string(x.num);
  if (two_terms) n = "(" + n + ")";
  return n + "/" + x.den.get_str();
}

EisVec EisVec::e(int i) {
  EisVec v;
  v.c[i - 1] = EisRat(1);
  return v;
}

EisVec EisVec::line(int i, int j, int beta_exp) {
  EisVec v;
  v.c[i - 1] = EisRat(1);
  v.c[j - 1] = EisRat(-alpha_pow(beta_exp));
  return v;
}

EisVec EisVec::w_sum() {
  EisVec v;
  for (auto& x : v.c) x = EisRat(1);
  return v;
}

bool EisVec::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

EisVec EisVec::conj() const {
  EisVec v;
  for (int k = 0; k < 5; ++k) v.c[k] = c[k].conj();
  return v;
}

EisVec operator+(const EisVec& u, const EisVec& v) {
  EisVec out;
  for (int k = 0; k < 5; ++k) out.c[k] = u.c[k] + v.c[k];
  return out;
}

EisVec operator-(const EisVec& u, const EisVec& v) {
  EisVec out;
  for (int k = 0; k < 5; ++k) out.c[k] = u.c[k] - v.c[k];
  return out;
}

EisVec operator*(const EisRat& s, const EisVec& v) {
  EisVec out;
  for (int k = 0; k < 5; ++k) out.c[k] = s * v.c[k];
  return out;
}

EisRat hermitian_inner(const EisVec& u, const EisVec& v) {
  EisRat acc;
  for (int k = 0; k < 5; ++k) acc = acc + u.c[k] * v.c[k].conj();
  return acc;
}

EisVec canonical_line_rep(const EisVec& v) {
  for (int k = 0; k < 5; ++k)
    if (!v.c[k].is_zero()) return v.c[k].inverse() * v;
  throw MathError("ZeroVector", "no canonical representative");
}

VecQ rational_coords(const EisVec& v) {
  VecQ out(10);
  for (int k = 0; k < 5; ++k) {
    out(2 * k) = v.c[k].unit_coeff();
    out(2 * k + 1) = v.c[k].alpha_coeff();
  }
  return out;
}

std::string to_string(const EisVec& v) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 5; ++k) {
    if (v.c[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << to_string(v.c[k]) << ")*e" << (k + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fano
