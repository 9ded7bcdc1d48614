#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chev {

inline int64_t add_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient arithmetic");
  return r;
}

inline int64_t mul_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient arithmetic");
  return r;
}

// How a Laurent polynomial in v is printed.
enum class Var { v, q, y, t, t_inv, qhalf };

// Laurent polynomial in v with integer coefficients.  q = v^2 and y = -v^2.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int64_t c) {  // NOLINT implicit constant
    if (c != 0) c_ = {c};
  }
  static Scalar mono(int k, int64_t c = 1);
  static Scalar v() { return mono(1); }
  static Scalar q() { return mono(2); }
  static Scalar y() { return mono(2, -1); }
  static Scalar q_pow(int k) { return mono(2 * k); }
  static Scalar neg_y_pow(int k) { return mono(2 * k); }  // (-y)^k
  static Scalar y_pow(int k) { return mono(2 * k, (k % 2) ? -1 : 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int64_t coeff(int k) const;
  bool even_only() const;  // only even powers of v
  const std::vector<int64_t>& dense() const { return c_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar pow(int k) const;  // negative k only for monomials
  std::optional<Scalar> div_exact(const Scalar& d) const;
  Scalar v_inverse() const;  // v -> 1/v, i.e. y -> 1/y and q -> 1/q
  Scalar shift(int k) const;  // times v^k

  // Evaluate the substitution polynomials: returns list of (power of v, coefficient)
  std::vector<std::pair<int, int64_t>> terms() const;

  std::string str(Var var = Var::v) const;
  std::string latex(Var var = Var::v) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
    return a.c_ < b.c_;
  }

 private:
  void normalize();
  int lo_ = 0;
  std::vector<int64_t> c_;
};

// (1 - q), (q - 1), (1 + y) etc. convenience
inline Scalar one_minus_q() { return Scalar(1) - Scalar::q(); }
inline Scalar q_minus_one() { return Scalar::q() - Scalar(1); }
inline Scalar one_plus_y() { return Scalar(1) + Scalar::y(); }

}  // namespace chev
