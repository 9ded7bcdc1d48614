#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chev/root_system.hpp"
#include "chev/scalar.hpp"

namespace chev {

struct Mono {
  Weight w;
  int32_t v = 0;
  friend bool operator==(const Mono& a, const Mono& b) { return a.v == b.v && a.w == b.w; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.v < b.v;
  }
  Mono operator+(const Mono& o) const { return {w + o.w, v + o.v}; }
  Mono operator-(const Mono& o) const { return {w - o.w, v - o.v}; }
};

// Finite sum of c * v^k * e^mu, coefficients in Z.  Terms sorted ascending, no zeros.
class CharPoly {
 public:
  using Term = std::pair<Mono, int64_t>;

  CharPoly() = default;
  explicit CharPoly(int rank) : rank_(rank) {}
  static CharPoly constant(int rank, const Scalar& s);
  static CharPoly exp(const Weight& mu, const Scalar& s = Scalar(1));
  static CharPoly from_terms(int rank, std::vector<Term> terms);

  int rank() const { return rank_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_constant() const;  // only weight 0
  bool is_monomial() const { return t_.size() == 1; }

  CharPoly operator+(const CharPoly& o) const;
  CharPoly operator-(const CharPoly& o) const;
  CharPoly operator-() const;
  CharPoly operator*(const CharPoly& o) const;
  CharPoly operator*(const Scalar& s) const;
  CharPoly& operator+=(const CharPoly& o) { return *this = *this + o; }
  CharPoly& operator-=(const CharPoly& o) { return *this = *this - o; }
  CharPoly& operator*=(const CharPoly& o) { return *this = *this * o; }
  CharPoly pow(int k) const;
  CharPoly shift(const Mono& m) const;  // multiply by the monomial m

  std::optional<CharPoly> div_exact(const CharPoly& d) const;
  CharPoly div_exact_or_throw(const CharPoly& d) const;

  CharPoly map_weights(const std::function<Weight(const Weight&)>& f) const;
  CharPoly map_scalars(const std::function<Scalar(const Scalar&)>& f) const;
  CharPoly weyl_act(const RootSystem& sys, Elt w) const;
  CharPoly v_inverse() const;  // y -> 1/y
  CharPoly star() const;       // e^mu -> e^-mu
  CharPoly dual_vee() const;   // both
  CharPoly iota(const RootSystem& sys) const;  // w0 after star

  Scalar coefficient(const Weight& mu) const;
  std::map<Weight, Scalar> by_weight() const;
  Scalar eval_weights_at_one() const;  // e^mu -> 1
  Scalar constant_term() const { return coefficient(Weight(rank_)); }

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }
  friend bool operator<(const CharPoly& a, const CharPoly& b) { return a.t_ < b.t_; }

 private:
  void canonicalize();
  int rank_ = 0;
  std::vector<Term> t_;
};

// Numerator over a product of normalized denominator factors.  Factors are
// kept as a sorted multiset; addition uses the least common multiple of the
// factor multisets and cancellation is attempted by exact division.
class CharFrac {
 public:
  CharFrac() = default;
  CharFrac(const CharPoly& p) : num_(p) {}  // NOLINT implicit embedding
  static CharFrac ratio(const CharPoly& num, const CharPoly& den);

  int rank() const { return num_.rank(); }
  const CharPoly& num() const { return num_; }
  const std::vector<std::pair<CharPoly, int>>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }
  CharPoly den_product() const;

  CharFrac operator+(const CharFrac& o) const;
  CharFrac operator-(const CharFrac& o) const;
  CharFrac operator-() const;
  CharFrac operator*(const CharFrac& o) const;
  CharFrac operator/(const CharFrac& o) const;
  CharFrac& operator+=(const CharFrac& o) { return *this = *this + o; }
  CharFrac& operator-=(const CharFrac& o) { return *this = *this - o; }
  CharFrac& operator*=(const CharFrac& o) { return *this = *this * o; }

  CharFrac reduced() const;
  std::optional<CharPoly> to_poly() const;  // after reduction
  CharPoly poly_or_throw(const std::string& what) const;

  CharFrac weyl_act(const RootSystem& sys, Elt w) const;
  CharFrac map_weights(const std::function<Weight(const Weight&)>& f) const;
  CharFrac v_inverse() const;
  CharFrac star() const;
  CharFrac dual_vee() const;
  CharFrac iota(const RootSystem& sys) const;

  bool equals(const CharFrac& o) const;

 private:
  static CharFrac make(CharPoly num, std::vector<std::pair<CharPoly, int>> den);
  void add_factor(const CharPoly& f, int mult);
  CharPoly num_;
  std::vector<std::pair<CharPoly, int>> den_;
};

// 1 + c e^beta v^k style binomials used everywhere
CharPoly one_plus(const Mono& m, int64_t c, int rank);

enum class Involution { dual_vee, star, iota, y_inverse, q_to_minus_y };
CharFrac involute(const RootSystem& sys, const CharFrac& f, Involution which);
Involution parse_involution(const std::string& s);

}  // namespace chev
