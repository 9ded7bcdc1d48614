#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chev/alcove.hpp"
#include "chev/scalar.hpp"

namespace chev {

struct HKey {
  Elt w = 0;
  Weight mu;
  friend bool operator<(const HKey& a, const HKey& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.mu < b.mu;
  }
  friend bool operator==(const HKey& a, const HKey& b) { return a.w == b.w && a.mu == b.mu; }
};

// Element of the affine Hecke algebra in the normal form sum c * X^mu T_w.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(SystemPtr sys) : sys_(std::move(sys)) {}

  static HeckeElement X(SystemPtr sys, const Weight& mu, const Scalar& c = Scalar(1));
  static HeckeElement T(SystemPtr sys, Elt w, const Scalar& c = Scalar(1));
  static HeckeElement T_simple(SystemPtr sys, int i);
  static HeckeElement T_simple_inv(SystemPtr sys, int i);  // q^-1 T_s + (q^-1 - 1)
  static HeckeElement T_inv(SystemPtr sys, Elt w);          // (T_w)^-1
  static HeckeElement E(SystemPtr sys, Elt u);              // (T_{u^-1})^-1

  const SystemPtr& sys() const { return sys_; }
  const std::map<HKey, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coeff(Elt w, const Weight& mu) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator-() const;
  HeckeElement operator*(const HeckeElement& o) const;
  HeckeElement operator*(const Scalar& s) const;
  HeckeElement& operator+=(const HeckeElement& o);

  HeckeElement lmul_T(int i) const;      // T_{s_i} * this
  HeckeElement lmul_T_inv(int i) const;  // T_{s_i}^-1 * this
  HeckeElement rmul_T(int i) const;      // this * T_{s_i}
  HeckeElement rmul_T_inv(int i) const;
  HeckeElement lmul_X(const Weight& mu) const;

  HeckeElement theta() const;

  std::string str() const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.t_ == b.t_; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

 private:
  void add(Elt w, const Weight& mu, const Scalar& c);
  SystemPtr sys_;
  std::map<HKey, Scalar> t_;
};

// (X^{s mu} - X^mu) / (1 - X^{-alpha_i}) expanded as a list of weights with signs.
std::vector<std::pair<Weight, int>> bernstein_quotient(const RootSystem& sys, int i, const Weight& mu);

// Random element with small coefficients, used by property tests.
HeckeElement random_hecke(const SystemPtr& sys, std::mt19937_64& rng, int terms, int bound);

// Finite Hecke algebra expansion of E(u) = (T_{u^-1})^-1 in the T basis.
std::map<Elt, Scalar> e_basis_expansion(const RootSystem& sys, Elt u);

// Rewrite sum X^mu T_v into sum X^mu E(u).
std::map<HKey, Scalar> to_e_basis(const HeckeElement& a);

// c_{u,mu}^{w,lambda}: T_{w^-1}^-1 X^lambda = sum c X^mu T_{u^-1}^-1.
using Coeffs = std::map<HKey, Scalar>;

enum class DirectRoute { inverse, theta };
Coeffs transition_direct(const SystemPtr& sys, Elt w, const Weight& lambda, DirectRoute route = DirectRoute::inverse);

struct TransitionTerm {
  std::vector<int> J;  // 0-based chain positions
  Elt u = 0;
  Weight mu;
  int n_J = 0;
  Scalar coeff;
};

// sign = -1: c^{w,-lambda}; sign = +1: c^{w,lambda}; lambda = c.lambda.
std::vector<TransitionTerm> transition_terms(const RootSystem& sys, Elt w, const LambdaChain& c, int sign);
Coeffs transition_chain(const RootSystem& sys, Elt w, const LambdaChain& c, int sign);

// Coefficient map restricted to one u, sorted by weight.
std::map<Weight, Scalar> coeffs_at(const Coeffs& c, Elt u);

}  // namespace chev
