#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chev/charpoly.hpp"
#include "json.hpp"

namespace chev {

// H_T^*(pt) = Z[t_1, ..., t_r] with t_i the fundamental weight varpi_i.  Exponent vectors are
// stored as Weights in a CharPoly whose v-power is always 0.  Fractions reuse CharFrac.
using HPoly = CharPoly;
using PolyFrac = CharFrac;

HPoly linear_form(const Weight& mu);  // sum_i mu_i t_i
HPoly h_weyl_act(const RootSystem& sys, Elt w, const HPoly& f);
bool is_polynomial(const HPoly& f);  // no negative exponents
HPoly to_hpoly(const PolyFrac& f, const std::string& what);
std::string h_text(const HPoly& f);  // "-w1 + w2", "w1^2*w2 + 3"

// Restrictions to the fixed points of G/P, indexed by Elt; only minimal coset
// representatives carry data when P is nontrivial.
struct CohClass {
  SystemPtr sys;
  std::vector<PolyFrac> at;
  CohClass() = default;
  explicit CohClass(SystemPtr s);
  const PolyFrac& operator[](Elt w) const { return at[w]; }
  PolyFrac& operator[](Elt w) { return at[w]; }
  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator*(const CohClass& o) const;
  CohClass operator*(const PolyFrac& c) const;
  bool equals(const CohClass& o) const;
  bool is_zero() const;
};

// Degenerate affine Hecke algebra elements in normal form sum_u f_u(x) T_u.
using DegenerateElt = std::map<Elt, HPoly>;
// T_w x_lambda = x_{w lambda} T_w - sum_{a>0, w s_a < w} <lambda, a^vee> T_{w s_a}
DegenerateElt degenerate_commute(const RootSystem& sys, Elt w, const Weight& lambda);
// The same product obtained by pushing x_lambda through T_{i_k}, ..., T_{i_1} one relation at a time.
DegenerateElt degenerate_rewrite(const RootSystem& sys, Elt w, const Weight& lambda);
std::string degenerate_text(const RootSystem& sys, const DegenerateElt& e);

// Localization model of H_T^*(G/P).
class CohOracle {
 public:
  CohOracle(SystemPtr sys, std::set<int> parabolic = {});
  const SystemPtr& sys() const { return sys_; }
  const std::set<int>& parabolic() const { return P_; }
  const std::vector<Elt>& points() const { return reps_; }
  CohClass point_class() const;       // [X(id W_P)]
  CohClass c1(const Weight& lambda) const;  // c_1^T(L_lambda)
  CohClass scalar(const HPoly& f) const;
  CohClass tangent_chern() const;     // c^T(T_{G/P})
  // left Demazure-Lusztig operator ((a_i + 1)/a_i) s_i^L - 1/a_i
  CohClass dl_left(int i, const CohClass& F) const;
  const CohClass& csm(Elt w) const;   // c_SM(X(w W_P)°), w in W^P
  const CohClass& csm_opposite(Elt u) const;  // c_SM(Y(u W_P)°) = w0^L c_SM(X(w0 u W_P)°)
  const CohClass& sm(Elt u) const;    // s_M(Y(u W_P)°) = c_SM(Y(u W_P)°) / c(T)
  PolyFrac integral(const CohClass& F) const;
  HPoly pair(const CohClass& F, const CohClass& G) const;
  std::map<Elt, HPoly> expand_csm(const CohClass& F) const;
  std::map<Elt, HPoly> expand_sm(const CohClass& F) const;
  // coefficients read off with the dual basis: <F, s_M(Y(u)°)> and <c_SM(X(u)°), F>
  std::map<Elt, HPoly> expand_csm_by_pairing(const CohClass& F) const;
  std::map<Elt, HPoly> expand_sm_by_pairing(const CohClass& F) const;

 private:
  SystemPtr sys_;
  std::set<int> P_;
  std::vector<Elt> reps_;
  std::vector<HPoly> euler_;  // prod over a > 0 outside R_P of (-x a), at x in W^P
  std::vector<CohClass> csm_, opp_, sm_;
};

// Shared per (label, parabolic); built on first use.
const CohOracle& coh_oracle_for(const SystemPtr& sys, const std::set<int>& parabolic = {});

// c_1(L_lambda) c_SM(X(w W_P)°) in the c_SM basis, closed form; w minimal, lambda P-trivial.
std::map<Elt, HPoly> csm_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda,
                                   const std::set<int>& parabolic = {});
// c_1(L_lambda) s_M(Y(w W_P)°) in the s_M basis, closed form.
std::map<Elt, HPoly> sm_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda,
                                  const std::set<int>& parabolic = {});
std::map<Elt, HPoly> csm_chevalley_oracle(const SystemPtr& sys, Elt w, const Weight& lambda,
                                          const std::set<int>& parabolic = {});
std::map<Elt, HPoly> sm_chevalley_oracle(const SystemPtr& sys, Elt w, const Weight& lambda,
                                         const std::set<int>& parabolic = {});

nlohmann::json csm_table_json(const RootSystem& sys, Elt w, const Weight& lambda, const std::map<Elt, HPoly>& t);
std::string csm_table_text(const RootSystem& sys, const std::map<Elt, HPoly>& t, const std::string& basis);

}  // namespace chev
