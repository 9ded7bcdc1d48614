#pragma once

#include <map>
#include <set>
#include <vector>

#include "chev/charpoly.hpp"
#include "chev/chevalley.hpp"
#include "json.hpp"

namespace chev {

// Restrictions of an equivariant K-theory class to the fixed points e_w, indexed by Elt.
struct LocalizedClass {
  SystemPtr sys;
  std::vector<CharFrac> at;

  LocalizedClass() = default;
  explicit LocalizedClass(SystemPtr s);
  const CharFrac& operator[](Elt w) const { return at[w]; }
  CharFrac& operator[](Elt w) { return at[w]; }

  LocalizedClass operator+(const LocalizedClass& o) const;
  LocalizedClass operator-(const LocalizedClass& o) const;
  LocalizedClass operator*(const LocalizedClass& o) const;  // pointwise, i.e. tensor product
  LocalizedClass operator*(const CharFrac& c) const;        // K_T(pt) scalar
  bool equals(const LocalizedClass& o) const;
  bool is_zero() const;
  std::set<Elt> support() const;
  LocalizedClass reduced() const;
  LocalizedClass map(const std::function<CharFrac(const CharFrac&)>& f) const;
};

LocalizedClass line_bundle(const SystemPtr& sys, const Weight& lambda);
// [O_{X(id)}], the class of the fixed point e_id.
LocalizedClass point_class(const SystemPtr& sys);
LocalizedClass trivial_class(const SystemPtr& sys);
// lambda_y of the cotangent bundle: prod_{a>0} (1 + y e^{w a}) at e_w.
LocalizedClass lambda_y_cotangent(const SystemPtr& sys);
// (x^L F)|_w = x(F|_{x^{-1} w})
LocalizedClass left_action(Elt x, const LocalizedClass& F);
// left Demazure-Lusztig operator
LocalizedClass dl_left(int i, const LocalizedClass& F);
// Grothendieck-Serre dual: (-1)^{dim} e^{2 w rho} (F|_w)^vee
LocalizedClass serre_dual(const LocalizedClass& F);
// dual bundle, y unchanged
LocalizedClass star_dual(const LocalizedClass& F);

// sum_w F|_w / prod_{a>0} (1 - e^{w a}); throws std::domain_error when not a Laurent polynomial
CharPoly euler_char(const LocalizedClass& F);
CharPoly pair(const LocalizedClass& F, const LocalizedClass& G);

// All MC and SMC classes of one root system, built once.
class KOracle {
 public:
  explicit KOracle(SystemPtr sys);
  const SystemPtr& sys() const { return sys_; }

  const LocalizedClass& mc(Elt w) const { return mc_[w]; }
  const LocalizedClass& mc_opposite(Elt w) const { return mcy_[w]; }  // MC(Y(w)°)
  // dual basis to MC under the pairing
  const LocalizedClass& smc(Elt u) const { return smc_[u]; }
  // (-y)^{dim Y(u)} D(MC(Y(u)°)) / lambda_y(T*)
  LocalizedClass smc_from_definition(Elt u) const;
  // SMC(X(w)°), from the definition with the X-cell
  LocalizedClass smc_schubert(Elt w) const;

  // C^w_{u,lambda} = < L_lambda (x) MC(X(w)°), SMC(Y(u)°) >
  ChevalleyTable expand_product(Elt w, const Weight& lambda) const;
  std::map<Elt, CharPoly> expand_class(const LocalizedClass& F) const;
  std::map<Elt, CharPoly> expand_bundle(Elt w, const CharPoly& character) const;

 private:
  SystemPtr sys_;
  std::vector<LocalizedClass> mc_, mcy_, smc_;
  // SMC(Y(u)°)|_x / prod_{a>0}(1 - e^{x a}) = num_[u][x] / den_[u]
  std::vector<std::vector<CharPoly>> num_;
  std::vector<CharPoly> den_;
  std::vector<std::vector<Elt>> support_;
};

// Shared per root-system label; built on first use under a lock, read-only afterwards.
const KOracle& oracle_for(const SystemPtr& sys);

ChevalleyTable oracle_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda);

// G/P model: fixed points W^P, pushforward of MC classes from G/B.
class ParabolicOracle {
 public:
  ParabolicOracle(SystemPtr sys, std::set<int> parabolic);
  const std::vector<Elt>& points() const { return reps_; }
  const LocalizedClass& mc(Elt w) const;  // w in W^P; entries only at W^P
  CharPoly pair(const LocalizedClass& F, const LocalizedClass& G) const;
  ChevalleyTable expand_product(Elt w, const Weight& lambda) const;

 private:
  SystemPtr sys_;
  std::set<int> parabolic_;
  std::vector<Elt> reps_;
  std::map<Elt, LocalizedClass> mc_, smc_;
};

nlohmann::json class_json(const LocalizedClass& F, const std::string& name);

}  // namespace chev
