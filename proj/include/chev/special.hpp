#pragma once

#include <string>
#include <vector>

#include "chev/charpoly.hpp"
#include "chev/chevalley.hpp"

namespace chev {

// Demazure-Lusztig operators on K_T(pt)[y].
//   tilde_T:     T_i f = -f (1+y)/(1-e^{-a_i}) + s_i(f) (1+y e^{a_i})/(1-e^{-a_i})
//   tilde_T_vee: same with 1 + y e^{-a_i}
enum class DLVariant { tilde_T, tilde_T_vee };
CharPoly dl_scalar(const RootSystem& sys, DLVariant v, int i, const CharPoly& f);
// Along the canonical reduced word, rightmost letter first.
CharPoly dl_scalar_word(const RootSystem& sys, DLVariant v, Elt w, const CharPoly& f);

// Iwahori-Whittaker function W_{lambda,w} = tilde_T_w(e^lambda), lambda anti-dominant.
CharPoly whittaker(const SystemPtr& sys, const Weight& lambda, Elt w);
// e^rho sum_u (-1)^{l(u)} C^w_{u,lambda-rho}|_{y -> 1/y} y^{l(w)-l(u)}
CharPoly whittaker_chevalley(const SystemPtr& sys, const Weight& lambda, Elt w);
// chi_T(L_lambda (x) MC'(X(w)°)) in the localization model
CharPoly whittaker_oracle(const SystemPtr& sys, const Weight& lambda, Elt w);

// R_lambda(y) = chi_T(lambda_y(T*) (x) L_lambda)
CharPoly big_R(const SystemPtr& sys, const Weight& lambda);
CharPoly big_R_operator(const SystemPtr& sys, const Weight& lambda);  // sum_w tilde_T_vee_w(e^lambda)
// H_lambda(y) on G/P_lambda; +-lambda dominant
enum class HRoute { localization, chevalley, quotient };
CharPoly big_H(const SystemPtr& sys, const Weight& lambda, HRoute route = HRoute::localization);

// Hall-Littlewood polynomials, t stored as q = v^2 (so y = -t).
struct HLTerm {
  Elt w = 0;
  std::vector<int> J;  // 0-based
  Elt u = 0;
  CharPoly term;  // coefficient in t times e^{weight}
};
enum class HLMethod { closed, chain_lenart, chain_new };
std::string hl_method_name(HLMethod m);
HLMethod parse_hl_method(const std::string& s);
std::vector<HLTerm> hl_terms(const SystemPtr& sys, const Weight& lambda, HLMethod m);
CharPoly hall_littlewood(const SystemPtr& sys, const Weight& lambda, HLMethod m = HLMethod::closed);
// H_{-lambda}|_{e^a -> x^{-a}, y -> -t} and ((-y)^{-dim} H_lambda)|_{e^a -> x^a, y -> -1/t}
CharPoly hall_littlewood_from_H(const SystemPtr& sys, const Weight& lambda, int which);

// Type A_{n-1}: x_i = e^{eps_i}.  Converts a weight polynomial of homogeneous degree d into
// exponent vectors of length n (stored as Weights of rank n).
CharPoly to_gl(const RootSystem& sys, const CharPoly& p, int degree);
CharPoly schur_gl(int n, const std::vector<int>& partition);
// Symmetric polynomial in n variables -> (partition, coefficient) list.
std::vector<std::pair<std::vector<int>, Scalar>> schur_expand(const CharPoly& gl);
std::string schur_text(const std::vector<std::pair<std::vector<int>, Scalar>>& e, Var var = Var::t);  // "s22 - t*s211"
std::string gl_text(const CharPoly& gl, Var var = Var::t);
int weight_degree(const RootSystem& sys, const Weight& lambda);  // |partition| of a dominant type-A weight

}  // namespace chev
