#pragma once

#include <map>
#include <vector>

#include "chev/oracle.hpp"

namespace chev {

// Coefficients of the stable layer live in Z[q^{1/2}, q^{-1/2}] [X*(T)].  The Scalar
// variable v is read as q^{1/2} here, so Scalar::q() is still q.
using StabExpansion = std::map<Elt, CharPoly>;  // sum_w coeff * stab_A(w), A the fundamental alcove

// stab_A(w) = (-1)^{dim} q^{dim - l(w)/2} MC_{-1/q}(Y(w)°) (x) L_{-2 rho}
LocalizedClass stab_class(const SystemPtr& sys, Elt w);
// Expansion of a localized class in the stable basis of the fundamental alcove.
StabExpansion stab_expand(const SystemPtr& sys, const LocalizedClass& F);
LocalizedClass stab_combination(const SystemPtr& sys, const StabExpansion& e);

enum class StabRoute { chevalley, chain, oracle };
// L_lambda (x) stab_A(u)
StabExpansion chevalley_stab(const SystemPtr& sys, Elt u, const Weight& lambda, StabRoute route = StabRoute::chevalley);
// stab_{A + lambda}(w) = e^{-w lambda} L_lambda (x) stab_A(w)
StabExpansion stab_translate(const SystemPtr& sys, Elt w, const Weight& lambda, StabRoute route = StabRoute::chevalley);

// One wall crossing from alcove A_k to A_{k+1} across H_{alpha,n}; eps = +1 when A_{k+1} is on
// the positive side.  Maps the expansions of stab_{A_k} to those of stab_{A_{k+1}}.
std::vector<StabExpansion> wall_cross(const SystemPtr& sys, const std::vector<StabExpansion>& current, int root,
                                      int64_t level, int eps);
// Composes wall crossings along the alcove path of v_{-(-lambda)} from A to A + lambda.
std::vector<StabExpansion> stab_by_wall_crossing(const SystemPtr& sys, const Weight& lambda);

// Convolution operator T_i on localized classes of T*(G/B).
LocalizedClass hecke_T_localized(int i, const LocalizedClass& F);
// The two-case formula for T_i(stab_A(w)).
StabExpansion hecke_T_on_stab(const SystemPtr& sys, int i, Elt w);

std::string stab_text(const RootSystem& sys, const StabExpansion& e);

}  // namespace chev
