#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chev/alcove.hpp"
#include "chev/charpoly.hpp"
#include "chev/hecke.hpp"
#include "json.hpp"

namespace chev {

enum class Method { chain, operator_, walk, hecke };
std::string method_name(Method m);
Method parse_method(const std::string& s);

// L_lambda (x) MC(X(w)°) = sum_u entries[u] MC(X(u)°)
struct ChevalleyTable {
  SystemPtr sys;
  Elt w = 0;
  Weight lambda;
  std::map<Elt, CharPoly> entries;
  std::string method;

  CharPoly at(Elt u) const;
  bool same_entries(const ChevalleyTable& o) const { return entries == o.entries; }
};

struct ChevalleyTerm {
  std::vector<int> J;  // 0-based chain positions
  Elt u = 0;
  int n_J = 0;
  Weight exponent;
  Scalar coeff;
};

// sign = +1 gives C_{u,lambda}, sign = -1 gives C_{u,-lambda}, with lambda = c.lambda.
// With check_alternative the second exponent formula is evaluated too and must agree.
std::vector<ChevalleyTerm> chevalley_terms(const RootSystem& sys, Elt w, const LambdaChain& c, int sign,
                                           Elt target = -1, bool check_alternative = true);
ChevalleyTable chevalley_chain(const SystemPtr& sys, Elt w, const LambdaChain& c, int sign,
                               bool check_alternative = true);
ChevalleyTable chevalley_operator(const SystemPtr& sys, Elt w, const LambdaChain& c);
// Alcove walk formula: hyperplanes and fold signs read off the walk from A to A - lambda.
ChevalleyTable chevalley_walk(const SystemPtr& sys, Elt w, const Weight& lambda, const std::vector<int>& word);
// Bridge from the Hecke transition coefficients.
ChevalleyTable chevalley_hecke(const SystemPtr& sys, Elt w, const Weight& lambda);

// Default chains: the lex chain for lambda.
ChevalleyTable chevalley(const SystemPtr& sys, Elt w, const Weight& lambda, Method m = Method::chain);

// C^{w,P}_{u,lambda} over u in W^P.
ChevalleyTable chevalley_parabolic(const SystemPtr& sys, Elt w, const Weight& lambda, const std::set<int>& parabolic,
                                   Method m = Method::chain);

// Homogeneous bundle with character sum a_mu e^mu.
std::map<Elt, CharPoly> chevalley_bundle(const SystemPtr& sys, Elt w, const CharPoly& character,
                                         Method m = Method::chain);

// All C^w_{u,lambda} for one lambda, keyed by (u, w).
struct ChevalleyGrid {
  SystemPtr sys;
  Weight lambda;
  std::map<std::pair<Elt, Elt>, CharPoly> entries;
  CharPoly at(Elt u, Elt w) const;
};
ChevalleyGrid chevalley_grid(const SystemPtr& sys, const Weight& lambda, Method m = Method::chain);

enum class Duality { serre, star, dynkin, serre_star, star_dynkin };
std::string duality_name(Duality d);
Duality parse_duality(const std::string& s);
const std::vector<Duality>& all_dualities();
// Weight of the grid the identity reads from, given the target weight.
Weight duality_source_weight(const RootSystem& sys, Duality d, const Weight& lambda);
// Predicted grid for the target weight, computed from the source grid.
ChevalleyGrid duality_transform(const ChevalleyGrid& source, Duality d);

struct PositivityTerm {
  std::vector<int> J;
  Elt u = 0;
  Weight mu;
  int sign = 1;
  int a = 0;  // power of q
  int b = 0;  // power of (q - 1)
};
// Terms of C_{u,+-lambda}^w as sign * e^mu q^a (q-1)^b, q = -y; lambda dominant.
std::vector<PositivityTerm> positivity_structure(const RootSystem& sys, Elt w, const LambdaChain& c, int sign);

// Renderers
nlohmann::json table_json(const ChevalleyTable& t);
nlohmann::json coeffs_json(const RootSystem& sys, Elt w, const Weight& lambda, int sign, const Coeffs& c);
std::string table_text(const ChevalleyTable& t, Var var = Var::y, bool factored = false);
std::string table_latex(const ChevalleyTable& t, Var var = Var::y);

}  // namespace chev
