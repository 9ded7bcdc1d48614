#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chev/root_system.hpp"

namespace chev {

// H_{alpha,k} = { x : <x, alpha^vee> = k }, stored with alpha positive.
struct Hyperplane {
  int root = 0;
  int64_t level = 0;
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.root == b.root && a.level == b.level; }
};

Hyperplane make_hyperplane(const RootSystem& sys, int root, int64_t level);

// x -> lin(x) + t
struct AffineMap {
  Elt lin = 0;
  Weight t;
  Weight apply(const RootSystem& sys, const Weight& mu) const { return sys.act(lin, mu) + t; }
  AffineMap then_after(const RootSystem& sys, const AffineMap& inner) const;  // this o inner
  static AffineMap identity(const RootSystem& sys) { return {sys.id(), sys.zero()}; }
  static AffineMap reflection(const RootSystem& sys, const Hyperplane& h);
};

Weight affine_reflect(const RootSystem& sys, const Hyperplane& h, const Weight& mu);

struct LambdaChain {
  Weight lambda;
  std::vector<int> betas;       // signed root indices
  std::vector<int64_t> levels;  // d_j, the j-th separating hyperplane is H_{-beta_j, d_j}
  std::vector<int> word;        // affine word in 0..r
  bool reduced = true;

  int length() const { return static_cast<int>(betas.size()); }
  Hyperplane hyperplane(const RootSystem& sys, int j) const;       // h_j, 0-based j
  Hyperplane shifted_hyperplane(const RootSystem& sys, int j) const;  // hyperplane of tilde r_{h_j}
};

// Reduced word of v_{-lambda}, found by walking an interior point of A - lambda back to A.
std::vector<int> v_minus_lambda(const RootSystem& sys, const Weight& lambda);

// Number of hyperplanes separating A and A - lambda.
int64_t alcove_distance(const RootSystem& sys, const Weight& lambda);

LambdaChain chain_from_word(const RootSystem& sys, const Weight& lambda, const std::vector<int>& word);
LambdaChain chain_lex(const RootSystem& sys, const Weight& lambda);
LambdaChain chain_default(const RootSystem& sys, const Weight& lambda);  // lex construction
LambdaChain reverse_chain(const RootSystem& sys, const LambdaChain& c);

// True if applying the reflections along the separating hyperplanes maps A onto A - lambda.
bool chain_reaches(const RootSystem& sys, const LambdaChain& c);
// Recover the affine word of an alcove path given by its hyperplanes; throws if not a path.
std::vector<int> word_of_chain(const RootSystem& sys, const Weight& lambda, const std::vector<int>& betas,
                               const std::vector<int64_t>& levels);

struct ChainReflections {
  Elt r_J = 0;
  AffineMap rhat_lt;
  AffineMap rtilde_gt;
  int n_J = 0;
};

// J holds 0-based sorted positions.
ChainReflections chain_reflections(const RootSystem& sys, const LambdaChain& c, const std::vector<int>& J);

// Descending Bruhat paths through the chain reflections r_{h_j}, starting at w.
//   greater: w > w r_{j1} > w r_{j1} r_{j2} > ... = u with j1 < j2 < ..., i.e. u --J_>--> w
//   less:    w > w r_{jt} > w r_{jt} r_{j(t-1)} > ... = u, i.e. u --J_<--> w
// The callback receives J sorted ascending.  A target u >= 0 prunes on Bruhat order.
enum class PathRule { greater, less };
void for_each_chain_path(const RootSystem& sys, const LambdaChain& c, Elt w, PathRule rule,
                         const std::function<void(const std::vector<int>&, Elt)>& f, Elt target = -1);
// Same enumeration for an arbitrary sequence of (signed) root indices.
void for_each_reflection_path(const RootSystem& sys, const std::vector<int>& roots, Elt w, PathRule rule,
                              const std::function<void(const std::vector<int>&, Elt)>& f, Elt target = -1);

// Hyperplanes crossed by the alcove path of an affine word starting at A, together with
// the crossing direction read off from alcove centers: eps = +1 when the path crosses
// H_{alpha,k} (alpha > 0) in the direction of alpha.
struct Crossing {
  Hyperplane h;
  int eps = 0;
};
std::vector<Crossing> walk_crossings(const RootSystem& sys, const std::vector<int>& word);

std::string affine_word_str(const std::vector<int>& word);
std::string hyperplane_str(const RootSystem& sys, const Hyperplane& h);
std::string root_str(const RootSystem& sys, int b);  // "a1+a2"

}  // namespace chev
