#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "chev/weight.hpp"

namespace chev {

using Elt = int;  // index of a Weyl group element inside its RootSystem

constexpr size_t kDefaultWeylCap = 60000;

class RootSystem {
 public:
  // label like "A2", "B3", "G2"; throws std::invalid_argument on unknown labels
  static std::shared_ptr<const RootSystem> make(const std::string& label, size_t weyl_cap = kDefaultWeylCap);

  const std::string& label() const { return label_; }
  char type() const { return type_; }
  int rank() const { return rank_; }
  // cartan(i,j) = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  // Roots are indexed 0..N-1 (positive, sorted by height then coordinates), N..2N-1 (their negatives).
  int num_positive() const { return npos_; }
  int num_roots() const { return 2 * npos_; }
  bool is_positive(int b) const { return b < npos_; }
  int neg(int b) const { return b < npos_ ? b + npos_ : b - npos_; }
  int abs_root(int b) const { return b < npos_ ? b : b - npos_; }
  const Weight& root(int b) const { return roots_[b]; }
  const std::vector<int>& root_simple_coords(int b) const { return root_simple_[b]; }
  const std::vector<int>& coroot_coords(int b) const { return coroot_[b]; }
  int simple_root(int i) const { return simple_index_[i]; }
  int root_index(const Weight& w) const;  // -1 when not a root
  int height(int b) const;

  int64_t pair(const Weight& mu, int b) const;  // <mu, beta^vee>
  Weight reflect(int b, const Weight& mu) const;
  Weight reflect(const Weight& beta, const Weight& mu) const;  // rejects non-roots
  Weight affine_reflect(int b, int64_t k, const Weight& mu) const;  // s_beta(mu) + k beta

  int theta() const { return theta_; }  // root whose coroot is the highest coroot
  int coxeter_number() const { return coxeter_; }
  Weight rho() const;
  Weight fundamental(int i) const;
  Weight zero() const { return Weight(rank_); }
  bool is_dominant(const Weight& mu) const;
  bool is_antidominant(const Weight& mu) const;
  int dim_flag() const { return npos_; }

  // Weyl group
  bool has_weyl() const { return weyl_ok_; }
  size_t order() const;
  Elt id() const { return 0; }
  Elt w0() const;
  int length(Elt w) const;
  const std::vector<int>& word(Elt w) const;  // canonical: lexicographically least reduced word, 1-based letters
  Elt inverse(Elt w) const;
  Elt mul(Elt a, Elt b) const;
  Elt rmul_simple(Elt w, int i) const;  // w s_i, i is 1-based
  Elt lmul_simple(int i, Elt w) const;  // s_i w
  Weight act(Elt w, const Weight& mu) const;
  int act_root(Elt w, int b) const;
  Elt reflection(int b) const;
  Elt from_word(const std::vector<int>& word) const;
  bool is_reduced(const std::vector<int>& word) const;
  bool leq(Elt u, Elt w) const;
  bool leq_subword(Elt u, Elt w) const;
  std::vector<Elt> elements() const;  // ordered by length then canonical word
  std::vector<int> reflection_covers_up(Elt u) const;  // positive roots beta with u < u s_beta, length +1
  std::vector<Elt> minimal_coset_reps(const std::set<int>& parabolic) const;
  Elt coset_min(Elt w, const std::set<int>& parabolic) const;
  std::vector<Elt> coset(Elt w, const std::set<int>& parabolic) const;  // w W_P
  std::set<int> stabilizer_simples(const Weight& mu) const;

  std::string elt_str(Elt w) const;  // "s2*s1" or "id"
  Elt parse_elt(const std::string& s) const;

 private:
  RootSystem() = default;
  void build_roots();
  void build_weyl(size_t cap);
  void require_weyl() const;

  std::string label_;
  char type_ = 'A';
  int rank_ = 0;
  std::vector<int> cartan_;
  int npos_ = 0;
  std::vector<Weight> roots_;
  std::vector<std::vector<int>> root_simple_;
  std::vector<std::vector<int>> coroot_;
  std::vector<int> simple_index_;
  std::unordered_map<Weight, int, WeightHash> root_lookup_;
  int theta_ = 0;
  int coxeter_ = 0;

  bool weyl_ok_ = false;
  size_t weyl_cap_ = 0;
  std::vector<int> len_;
  std::vector<std::vector<int>> words_;
  std::vector<int> mat_;  // r*r per element, weight action
  std::vector<Weight> rho_image_;
  std::unordered_map<Weight, int, WeightHash> by_rho_;
  std::vector<int> rmul_, lmul_, inv_;
  std::vector<int> root_perm_;  // num_roots per element
  std::vector<int> refl_elt_;
  std::vector<std::vector<uint64_t>> bruhat_;  // bruhat_[w] bitset of u <= w
};

using SystemPtr = std::shared_ptr<const RootSystem>;

std::vector<int> parse_word(const std::string& s);

}  // namespace chev
