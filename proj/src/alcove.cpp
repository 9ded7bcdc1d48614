#include "chev/alcove.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chev {

Hyperplane make_hyperplane(const RootSystem& sys, int root, int64_t level) {
  if (sys.is_positive(root)) return {root, level};
  return {sys.neg(root), -level};
}

AffineMap AffineMap::then_after(const RootSystem& sys, const AffineMap& inner) const {
  return {sys.mul(lin, inner.lin), sys.act(lin, inner.t) + t};
}

AffineMap AffineMap::reflection(const RootSystem& sys, const Hyperplane& h) {
  return {sys.reflection(h.root), sys.root(h.root) * static_cast<int>(h.level)};
}

Weight affine_reflect(const RootSystem& sys, const Hyperplane& h, const Weight& mu) {
  return sys.affine_reflect(h.root, h.level, mu);
}

Hyperplane LambdaChain::hyperplane(const RootSystem& sys, int j) const {
  return make_hyperplane(sys, sys.neg(betas[j]), levels[j]);
}

Hyperplane LambdaChain::shifted_hyperplane(const RootSystem& sys, int j) const {
  return make_hyperplane(sys, betas[j], sys.pair(lambda, betas[j]) - levels[j]);
}

namespace {

// Point of A scaled by h is rho; the alcove condition in scaled units.
bool in_alcove_scaled(const RootSystem& sys, const Weight& p) {
  const int h = sys.coxeter_number();
  for (int i = 0; i < sys.rank(); ++i) {
    if (p[i] == 0) throw std::logic_error("interior point landed on a wall");
    if (p[i] < 0) return false;
  }
  int64_t t = sys.pair(p, sys.theta());
  if (t == h) throw std::logic_error("interior point landed on a wall");
  return t < h;
}

struct Wall {
  int root;
  int64_t level;
};

Wall wall_of(const RootSystem& sys, int i) {
  if (i == 0) return {sys.neg(sys.theta()), -1};
  return {sys.simple_root(i - 1), 0};
}

AffineMap simple_affine(const RootSystem& sys, int i) {
  if (i == 0) return {sys.reflection(sys.theta()), sys.root(sys.theta())};
  return {sys.reflection(sys.simple_root(i - 1)), sys.zero()};
}

// image of wall i under v, as (root, level) with the root carried along
Wall wall_image(const RootSystem& sys, const AffineMap& v, int i) {
  Wall w = wall_of(sys, i);
  int b = sys.act_root(v.lin, w.root);
  return {b, w.level + sys.pair(v.t, b)};
}

bool maps_to_target(const RootSystem& sys, const AffineMap& v, const Weight& lambda) {
  const int h = sys.coxeter_number();
  Weight p = sys.act(v.lin, sys.rho()) + v.t * h + lambda * h;
  return in_alcove_scaled(sys, p);
}

}  // namespace

int64_t alcove_distance(const RootSystem& sys, const Weight& lambda) {
  int64_t s = 0;
  for (int b = 0; b < sys.num_positive(); ++b) s += std::llabs(sys.pair(lambda, b));
  return s;
}

std::vector<int> v_minus_lambda(const RootSystem& sys, const Weight& lambda) {
  const int h = sys.coxeter_number();
  const int r = sys.rank();
  Weight p = sys.rho() - lambda * h;
  std::vector<int> word;
  while (!in_alcove_scaled(sys, p)) {
    int step = -1;
    for (int i = 0; i < r; ++i)
      if (p[i] < 0) {
        step = i + 1;
        break;
      }
    if (step > 0) {
      p = sys.reflect(sys.simple_root(step - 1), p);
    } else {
      p = sys.reflect(sys.theta(), p) + sys.root(sys.theta()) * h;
      step = 0;
    }
    word.push_back(step);
  }
  return word;
}

LambdaChain chain_from_word(const RootSystem& sys, const Weight& lambda, const std::vector<int>& word) {
  LambdaChain c;
  c.lambda = lambda;
  c.word = word;
  AffineMap v = AffineMap::identity(sys);
  for (int i : word) {
    if (i < 0 || i > sys.rank()) throw std::invalid_argument("affine letter out of range: " + std::to_string(i));
    Wall img = wall_image(sys, v, i);
    c.betas.push_back(img.root);
    c.levels.push_back(-img.level);
    v = v.then_after(sys, simple_affine(sys, i));
  }
  if (!maps_to_target(sys, v, lambda))
    throw std::invalid_argument("word " + affine_word_str(word) + " does not map the fundamental alcove to A - (" +
                                lambda.str() + ")");
  c.reduced = static_cast<int64_t>(word.size()) == alcove_distance(sys, lambda);
  return c;
}

std::vector<int> word_of_chain(const RootSystem& sys, const Weight& lambda, const std::vector<int>& betas,
                               const std::vector<int64_t>& levels) {
  AffineMap v = AffineMap::identity(sys);
  std::vector<int> word;
  for (size_t j = 0; j < betas.size(); ++j) {
    Hyperplane target = make_hyperplane(sys, sys.neg(betas[j]), levels[j]);
    int found = -1;
    for (int i = 0; i <= sys.rank(); ++i) {
      Wall img = wall_image(sys, v, i);
      if (make_hyperplane(sys, img.root, img.level) == target) {
        if (img.root != betas[j]) throw std::invalid_argument("chain crosses a wall in the wrong direction");
        found = i;
        break;
      }
    }
    if (found < 0) throw std::invalid_argument("chain hyperplane is not a wall of the current alcove");
    word.push_back(found);
    v = v.then_after(sys, simple_affine(sys, found));
  }
  if (!maps_to_target(sys, v, lambda)) throw std::invalid_argument("chain does not end at A - lambda");
  return word;
}

LambdaChain chain_lex(const RootSystem& sys, const Weight& lambda) {
  struct Entry {
    int root;
    int64_t k;
    int64_t n;  // <lambda, alpha^vee>
  };
  std::vector<Entry> es;
  for (int b = 0; b < sys.num_positive(); ++b) {
    int64_t n = sys.pair(lambda, b);
    if (n > 0)
      for (int64_t k = 0; k > -n; --k) es.push_back({b, k, n});
    else if (n < 0)
      for (int64_t k = 1; k <= -n; ++k) es.push_back({b, k, n});
  }
  // height vector (1/n)(-k, <w_1, a^vee>, ..., <w_r, a^vee>) compared lexicographically
  auto less = [&](const Entry& a, const Entry& b) {
    const auto& ca = sys.coroot_coords(a.root);
    const auto& cb = sys.coroot_coords(b.root);
    for (int i = -1; i < sys.rank(); ++i) {
      int64_t xa = i < 0 ? -a.k : ca[i];
      int64_t xb = i < 0 ? -b.k : cb[i];
      // xa/a.n vs xb/b.n
      __int128 l = static_cast<__int128>(xa) * b.n;
      __int128 r = static_cast<__int128>(xb) * a.n;
      bool flip = (a.n > 0) != (b.n > 0);
      if (l != r) return flip ? l > r : l < r;
    }
    return false;
  };
  std::sort(es.begin(), es.end(), less);
  for (size_t i = 1; i < es.size(); ++i)
    if (!less(es[i - 1], es[i])) throw std::logic_error("height function not injective");
  LambdaChain c;
  c.lambda = lambda;
  for (const auto& e : es) {
    if (e.k <= 0) {
      c.betas.push_back(e.root);
      c.levels.push_back(-e.k);
    } else {
      c.betas.push_back(sys.neg(e.root));
      c.levels.push_back(e.k);
    }
  }
  c.word = word_of_chain(sys, lambda, c.betas, c.levels);
  c.reduced = true;
  return c;
}

LambdaChain chain_default(const RootSystem& sys, const Weight& lambda) { return chain_lex(sys, lambda); }

LambdaChain reverse_chain(const RootSystem& sys, const LambdaChain& c) {
  LambdaChain r;
  r.lambda = -c.lambda;
  const int l = c.length();
  for (int j = 0; j < l; ++j) {
    int src = l - 1 - j;
    int b = c.betas[src];
    r.betas.push_back(sys.neg(b));
    r.levels.push_back(sys.pair(c.lambda, b) - c.levels[src]);
  }
  r.word = word_of_chain(sys, r.lambda, r.betas, r.levels);
  r.reduced = c.reduced;
  return r;
}

bool chain_reaches(const RootSystem& sys, const LambdaChain& c) {
  const int h = sys.coxeter_number();
  Weight p = sys.rho();
  for (int j = 0; j < c.length(); ++j) {
    Hyperplane hp = c.hyperplane(sys, j);
    p = sys.reflect(hp.root, p) + sys.root(hp.root) * static_cast<int>(hp.level * h);
  }
  return in_alcove_scaled(sys, p + c.lambda * h);
}

ChainReflections chain_reflections(const RootSystem& sys, const LambdaChain& c, const std::vector<int>& J) {
  ChainReflections out;
  out.r_J = sys.id();
  out.rhat_lt = AffineMap::identity(sys);
  out.rtilde_gt = AffineMap::identity(sys);
  for (int j : J) {
    if (j < 0 || j >= c.length()) throw std::invalid_argument("chain position out of range");
    int b = c.betas[j];
    out.r_J = sys.mul(out.r_J, sys.reflection(b));
    out.rhat_lt = out.rhat_lt.then_after(sys, AffineMap::reflection(sys, c.hyperplane(sys, j)));
    out.rtilde_gt = AffineMap::reflection(sys, c.shifted_hyperplane(sys, j)).then_after(sys, out.rtilde_gt);
    if (!sys.is_positive(b)) ++out.n_J;
  }
  return out;
}

namespace {

void chain_dfs(const RootSystem& sys, const std::vector<int>& roots, Elt x, int pos, PathRule rule, std::vector<int>& J,
               const std::function<void(const std::vector<int>&, Elt)>& f, Elt target) {
  if (target < 0 || x == target) {
    if (rule == PathRule::greater) {
      f(J, x);
    } else {
      std::vector<int> s(J.rbegin(), J.rend());
      f(s, x);
    }
  }
  const int l = static_cast<int>(roots.size());
  const int lx = sys.length(x);
  if (target >= 0 && lx <= sys.length(target)) return;
  if (rule == PathRule::greater) {
    for (int j = pos; j < l; ++j) {
      int b = sys.abs_root(roots[j]);
      if (sys.is_positive(sys.act_root(x, b))) continue;
      Elt y = sys.mul(x, sys.reflection(b));
      if (target >= 0 && !sys.leq(target, y)) continue;
      J.push_back(j);
      chain_dfs(sys, roots, y, j + 1, rule, J, f, target);
      J.pop_back();
    }
  } else {
    for (int j = pos - 1; j >= 0; --j) {
      int b = sys.abs_root(roots[j]);
      if (sys.is_positive(sys.act_root(x, b))) continue;
      Elt y = sys.mul(x, sys.reflection(b));
      if (target >= 0 && !sys.leq(target, y)) continue;
      J.push_back(j);
      chain_dfs(sys, roots, y, j, rule, J, f, target);
      J.pop_back();
    }
  }
}

}  // namespace

void for_each_reflection_path(const RootSystem& sys, const std::vector<int>& roots, Elt w, PathRule rule,
                              const std::function<void(const std::vector<int>&, Elt)>& f, Elt target) {
  if (target >= 0 && !sys.leq(target, w)) return;
  std::vector<int> J;
  chain_dfs(sys, roots, w, rule == PathRule::greater ? 0 : static_cast<int>(roots.size()), rule, J, f, target);
}

void for_each_chain_path(const RootSystem& sys, const LambdaChain& c, Elt w, PathRule rule,
                         const std::function<void(const std::vector<int>&, Elt)>& f, Elt target) {
  for_each_reflection_path(sys, c.betas, w, rule, f, target);
}

std::vector<Crossing> walk_crossings(const RootSystem& sys, const std::vector<int>& word) {
  const int h = sys.coxeter_number();
  std::vector<Crossing> out;
  AffineMap v = AffineMap::identity(sys);
  Weight prev = sys.rho();
  for (int i : word) {
    if (i < 0 || i > sys.rank()) throw std::invalid_argument("affine letter out of range");
    Wall wl = wall_image(sys, v, i);
    Hyperplane hp = make_hyperplane(sys, wl.root, wl.level);
    v = v.then_after(sys, simple_affine(sys, i));
    Weight cur = sys.act(v.lin, sys.rho()) + v.t * h;
    int64_t a = sys.pair(prev, hp.root) - h * hp.level;
    int64_t b = sys.pair(cur, hp.root) - h * hp.level;
    if (a == 0 || b == 0 || (a > 0) == (b > 0)) throw std::logic_error("walk step does not cross its wall");
    out.push_back({hp, b > 0 ? 1 : -1});
    prev = cur;
  }
  return out;
}

std::string affine_word_str(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::string s;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) s += '*';
    s += 's' + std::to_string(word[k]);
  }
  return s;
}

std::string root_str(const RootSystem& sys, int b) {
  const auto& c = sys.root_simple_coords(b);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < sys.rank(); ++i) {
    int x = c[i];
    if (x == 0) continue;
    if (x < 0) os << '-';
    else if (!first) os << '+';
    int a = x < 0 ? -x : x;
    if (a != 1) os << a;
    os << 'a' << (i + 1);
    first = false;
  }
  return os.str();
}

std::string hyperplane_str(const RootSystem& sys, const Hyperplane& h) {
  return "H(" + root_str(sys, h.root) + "," + std::to_string(h.level) + ")";
}

}  // namespace chev
