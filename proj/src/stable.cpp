#include "chev/stable.hpp"

#include <stdexcept>

#include "chev/render.hpp"

namespace chev {

namespace {

CharPoly one(int r) { return CharPoly::constant(r, Scalar(1)); }
CharPoly one_minus_exp(const Weight& b, int vpow = 0) { return one_plus(Mono{b, vpow}, -1, b.rank()); }

// q^{-1/2} - q^{1/2}
Scalar gap() { return Scalar::mono(-1) - Scalar::mono(1); }

void add_to(StabExpansion& e, Elt w, const CharPoly& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

// Ascending paths u < u r_{j1} < u r_{j1} r_{j2} < ... with j1 < j2 < ...
void ascend(const RootSystem& R, const LambdaChain& c, Elt x, int pos, std::vector<int>& J,
            const std::function<void(const std::vector<int>&, Elt)>& f) {
  f(J, x);
  for (int j = pos; j < c.length(); ++j) {
    int b = R.abs_root(c.betas[j]);
    if (!R.is_positive(R.act_root(x, b))) continue;
    J.push_back(j);
    ascend(R, c, R.mul(x, R.reflection(b)), j + 1, J, f);
    J.pop_back();
  }
}

}  // namespace

LocalizedClass stab_class(const SystemPtr& sys, Elt w) {
  const RootSystem& R = *sys;
  const KOracle& K = oracle_for(sys);
  const int N = R.dim_flag();
  Scalar pre = Scalar::mono(2 * N - R.length(w), N % 2 ? -1 : 1);
  LocalizedClass out(sys);
  Weight two_rho = R.rho() * 2;
  for (Elt x : R.elements()) {
    const CharFrac& m = K.mc_opposite(w)[x];
    if (m.is_zero()) continue;
    // y = -1/q: with y = -v^2 this is v = q^{-1/2}, i.e. invert v and read it as q^{1/2}
    out[x] = m.v_inverse() * CharFrac(CharPoly::exp(-R.act(x, two_rho), pre));
  }
  return out;
}

StabExpansion stab_expand(const SystemPtr& sys, const LocalizedClass& F) {
  const RootSystem& R = *sys;
  std::vector<LocalizedClass> stabs;
  for (Elt w : R.elements()) stabs.push_back(stab_class(sys, w));
  StabExpansion out;
  LocalizedClass rest = F;
  // stab_A(w) is supported on x >= w, so peel off from the bottom
  for (Elt w : R.elements()) {
    const CharFrac& top = rest[w];
    if (top.reduced().is_zero()) continue;
    CharPoly c = (top / stabs[w][w]).poly_or_throw("stable basis coefficient");
    for (Elt x : R.elements())
      if (!stabs[w][x].is_zero()) rest[x] = (rest[x] - stabs[w][x] * CharFrac(c)).reduced();
    out.emplace(w, c);
  }
  return out;
}

LocalizedClass stab_combination(const SystemPtr& sys, const StabExpansion& e) {
  LocalizedClass out(sys);
  for (const auto& [w, c] : e) out = out + stab_class(sys, w) * CharFrac(c);
  return out;
}

StabExpansion chevalley_stab(const SystemPtr& sys, Elt u, const Weight& lambda, StabRoute route) {
  const RootSystem& R = *sys;
  StabExpansion out;
  switch (route) {
    case StabRoute::chevalley:
      for (Elt w : R.elements()) {
        if (!R.leq(u, w)) continue;
        CharPoly c = chevalley(sys, w, -lambda).at(u);
        if (c.is_zero()) continue;
        // (C)^vee at y = -1/q, with v read as q^{1/2}: the two inversions of v cancel
        out.emplace(w, c.star() * Scalar::mono(R.length(u) - R.length(w)));
      }
      break;
    case StabRoute::chain: {
      LambdaChain c = chain_default(R, lambda);
      std::vector<int> J;
      ascend(R, c, u, 0, J, [&](const std::vector<int>& js, Elt w) {
        ChainReflections cr = chain_reflections(R, c, js);
        Weight mu = R.act(w, cr.rtilde_gt.apply(R, lambda));
        Scalar s = gap().pow(static_cast<int>(js.size())) * Scalar(cr.n_J % 2 ? -1 : 1);
        add_to(out, w, CharPoly::exp(mu, s));
      });
      break;
    }
    case StabRoute::oracle:
      out = stab_expand(sys, line_bundle(sys, lambda) * stab_class(sys, u));
      break;
  }
  return out;
}

StabExpansion stab_translate(const SystemPtr& sys, Elt w, const Weight& lambda, StabRoute route) {
  StabExpansion e = chevalley_stab(sys, w, lambda, route);
  CharPoly shift = CharPoly::exp(-sys->act(w, lambda));
  for (auto& [x, c] : e) c = c * shift;
  return e;
}

std::vector<StabExpansion> wall_cross(const SystemPtr& sys, const std::vector<StabExpansion>& current, int root,
                                      int64_t level, int eps) {
  const RootSystem& R = *sys;
  Elt s = R.reflection(root);
  std::vector<StabExpansion> next = current;
  Scalar k = (Scalar::mono(1) - Scalar::mono(-1)) * Scalar(eps > 0 ? -1 : 1);
  for (Elt w : R.elements()) {
    Elt ws = R.mul(w, s);
    if (R.length(ws) < R.length(w)) continue;
    CharPoly f = CharPoly::exp(-(R.act(w, R.root(root)) * static_cast<int>(level)), k);
    for (const auto& [x, c] : current[ws]) add_to(next[w], x, c * f);
  }
  return next;
}

std::vector<StabExpansion> stab_by_wall_crossing(const SystemPtr& sys, const Weight& lambda) {
  const RootSystem& R = *sys;
  std::vector<StabExpansion> cur(R.order());
  for (Elt w : R.elements()) cur[w] = {{w, one(R.rank())}};
  for (const auto& x : walk_crossings(R, v_minus_lambda(R, -lambda)))
    cur = wall_cross(sys, cur, x.h.root, x.h.level, x.eps);
  return cur;
}

LocalizedClass hecke_T_localized(int i, const LocalizedClass& F) {
  const RootSystem& R = *F.sys;
  Elt s = R.lmul_simple(i, R.id());
  Weight a = R.root(R.simple_root(i - 1));
  LocalizedClass out(F.sys);
  for (Elt x : R.elements()) {
    Weight xa = R.act(x, a);
    Elt xs = R.mul(x, s);
    // the fibre P_i/B through e_x has cotangent weight x(alpha_i); the conormal directions
    // of Y_i contribute 1 - q e^{-x alpha_i}
    CharPoly k = one_minus_exp(-xa, 2);
    CharFrac here = F[x] * CharFrac(CharPoly::exp(xa)) / CharFrac(one_minus_exp(xa));
    CharFrac there = F[xs] * CharFrac(CharPoly::exp(-xa)) / CharFrac(one_minus_exp(-xa));
    out[x] = (-F[x] - CharFrac(k) * (here + there)).reduced();
  }
  return out;
}

StabExpansion hecke_T_on_stab(const SystemPtr& sys, int i, Elt w) {
  const RootSystem& R = *sys;
  Elt ws = R.rmul_simple(w, i);
  const int r = R.rank();
  StabExpansion out;
  out.emplace(ws, CharPoly::constant(r, Scalar::mono(1)));
  if (R.length(ws) < R.length(w)) out.emplace(w, CharPoly::constant(r, q_minus_one()));
  return out;
}

std::string stab_text(const RootSystem& sys, const StabExpansion& e) {
  std::string s;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (!s.empty()) s += "\n + ";
    s += "(" + poly_text(it->second, Var::qhalf) + ") stab(" + sys.elt_str(it->first) + ")";
  }
  return s.empty() ? "0" : s;
}

}  // namespace chev
