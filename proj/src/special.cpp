#include "chev/special.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "chev/oracle.hpp"

namespace chev {

namespace {

CharPoly one(int r) { return CharPoly::constant(r, Scalar(1)); }
CharPoly E(const Weight& mu, const Scalar& s = Scalar(1)) { return CharPoly::exp(mu, s); }
// 1 + c v^k e^b
CharPoly binom(const Weight& b, int vpow, int64_t c) { return one_plus(Mono{b, vpow}, c, b.rank()); }

Weight simple(const RootSystem& R, int i) { return R.root(R.simple_root(i - 1)); }

// positive roots in the span of the given simple roots (1-based)
bool in_levi(const RootSystem& R, int b, const std::set<int>& P) {
  const auto& c = R.root_simple_coords(b);
  for (int i = 0; i < R.rank(); ++i)
    if (c[i] != 0 && !P.count(i + 1)) return false;
  return true;
}

void require_type_a(const RootSystem& R) {
  if (R.type() != 'A') throw std::invalid_argument("x_i = e^{eps_i} coordinates exist only in type A");
}

void require_dominant(const RootSystem& R, const Weight& lambda) {
  if (!R.is_dominant(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
}

Scalar poincare(const RootSystem& R, const std::set<int>& P) {
  Scalar s;
  for (Elt w : R.coset(R.id(), P)) s += Scalar::neg_y_pow(R.length(w));
  return s;
}

// sum_{w in W^lambda} w(e^lambda prod_{a in R+ \ R+_lambda} num(a) / (1 - e^{sign a}))
CharPoly orbit_sum(const RootSystem& R, const Weight& lambda, int sign,
                   const std::function<CharPoly(const Weight&)>& num) {
  const std::set<int> P = R.stabilizer_simples(lambda);
  CharPoly n = E(lambda), d = one(R.rank());
  for (int b = 0; b < R.num_positive(); ++b) {
    if (in_levi(R, b, P)) continue;
    n *= num(R.root(b));
    d *= binom(R.root(b) * sign, 0, -1);
  }
  CharFrac f = CharFrac::ratio(n, d);
  CharFrac total = CharFrac(CharPoly(R.rank()));
  for (Elt w : R.minimal_coset_reps(P)) total += f.weyl_act(R, w);
  return total.poly_or_throw("orbit sum");
}

}  // namespace

CharPoly dl_scalar(const RootSystem& sys, DLVariant v, int i, const CharPoly& f) {
  const Weight a = simple(sys, i);
  Elt s = sys.lmul_simple(i, sys.id());
  CharPoly twist = v == DLVariant::tilde_T ? binom(a, 2, -1) : binom(-a, 2, -1);  // 1 + y e^{+-a}
  CharPoly num = f.weyl_act(sys, s) * twist - f * one_plus_y();
  return num.div_exact_or_throw(binom(-a, 0, -1));
}

CharPoly dl_scalar_word(const RootSystem& sys, DLVariant v, Elt w, const CharPoly& f) {
  const auto& word = sys.word(w);
  CharPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = dl_scalar(sys, v, *it, g);
  return g;
}

CharPoly whittaker(const SystemPtr& sys, const Weight& lambda, Elt w) {
  if (!sys->is_antidominant(lambda))
    throw std::invalid_argument("Whittaker functions need an anti-dominant weight, got " + lambda.str());
  return dl_scalar_word(*sys, DLVariant::tilde_T, w, E(lambda));
}

CharPoly whittaker_chevalley(const SystemPtr& sys, const Weight& lambda, Elt w) {
  const RootSystem& R = *sys;
  if (!R.is_antidominant(lambda))
    throw std::invalid_argument("Whittaker functions need an anti-dominant weight, got " + lambda.str());
  CharPoly out(R.rank());
  const int lw = R.length(w);
  for (const auto& [u, c] : chevalley(sys, w, lambda - R.rho()).entries) {
    const int lu = R.length(u);
    out += c.v_inverse() * (Scalar::y_pow(lw - lu) * Scalar(lu % 2 ? -1 : 1));
  }
  return out * E(R.rho());
}

CharPoly whittaker_oracle(const SystemPtr& sys, const Weight& lambda, Elt w) {
  const RootSystem& R = *sys;
  const KOracle& K = oracle_for(sys);
  CharPoly ly_id = one(R.rank());
  for (int b = 0; b < R.num_positive(); ++b) ly_id *= binom(R.root(b), 2, -1);
  auto lyT = lambda_y_cotangent(sys);
  LocalizedClass F = line_bundle(sys, lambda) * K.mc(w);
  for (Elt x : R.elements()) F[x] = (F[x] * CharFrac(ly_id) / lyT[x]).reduced();
  return euler_char(F);
}

CharPoly big_R(const SystemPtr& sys, const Weight& lambda) {
  return euler_char(line_bundle(sys, lambda) * lambda_y_cotangent(sys));
}

CharPoly big_R_operator(const SystemPtr& sys, const Weight& lambda) {
  CharPoly out(sys->rank());
  for (Elt w : sys->elements()) out += dl_scalar_word(*sys, DLVariant::tilde_T_vee, w, E(lambda));
  return out;
}

CharPoly big_H(const SystemPtr& sys, const Weight& lambda, HRoute route) {
  const RootSystem& R = *sys;
  if (!R.is_dominant(lambda) && !R.is_dominant(-lambda))
    throw std::invalid_argument("H_lambda needs lambda or -lambda dominant, got " + lambda.str());
  const std::set<int> P = R.stabilizer_simples(lambda);
  switch (route) {
    case HRoute::localization:
      return orbit_sum(R, lambda, 1, [](const Weight& a) { return binom(a, 2, -1); });
    case HRoute::chevalley: {
      CharPoly out(R.rank());
      for (Elt w : R.minimal_coset_reps(P))
        for (const auto& [u, c] : chevalley(sys, w, lambda).entries) out += c * Scalar::neg_y_pow(R.length(u));
      return out;
    }
    case HRoute::quotient:
      return big_R(sys, lambda).div_exact_or_throw(CharPoly::constant(R.rank(), poincare(R, P)));
  }
  throw std::invalid_argument("unknown route");
}

std::string hl_method_name(HLMethod m) {
  switch (m) {
    case HLMethod::closed: return "closed";
    case HLMethod::chain_lenart: return "chain_lenart";
    case HLMethod::chain_new: return "chain_new";
  }
  return "?";
}

HLMethod parse_hl_method(const std::string& s) {
  for (HLMethod m : {HLMethod::closed, HLMethod::chain_lenart, HLMethod::chain_new})
    if (hl_method_name(m) == s) return m;
  throw std::invalid_argument("unknown Hall-Littlewood method '" + s + "'");
}

std::vector<HLTerm> hl_terms(const SystemPtr& sys, const Weight& lambda, HLMethod m) {
  const RootSystem& R = *sys;
  require_dominant(R, lambda);
  if (m == HLMethod::closed) throw std::invalid_argument("the closed form has no term table");
  const std::set<int> P = R.stabilizer_simples(lambda);
  int dim = 0;
  for (int b = 0; b < R.num_positive(); ++b) dim += in_levi(R, b, P) ? 0 : 1;
  LambdaChain c = chain_default(R, -lambda);
  std::vector<HLTerm> out;
  const bool lenart = m == HLMethod::chain_lenart;
  for (Elt w : R.minimal_coset_reps(P)) {
    const int lw = R.length(w);
    for_each_chain_path(R, c, w, lenart ? PathRule::greater : PathRule::less, [&](const std::vector<int>& J, Elt u) {
      auto cr = chain_reflections(R, c, J);
      const int k = static_cast<int>(J.size());
      const int lu = R.length(u);
      const int e2 = lenart ? lw + lu - k : 2 * dim - lw - lu - k;
      if (e2 % 2 != 0 || e2 < 0) throw std::logic_error("non-integral power of t in a chain term");
      Weight mu = R.act(lenart ? w : u, cr.rhat_lt.apply(R, lambda));
      out.push_back({w, J, u, E(mu, Scalar::q_pow(e2 / 2) * one_minus_q().pow(k))});
    });
  }
  return out;
}

CharPoly hall_littlewood(const SystemPtr& sys, const Weight& lambda, HLMethod m) {
  const RootSystem& R = *sys;
  require_dominant(R, lambda);
  if (m == HLMethod::closed)
    return orbit_sum(R, lambda, -1, [](const Weight& a) { return binom(-a, 2, -1); });  // 1 - t x^{-a}
  CharPoly out(R.rank());
  for (const auto& t : hl_terms(sys, lambda, m)) out += t.term;
  return out;
}

CharPoly hall_littlewood_from_H(const SystemPtr& sys, const Weight& lambda, int which) {
  const RootSystem& R = *sys;
  require_dominant(R, lambda);
  // with y = -v^2 and t = v^2, y -> -t leaves v alone and y -> -1/t inverts it
  if (which == 1) return big_H(sys, -lambda).star();
  if (which != 2) throw std::invalid_argument("substitution must be 1 or 2");
  const std::set<int> P = R.stabilizer_simples(lambda);
  int dim = 0;
  for (int b = 0; b < R.num_positive(); ++b) dim += in_levi(R, b, P) ? 0 : 1;
  return (big_H(sys, lambda) * Scalar::neg_y_pow(-dim)).v_inverse();
}

int weight_degree(const RootSystem& sys, const Weight& lambda) {
  require_type_a(sys);
  int d = 0;
  for (int i = 0; i < sys.rank(); ++i) d += (i + 1) * lambda[i];
  return d;
}

CharPoly to_gl(const RootSystem& sys, const CharPoly& p, int degree) {
  require_type_a(sys);
  const int n = sys.rank() + 1;
  if (n > kMaxRank) throw std::invalid_argument("too many variables for GL coordinates");
  return p.map_weights([&](const Weight& mu) {
    // w_i = eps_1 + ... + eps_i, modulo eps_1 + ... + eps_n
    Weight e(n);
    int sum = 0;
    for (int k = n - 2; k >= 0; --k) {
      e[k] = e[k + 1] + mu[k];
      sum += e[k];
    }
    if ((degree - sum) % n != 0)
      throw std::invalid_argument("weight " + mu.str() + " has no GL lift of degree " + std::to_string(degree));
    const int s = (degree - sum) / n;
    for (int k = 0; k < n; ++k) e[k] += s;
    return e;
  });
}

CharPoly schur_gl(int n, const std::vector<int>& partition) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("bad number of variables");
  std::vector<int> p(partition);
  p.resize(n, 0);
  if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("not a partition");
  const int low = p.back();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  CharPoly num(n), den(n);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Weight a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[perm[i]] = p[i] - low + (n - 1 - i);
      b[perm[i]] = n - 1 - i;
    }
    num += E(a, Scalar(inv % 2 ? -1 : 1));
    den += E(b, Scalar(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Weight shift(n);
  for (int i = 0; i < n; ++i) shift[i] = low;
  return num.div_exact_or_throw(den).shift(Mono{shift, 0});
}

std::vector<std::pair<std::vector<int>, Scalar>> schur_expand(const CharPoly& gl) {
  std::vector<std::pair<std::vector<int>, Scalar>> out;
  CharPoly rest = gl;
  const int n = gl.rank();
  while (!rest.is_zero()) {
    auto bw = rest.by_weight();
    const auto& [mu, c] = *bw.rbegin();
    std::vector<int> p = mu.to_vector();
    if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("polynomial is not symmetric");
    rest -= schur_gl(n, p) * c;
    out.emplace_back(p, c);
  }
  return out;
}

std::string schur_text(const std::vector<std::pair<std::vector<int>, Scalar>>& e, Var var) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : e) {
    bool wide = std::any_of(p.begin(), p.end(), [](int x) { return x < 0 || x > 9; });
    std::string s = "s";
    if (wide) s += "{";
    bool first = true;
    for (int x : p) {
      if (x == 0 && !wide) continue;
      if (wide && !first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    if (wide) s += "}";
    if (p.empty() || s == "s") s = "s0";
    std::string k = c.str(var);
    std::string term;
    if (k == "1") term = s;
    else if (k == "-1") term = "-" + s;
    else if (c.terms().size() > 1) term = "(" + k + ")*" + s;
    else term = k + "*" + s;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

std::string gl_text(const CharPoly& gl, Var var) {
  if (gl.is_zero()) return "0";
  auto bw = gl.by_weight();
  std::string out;
  for (auto it = bw.rbegin(); it != bw.rend(); ++it) {
    const auto& [mu, c] = *it;
    std::string m;
    for (int i = 0; i < mu.rank(); ++i) {
      if (mu[i] == 0) continue;
      if (!m.empty()) m += "*";
      m += "x" + std::to_string(i + 1);
      if (mu[i] != 1) m += "^" + std::to_string(mu[i]);
    }
    std::string k = c.str(var);
    std::string term;
    if (m.empty()) term = c.terms().size() > 1 ? "(" + k + ")" : k;
    else if (k == "1") term = m;
    else if (k == "-1") term = "-" + m;
    else if (c.terms().size() > 1) term = "(" + k + ")*" + m;
    else term = k + "*" + m;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

}  // namespace chev
