#include "chev/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

Scalar q_inv() { return Scalar::q_pow(-1); }

// T_s T_v in the finite Hecke algebra, s = s_i on the left
void left_T_finite(const RootSystem& sys, int i, Elt v, const Scalar& c, std::map<Elt, Scalar>& out) {
  Elt sv = sys.lmul_simple(i, v);
  if (sys.length(sv) > sys.length(v)) {
    out[sv] += c;
  } else {
    out[v] += c * q_minus_one();
    out[sv] += c * Scalar::q();
  }
}

void right_T_finite(const RootSystem& sys, Elt v, int i, const Scalar& c, std::map<Elt, Scalar>& out) {
  Elt vs = sys.rmul_simple(v, i);
  if (sys.length(vs) > sys.length(v)) {
    out[vs] += c;
  } else {
    out[v] += c * q_minus_one();
    out[vs] += c * Scalar::q();
  }
}

void prune(std::map<Elt, Scalar>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) it = m.erase(it);
    else ++it;
  }
}

}  // namespace

void HeckeElement::add(Elt w, const Weight& mu, const Scalar& c) {
  if (c.is_zero()) return;
  HKey k{w, mu};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

HeckeElement HeckeElement::X(SystemPtr sys, const Weight& mu, const Scalar& c) {
  HeckeElement h(sys);
  h.add(sys->id(), mu, c);
  return h;
}

HeckeElement HeckeElement::T(SystemPtr sys, Elt w, const Scalar& c) {
  HeckeElement h(sys);
  h.add(w, sys->zero(), c);
  return h;
}

HeckeElement HeckeElement::T_simple(SystemPtr sys, int i) {
  Elt s = sys->rmul_simple(sys->id(), i);
  return T(sys, s);
}

HeckeElement HeckeElement::T_simple_inv(SystemPtr sys, int i) {
  Elt s = sys->rmul_simple(sys->id(), i);
  HeckeElement h(sys);
  h.add(s, sys->zero(), q_inv());
  h.add(sys->id(), sys->zero(), q_inv() - Scalar(1));
  return h;
}

HeckeElement HeckeElement::T_inv(SystemPtr sys, Elt w) {
  // T_w = T_{i1} ... T_{ik}, inverse = T_{ik}^-1 ... T_{i1}^-1
  HeckeElement h = T(sys, sys->id());
  for (int i : sys->word(w)) h = h.lmul_T_inv(i);
  return h;
}

HeckeElement HeckeElement::E(SystemPtr sys, Elt u) {
  // T_{u^-1}^-1 = T_{i1}^-1 ... T_{ik}^-1 for u = s_{i1} ... s_{ik}
  HeckeElement h = T(sys, sys->id());
  for (int i : sys->word(u)) h = h.rmul_T_inv(i);
  return h;
}

Scalar HeckeElement::coeff(Elt w, const Weight& mu) const {
  auto it = t_.find(HKey{w, mu});
  return it == t_.end() ? Scalar() : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  r += o;
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (!sys_) sys_ = o.sys_;
  for (const auto& [k, c] : o.t_) add(k.w, k.mu, c);
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r(sys_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + (-o); }

HeckeElement HeckeElement::operator*(const Scalar& s) const {
  HeckeElement r(sys_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
  return r;
}

HeckeElement HeckeElement::lmul_X(const Weight& mu) const {
  HeckeElement r(sys_);
  for (const auto& [k, c] : t_) r.t_.emplace(HKey{k.w, k.mu + mu}, c);
  return r;
}

std::vector<std::pair<Weight, int>> bernstein_quotient(const RootSystem& sys, int i, const Weight& mu) {
  const int b = sys.simple_root(i - 1);
  const Weight& a = sys.root(b);
  const int64_t n = sys.pair(mu, b);
  std::vector<std::pair<Weight, int>> out;
  if (n > 0) {
    Weight x = mu;
    for (int64_t k = 0; k < n; ++k) {
      out.push_back({x, -1});
      x -= a;
    }
  } else if (n < 0) {
    Weight x = mu;
    for (int64_t k = 0; k < -n; ++k) {
      x += a;
      out.push_back({x, 1});
    }
  }
  return out;
}

HeckeElement HeckeElement::lmul_T(int i) const {
  // T_s X^mu = X^{s mu} T_s + (1-q) (X^{s mu} - X^mu)/(1 - X^{-alpha})
  const RootSystem& sys = *sys_;
  HeckeElement r(sys_);
  const int b = sys.simple_root(i - 1);
  for (const auto& [k, c] : t_) {
    Weight smu = sys.reflect(b, k.mu);
    std::map<Elt, Scalar> tv;
    left_T_finite(sys, i, k.w, c, tv);
    for (const auto& [v, cv] : tv) r.add(v, smu, cv);
    Scalar cq = c * one_minus_q();
    for (const auto& [nu, sg] : bernstein_quotient(sys, i, k.mu)) r.add(k.w, nu, cq * Scalar(sg));
  }
  return r;
}

HeckeElement HeckeElement::lmul_T_inv(int i) const { return lmul_T(i) * q_inv() + *this * (q_inv() - Scalar(1)); }

HeckeElement HeckeElement::rmul_T(int i) const {
  HeckeElement r(sys_);
  for (const auto& [k, c] : t_) {
    std::map<Elt, Scalar> tv;
    right_T_finite(*sys_, k.w, i, c, tv);
    for (const auto& [v, cv] : tv) r.add(v, k.mu, cv);
  }
  return r;
}

HeckeElement HeckeElement::rmul_T_inv(int i) const { return rmul_T(i) * q_inv() + *this * (q_inv() - Scalar(1)); }

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  if (!sys_) return HeckeElement(o.sys_);
  const RootSystem& sys = *sys_;
  HeckeElement r(sys_);
  // group the right factor by its T part so each T_w X^mu is rewritten once
  for (const auto& [kb, cb] : o.t_) {
    HeckeElement tail = X(sys_, kb.mu, cb);
    for (const auto& [ka, ca] : t_) {
      HeckeElement m = tail;
      const auto& wd = sys.word(ka.w);
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) m = m.lmul_T(*it);
      m = m.lmul_X(ka.mu) * ca;
      for (int i : sys.word(kb.w)) m = m.rmul_T(i);
      r += m;
    }
  }
  return r;
}

std::map<Elt, Scalar> e_basis_expansion(const RootSystem& sys, Elt u) {
  std::map<Elt, Scalar> cur{{sys.id(), Scalar(1)}};
  for (int i : sys.word(u)) {
    std::map<Elt, Scalar> nxt;
    for (const auto& [v, c] : cur) {
      right_T_finite(sys, v, i, c * q_inv(), nxt);
      nxt[v] += c * (q_inv() - Scalar(1));
    }
    prune(nxt);
    cur = std::move(nxt);
  }
  return cur;
}

HeckeElement HeckeElement::theta() const {
  // Theta(X^mu T_v) = X^{-mu} (-q)^{l(v)} E(v)
  const RootSystem& sys = *sys_;
  HeckeElement r(sys_);
  std::map<Elt, std::map<Elt, Scalar>> cache;
  for (const auto& [k, c] : t_) {
    auto it = cache.find(k.w);
    if (it == cache.end()) it = cache.emplace(k.w, e_basis_expansion(sys, k.w)).first;
    Scalar f = c * Scalar::q_pow(sys.length(k.w)) * Scalar((sys.length(k.w) % 2) ? -1 : 1);
    for (const auto& [v, cv] : it->second) r.add(v, -k.mu, f * cv);
  }
  return r;
}

std::string HeckeElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str(Var::q) << ")*X^{" << k.mu.str() << "}*T[" << sys_->elt_str(k.w) << "]";
    first = false;
  }
  return os.str();
}

HeckeElement random_hecke(const SystemPtr& sys, std::mt19937_64& rng, int terms, int bound) {
  std::uniform_int_distribution<int> co(-bound, bound);
  std::uniform_int_distribution<size_t> el(0, sys->order() - 1);
  std::uniform_int_distribution<int> qp(-2, 2), cf(-3, 3);
  HeckeElement h(sys);
  for (int k = 0; k < terms; ++k) {
    Weight mu = sys->zero();
    for (int i = 0; i < sys->rank(); ++i) mu[i] = co(rng);
    int c = cf(rng);
    if (c == 0) c = 1;
    h += HeckeElement::X(sys, mu, Scalar::q_pow(qp(rng)) * Scalar(c)) * HeckeElement::T(sys, static_cast<Elt>(el(rng)));
  }
  return h;
}

std::map<HKey, Scalar> to_e_basis(const HeckeElement& a) {
  const RootSystem& sys = *a.sys();
  // per weight, peel off E(v) from the longest T_v down; E(v) = q^{-l(v)} T_v + lower
  std::map<Weight, std::map<Elt, Scalar>> by_mu;
  for (const auto& [k, c] : a.terms()) by_mu[k.mu][k.w] = c;
  std::map<Elt, std::map<Elt, Scalar>> cache;
  std::map<HKey, Scalar> out;
  for (auto& [mu, f] : by_mu) {
    while (!f.empty()) {
      Elt top = f.begin()->first;
      for (const auto& [v, c] : f)
        if (sys.length(v) > sys.length(top)) top = v;
      Scalar a_top = f[top] * Scalar::q_pow(sys.length(top));
      auto it = cache.find(top);
      if (it == cache.end()) it = cache.emplace(top, e_basis_expansion(sys, top)).first;
      for (const auto& [v, cv] : it->second) f[v] -= a_top * cv;
      prune(f);
      if (f.count(top)) throw std::logic_error("triangular solve failed to clear the leading term");
      out[HKey{top, mu}] += a_top;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

Coeffs transition_direct(const SystemPtr& sys, Elt w, const Weight& lambda, DirectRoute route) {
  const RootSystem& R = *sys;
  const auto& wd = R.word(w);
  if (route == DirectRoute::inverse) {
    HeckeElement h = HeckeElement::X(sys, lambda);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) h = h.lmul_T_inv(*it);
    return to_e_basis(h);
  }
  // T_w X^{-lambda} = sum (-q)^{l(w)-l(u)} c_{u,mu}^{w,lambda} X^{-mu} T_u
  HeckeElement h = HeckeElement::X(sys, -lambda);
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) h = h.lmul_T(*it);
  Coeffs out;
  for (const auto& [k, c] : h.terms()) {
    int d = R.length(k.w) - R.length(w);
    Scalar f = Scalar::q_pow(d) * Scalar((d % 2) ? -1 : 1);
    out[HKey{k.w, -k.mu}] = c * f;
  }
  return out;
}

std::vector<TransitionTerm> transition_terms(const RootSystem& sys, Elt w, const LambdaChain& c, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::vector<TransitionTerm> out;
  const int lw = sys.length(w);
  for_each_chain_path(sys, c, w, sign < 0 ? PathRule::greater : PathRule::less,
                      [&](const std::vector<int>& J, Elt u) {
                        auto cr = chain_reflections(sys, c, J);
                        TransitionTerm t;
                        t.J = J;
                        t.u = u;
                        t.n_J = cr.n_J;
                        const int k = static_cast<int>(J.size());
                        const int e = sys.length(u) - lw - k;
                        if (e % 2 != 0) throw std::logic_error("odd exponent in transition term");
                        Scalar base = sign < 0 ? one_minus_q() : q_minus_one();
                        t.coeff = base.pow(k) * Scalar::q_pow(e / 2) * Scalar((cr.n_J % 2) ? -1 : 1);
                        if (sign < 0)
                          t.mu = sys.act(w, cr.rhat_lt.apply(sys, -c.lambda));
                        else
                          t.mu = sys.act(w, cr.rtilde_gt.apply(sys, c.lambda));
                        out.push_back(std::move(t));
                      });
  return out;
}

Coeffs transition_chain(const RootSystem& sys, Elt w, const LambdaChain& c, int sign) {
  Coeffs out;
  for (const auto& t : transition_terms(sys, w, c, sign)) out[HKey{t.u, t.mu}] += t.coeff;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

std::map<Weight, Scalar> coeffs_at(const Coeffs& c, Elt u) {
  std::map<Weight, Scalar> out;
  for (const auto& [k, s] : c)
    if (k.w == u) out[k.mu] = s;
  return out;
}

}  // namespace chev
