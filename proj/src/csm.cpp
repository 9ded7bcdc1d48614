#include "chev/csm.hpp"

#include <mutex>
#include <stdexcept>

#include "chev/render.hpp"

namespace chev {

namespace {

HPoly hconst(int r, int64_t c) { return CharPoly::constant(r, Scalar(c)); }

bool in_levi(const RootSystem& R, int b, const std::set<int>& P) {
  const auto& c = R.root_simple_coords(b);
  for (int i = 0; i < R.rank(); ++i)
    if (c[i] != 0 && !P.count(i + 1)) return false;
  return true;
}

void add_to(std::map<Elt, HPoly>& m, Elt u, const HPoly& f) {
  if (f.is_zero()) return;
  auto it = m.find(u);
  if (it == m.end()) {
    m.emplace(u, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) m.erase(it);
}

// divided difference (f - s_i f) / a_i
HPoly divided_difference(const RootSystem& R, int i, const HPoly& f) {
  Elt s = R.lmul_simple(i, R.id());
  HPoly a = linear_form(R.root(R.simple_root(i - 1)));
  auto q = (f - h_weyl_act(R, s, f)).div_exact(a);
  if (!q) throw std::logic_error("divided difference is not a polynomial");
  return *q;
}

void check_inputs(const RootSystem& R, Elt w, const Weight& lambda, const std::set<int>& P) {
  if (R.coset_min(w, P) != w) throw std::invalid_argument(R.elt_str(w) + " is not a minimal coset representative");
  for (int i : P)
    if (R.pair(lambda, R.simple_root(i - 1)) != 0)
      throw std::invalid_argument("weight " + lambda.str() + " does not extend to G/P");
}

}  // namespace

HPoly linear_form(const Weight& mu) {
  const int r = mu.rank();
  HPoly out(r);
  for (int i = 0; i < r; ++i) {
    if (mu[i] == 0) continue;
    Weight e(r);
    e[i] = 1;
    out += CharPoly::exp(e, Scalar(mu[i]));
  }
  return out;
}

HPoly h_weyl_act(const RootSystem& sys, Elt w, const HPoly& f) {
  const int r = sys.rank();
  std::vector<HPoly> image;
  for (int i = 1; i <= r; ++i) image.push_back(linear_form(sys.act(w, sys.fundamental(i))));
  HPoly out(r);
  for (const auto& [m, c] : f.terms()) {
    HPoly p = CharPoly::constant(r, Scalar::mono(m.v, c));
    for (int i = 0; i < r; ++i) {
      if (m.w[i] < 0) throw std::invalid_argument("Weyl action on a non-polynomial");
      if (m.w[i] > 0) p *= image[i].pow(m.w[i]);
    }
    out += p;
  }
  return out;
}

bool is_polynomial(const HPoly& f) {
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < m.w.rank(); ++i)
      if (m.w[i] < 0) return false;
  return true;
}

HPoly to_hpoly(const PolyFrac& f, const std::string& what) {
  HPoly p = f.poly_or_throw(what);
  if (!is_polynomial(p)) throw std::domain_error(what + ": negative exponent");
  return p;
}

std::string h_text(const HPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& ts = f.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < m.w.rank(); ++i) {
      if (m.w[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "w" + std::to_string(i + 1);
      if (m.w[i] != 1) mono += "^" + std::to_string(m.w[i]);
    }
    const int64_t a = c < 0 ? -c : c;
    std::string term;
    if (mono.empty()) term = std::to_string(a);
    else if (a == 1) term = mono;
    else term = std::to_string(a) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

CohClass::CohClass(SystemPtr s) : sys(std::move(s)) {
  at.assign(sys->order(), PolyFrac(CharPoly(sys->rank())));
}

CohClass CohClass::operator+(const CohClass& o) const {
  CohClass r(sys);
  for (size_t i = 0; i < at.size(); ++i) r.at[i] = (at[i] + o.at[i]).reduced();
  return r;
}

CohClass CohClass::operator-(const CohClass& o) const {
  CohClass r(sys);
  for (size_t i = 0; i < at.size(); ++i) r.at[i] = (at[i] - o.at[i]).reduced();
  return r;
}

CohClass CohClass::operator*(const CohClass& o) const {
  CohClass r(sys);
  for (size_t i = 0; i < at.size(); ++i) r.at[i] = (at[i] * o.at[i]).reduced();
  return r;
}

CohClass CohClass::operator*(const PolyFrac& c) const {
  CohClass r(sys);
  for (size_t i = 0; i < at.size(); ++i) r.at[i] = (at[i] * c).reduced();
  return r;
}

bool CohClass::equals(const CohClass& o) const {
  for (size_t i = 0; i < at.size(); ++i)
    if (!at[i].equals(o.at[i])) return false;
  return true;
}

bool CohClass::is_zero() const {
  for (const auto& f : at)
    if (!f.reduced().is_zero()) return false;
  return true;
}

DegenerateElt degenerate_commute(const RootSystem& sys, Elt w, const Weight& lambda) {
  DegenerateElt out;
  const int r = sys.rank();
  add_to(out, w, linear_form(sys.act(w, lambda)));
  for (int b = 0; b < sys.num_positive(); ++b) {
    if (sys.is_positive(sys.act_root(w, b))) continue;  // w s_a < w iff w(a) < 0
    add_to(out, sys.mul(w, sys.reflection(b)), hconst(r, -sys.pair(lambda, b)));
  }
  return out;
}

DegenerateElt degenerate_rewrite(const RootSystem& sys, Elt w, const Weight& lambda) {
  DegenerateElt cur;
  add_to(cur, sys.id(), linear_form(lambda));
  const auto& word = sys.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    Elt s = sys.lmul_simple(i, sys.id());
    // T_i f T_u = (s_i f) T_{s_i u} - d_i(f) T_u
    DegenerateElt next;
    for (const auto& [u, f] : cur) {
      add_to(next, sys.lmul_simple(i, u), h_weyl_act(sys, s, f));
      add_to(next, u, -divided_difference(sys, i, f));
    }
    cur = std::move(next);
  }
  return cur;
}

std::string degenerate_text(const RootSystem& sys, const DegenerateElt& e) {
  if (e.empty()) return "0";
  std::string out;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + h_text(it->second) + ")*T[" + sys.elt_str(it->first) + "]";
  }
  return out;
}

CohOracle::CohOracle(SystemPtr sys, std::set<int> parabolic) : sys_(std::move(sys)), P_(std::move(parabolic)) {
  const RootSystem& R = *sys_;
  const int r = R.rank();
  for (int i : P_)
    if (i < 1 || i > r) throw std::invalid_argument("parabolic index out of range");
  reps_ = R.minimal_coset_reps(P_);
  euler_.assign(R.order(), hconst(r, 1));
  for (Elt x : reps_)
    for (int b = 0; b < R.num_positive(); ++b)
      if (!in_levi(R, b, P_)) euler_[x] *= linear_form(-R.act(x, R.root(b)));

  csm_.assign(R.order(), CohClass(sys_));
  csm_[R.id()] = point_class();
  for (Elt w : reps_) {
    if (w == R.id()) continue;
    const int i = R.word(w).front();
    csm_[w] = dl_left(i, csm_[R.lmul_simple(i, w)]);
    for (Elt x : reps_) to_hpoly(csm_[w][x], "CSM restriction");
  }

  // Y(u W_P)° = w0 X(w0 u W_P)°, and s_M = c_SM / c(T)
  CohClass cT = tangent_chern();
  const Elt w0 = R.w0();
  opp_.assign(R.order(), CohClass(sys_));
  sm_.assign(R.order(), CohClass(sys_));
  for (Elt u : reps_) {
    const CohClass& F = csm_[R.coset_min(R.mul(w0, u), P_)];
    for (Elt x : reps_) {
      opp_[u][x] = h_weyl_act(R, w0, to_hpoly(F[R.coset_min(R.mul(w0, x), P_)], "CSM restriction"));
      sm_[u][x] = (opp_[u][x] / cT[x]).reduced();
    }
  }
}

CohClass CohOracle::point_class() const {
  CohClass F(sys_);
  F[sys_->id()] = euler_[sys_->id()];
  return F;
}

CohClass CohOracle::c1(const Weight& lambda) const {
  const RootSystem& R = *sys_;
  for (int i : P_)
    if (R.pair(lambda, R.simple_root(i - 1)) != 0)
      throw std::invalid_argument("weight " + lambda.str() + " does not extend to G/P");
  CohClass F(sys_);
  for (Elt x : reps_) F[x] = linear_form(R.act(x, lambda));
  return F;
}

CohClass CohOracle::scalar(const HPoly& f) const {
  CohClass F(sys_);
  for (Elt x : reps_) F[x] = f;
  return F;
}

CohClass CohOracle::tangent_chern() const {
  const RootSystem& R = *sys_;
  CohClass F(sys_);
  for (Elt x : reps_) {
    HPoly c = hconst(R.rank(), 1);
    for (int b = 0; b < R.num_positive(); ++b)
      if (!in_levi(R, b, P_)) c *= hconst(R.rank(), 1) - linear_form(R.act(x, R.root(b)));
    F[x] = c;
  }
  return F;
}

CohClass CohOracle::dl_left(int i, const CohClass& F) const {
  const RootSystem& R = *sys_;
  Elt s = R.lmul_simple(i, R.id());
  HPoly a = linear_form(R.root(R.simple_root(i - 1)));
  HPoly a1 = a + hconst(R.rank(), 1);
  CohClass out(sys_);
  for (Elt x : reps_) {
    Elt sx = R.coset_min(R.lmul_simple(i, x), P_);
    HPoly moved = h_weyl_act(R, s, to_hpoly(F[sx], "left Weyl action"));
    HPoly here = to_hpoly(F[x], "left Weyl action");
    auto q = (a1 * moved - here).div_exact(a);
    if (!q) throw std::domain_error("left Demazure-Lusztig operator left a fraction; input is not a class");
    out[x] = *q;
  }
  return out;
}

const CohClass& CohOracle::csm(Elt w) const {
  if (sys_->coset_min(w, P_) != w) throw std::invalid_argument("not a minimal coset representative");
  return csm_[w];
}

const CohClass& CohOracle::csm_opposite(Elt u) const {
  if (sys_->coset_min(u, P_) != u) throw std::invalid_argument("not a minimal coset representative");
  return opp_[u];
}

const CohClass& CohOracle::sm(Elt u) const {
  if (sys_->coset_min(u, P_) != u) throw std::invalid_argument("not a minimal coset representative");
  return sm_[u];
}

PolyFrac CohOracle::integral(const CohClass& F) const {
  PolyFrac acc = PolyFrac(CharPoly(sys_->rank()));
  for (Elt x : reps_)
    if (!F[x].is_zero()) acc += F[x] / PolyFrac(euler_[x]);
  return acc.reduced();
}

HPoly CohOracle::pair(const CohClass& F, const CohClass& G) const {
  return to_hpoly(integral(F * G), "intersection pairing");
}

std::map<Elt, HPoly> CohOracle::expand_csm(const CohClass& F) const {
  // c_SM(X(u W_P)°) is supported on x <= u: peel from the top
  std::map<Elt, HPoly> out;
  CohClass rest = F;
  for (auto it = reps_.rbegin(); it != reps_.rend(); ++it) {
    const Elt x = *it;
    if (rest[x].reduced().is_zero()) continue;
    HPoly c = to_hpoly(rest[x] / csm_[x][x], "CSM coefficient");
    rest = rest - csm_[x] * PolyFrac(c);
    add_to(out, x, c);
  }
  if (!rest.is_zero()) throw std::logic_error("CSM expansion left a remainder");
  return out;
}

std::map<Elt, HPoly> CohOracle::expand_sm(const CohClass& F) const {
  // s_M(Y(u W_P)°) is supported on x >= u: peel from the bottom
  std::map<Elt, HPoly> out;
  CohClass rest = F;
  for (Elt x : reps_) {
    if (rest[x].reduced().is_zero()) continue;
    HPoly c = to_hpoly(rest[x] / sm_[x][x], "SM coefficient");
    rest = rest - sm_[x] * PolyFrac(c);
    add_to(out, x, c);
  }
  if (!rest.is_zero()) throw std::logic_error("SM expansion left a remainder");
  return out;
}

std::map<Elt, HPoly> CohOracle::expand_csm_by_pairing(const CohClass& F) const {
  std::map<Elt, HPoly> out;
  for (Elt u : reps_) add_to(out, u, pair(F, sm_[u]));
  return out;
}

std::map<Elt, HPoly> CohOracle::expand_sm_by_pairing(const CohClass& F) const {
  std::map<Elt, HPoly> out;
  for (Elt u : reps_) add_to(out, u, pair(csm_[u], F));
  return out;
}

const CohOracle& coh_oracle_for(const SystemPtr& sys, const std::set<int>& parabolic) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::set<int>>, std::unique_ptr<CohOracle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(sys->label(), parabolic);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<CohOracle>(sys, parabolic)).first;
  return *it->second;
}

std::map<Elt, HPoly> csm_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda, const std::set<int>& parabolic) {
  const RootSystem& R = *sys;
  check_inputs(R, w, lambda, parabolic);
  std::map<Elt, HPoly> out;
  add_to(out, w, linear_form(R.act(w, lambda)));
  for (int b = 0; b < R.num_positive(); ++b) {
    Elt ws = R.mul(w, R.reflection(b));
    if (R.length(ws) >= R.length(w)) continue;
    add_to(out, R.coset_min(ws, parabolic), hconst(R.rank(), -R.pair(lambda, b)));
  }
  return out;
}

std::map<Elt, HPoly> sm_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda, const std::set<int>& parabolic) {
  const RootSystem& R = *sys;
  check_inputs(R, w, lambda, parabolic);
  std::map<Elt, HPoly> out;
  add_to(out, w, linear_form(R.act(w, lambda)));
  for (int b = 0; b < R.num_positive(); ++b) {
    Elt ws = R.mul(w, R.reflection(b));
    if (R.length(ws) <= R.length(w)) continue;
    add_to(out, R.coset_min(ws, parabolic), hconst(R.rank(), -R.pair(lambda, b)));
  }
  return out;
}

std::map<Elt, HPoly> csm_chevalley_oracle(const SystemPtr& sys, Elt w, const Weight& lambda,
                                          const std::set<int>& parabolic) {
  check_inputs(*sys, w, lambda, parabolic);
  const CohOracle& O = coh_oracle_for(sys, parabolic);
  return O.expand_csm(O.c1(lambda) * O.csm(w));
}

std::map<Elt, HPoly> sm_chevalley_oracle(const SystemPtr& sys, Elt w, const Weight& lambda,
                                         const std::set<int>& parabolic) {
  check_inputs(*sys, w, lambda, parabolic);
  const CohOracle& O = coh_oracle_for(sys, parabolic);
  return O.expand_sm(O.c1(lambda) * O.sm(w));
}

nlohmann::json csm_table_json(const RootSystem& sys, Elt w, const Weight& lambda, const std::map<Elt, HPoly>& t) {
  nlohmann::json j;
  j["type"] = sys.label();
  j["w"] = sys.elt_str(w);
  j["lambda"] = lambda.to_vector();
  j["entries"] = nlohmann::json::array();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : it->second.terms()) terms.push_back({{"exponent", m.w.to_vector()}, {"c", c}});
    j["entries"].push_back({{"u", sys.elt_str(it->first)}, {"coeff", h_text(it->second)}, {"terms", terms}});
  }
  return j;
}

std::string csm_table_text(const RootSystem& sys, const std::map<Elt, HPoly>& t, const std::string& basis) {
  if (t.empty()) return "0";
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += "\n + ";
    out += "(" + h_text(it->second) + ") " + basis + "(" + sys.elt_str(it->first) + ")";
  }
  return out;
}

}  // namespace chev
