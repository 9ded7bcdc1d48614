#include "chev/oracle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "chev/render.hpp"

namespace chev {

namespace {

CharPoly one(int r) { return CharPoly::constant(r, Scalar(1)); }
CharPoly one_minus_exp(const Weight& b) { return one_plus(Mono{b, 0}, -1, b.rank()); }
CharPoly one_plus_y_exp(const Weight& b) { return one_plus(Mono{b, 2}, -1, b.rank()); }

CharFrac over(const CharFrac& f, const CharPoly& d) { return f / CharFrac(d); }

// prod_{a>0} (1 - e^{x a}), the K-theoretic Euler class of the cotangent space at e_x
CharFrac divide_by_euler(const RootSystem& R, Elt x, CharFrac f, const std::set<int>& skip_span = {}) {
  for (int b = 0; b < R.num_positive(); ++b) {
    if (!skip_span.empty()) {
      const auto& sc = R.root_simple_coords(b);
      bool inside = true;
      for (int i = 0; i < R.rank(); ++i)
        if (sc[i] != 0 && !skip_span.count(i + 1)) inside = false;
      if (inside) continue;
    }
    f = over(f, one_minus_exp(R.act(x, R.root(b))));
  }
  return f;
}

CharFrac divide_by_lambda_y(const RootSystem& R, Elt x, CharFrac f) {
  for (int b = 0; b < R.num_positive(); ++b) f = over(f, one_plus_y_exp(R.act(x, R.root(b))));
  return f;
}

std::vector<int> parabolic_roots(const RootSystem& R, const std::set<int>& P) {
  std::vector<int> out;
  for (int b = 0; b < R.num_positive(); ++b) {
    const auto& sc = R.root_simple_coords(b);
    bool inside = true;
    for (int i = 0; i < R.rank(); ++i)
      if (sc[i] != 0 && !P.count(i + 1)) inside = false;
    if (inside) out.push_back(b);
  }
  return out;
}

// Bring a list of fractions to one denominator.
CharPoly common_denominator(const std::vector<CharFrac>& fs, std::vector<CharPoly>& nums) {
  std::map<CharPoly, int> lcm;
  int r = 0;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    r = f.rank();
    for (const auto& [p, k] : f.den()) lcm[p] = std::max(lcm[p], k);
  }
  nums.clear();
  if (r == 0) {
    for (const auto& f : fs) nums.push_back(f.num());
    return one(fs.empty() ? 0 : fs.front().rank());
  }
  CharPoly den = one(r);
  for (const auto& [p, k] : lcm) den *= p.pow(k);
  for (const auto& f : fs) {
    if (f.is_zero()) {
      nums.push_back(CharPoly(r));
      continue;
    }
    std::map<CharPoly, int> rest = lcm;
    for (const auto& [p, k] : f.den()) rest[p] -= k;
    CharPoly n = f.num();
    for (const auto& [p, k] : rest)
      if (k > 0) n *= p.pow(k);
    nums.push_back(n);
  }
  return den;
}

}  // namespace

// ---------------------------------------------------------------- LocalizedClass

LocalizedClass::LocalizedClass(SystemPtr s) : sys(std::move(s)) {
  at.assign(sys->order(), CharFrac(CharPoly(sys->rank())));
}

LocalizedClass LocalizedClass::operator+(const LocalizedClass& o) const {
  LocalizedClass r = *this;
  for (size_t i = 0; i < at.size(); ++i) r.at[i] += o.at[i];
  return r;
}

LocalizedClass LocalizedClass::operator-(const LocalizedClass& o) const {
  LocalizedClass r = *this;
  for (size_t i = 0; i < at.size(); ++i) r.at[i] -= o.at[i];
  return r;
}

LocalizedClass LocalizedClass::operator*(const LocalizedClass& o) const {
  LocalizedClass r = *this;
  for (size_t i = 0; i < at.size(); ++i) r.at[i] = at[i] * o.at[i];
  return r;
}

LocalizedClass LocalizedClass::operator*(const CharFrac& c) const {
  LocalizedClass r = *this;
  for (auto& f : r.at) f = f * c;
  return r;
}

bool LocalizedClass::equals(const LocalizedClass& o) const {
  for (size_t i = 0; i < at.size(); ++i)
    if (!at[i].equals(o.at[i])) return false;
  return true;
}

bool LocalizedClass::is_zero() const {
  for (const auto& f : at)
    if (!f.reduced().is_zero()) return false;
  return true;
}

std::set<Elt> LocalizedClass::support() const {
  std::set<Elt> s;
  for (size_t i = 0; i < at.size(); ++i)
    if (!at[i].is_zero()) s.insert(static_cast<Elt>(i));
  return s;
}

LocalizedClass LocalizedClass::reduced() const {
  return map([](const CharFrac& f) { return f.reduced(); });
}

LocalizedClass LocalizedClass::map(const std::function<CharFrac(const CharFrac&)>& f) const {
  LocalizedClass r = *this;
  for (auto& x : r.at) x = f(x);
  return r;
}

LocalizedClass line_bundle(const SystemPtr& sys, const Weight& lambda) {
  LocalizedClass F(sys);
  for (Elt w : sys->elements()) F[w] = CharPoly::exp(sys->act(w, lambda));
  return F;
}

LocalizedClass point_class(const SystemPtr& sys) {
  LocalizedClass F(sys);
  CharPoly p = one(sys->rank());
  for (int b = 0; b < sys->num_positive(); ++b) p *= one_minus_exp(sys->root(b));
  F[sys->id()] = p;
  return F;
}

LocalizedClass trivial_class(const SystemPtr& sys) { return line_bundle(sys, sys->zero()); }

LocalizedClass lambda_y_cotangent(const SystemPtr& sys) {
  LocalizedClass F(sys);
  for (Elt w : sys->elements()) {
    CharPoly p = one(sys->rank());
    for (int b = 0; b < sys->num_positive(); ++b) p *= one_plus_y_exp(sys->act(w, sys->root(b)));
    F[w] = p;
  }
  return F;
}

LocalizedClass left_action(Elt x, const LocalizedClass& F) {
  const RootSystem& R = *F.sys;
  LocalizedClass r(F.sys);
  Elt xi = R.inverse(x);
  for (Elt w : R.elements()) r[w] = F[R.mul(xi, w)].weyl_act(R, x);
  return r;
}

LocalizedClass dl_left(int i, const LocalizedClass& F) {
  const RootSystem& R = *F.sys;
  const int r = R.rank();
  Elt s = R.lmul_simple(i, R.id());
  Weight a = R.root(R.simple_root(i - 1));
  CharPoly den = one_minus_exp(-a);
  CharPoly c1 = one_plus_y_exp(-a);
  CharPoly c2 = CharPoly::constant(r, one_plus_y());
  LocalizedClass out(F.sys);
  for (Elt w : R.elements()) {
    CharFrac moved = F[R.mul(s, w)].weyl_act(R, s);
    if (moved.is_poly() && F[w].is_poly()) {
      CharPoly n = c1 * moved.num() - c2 * F[w].num();
      auto q = n.div_exact(den);
      out[w] = q ? CharFrac(*q) : CharFrac::ratio(n, den);
    } else {
      out[w] = over(CharFrac(c1) * moved - CharFrac(c2) * F[w], den).reduced();
    }
  }
  return out;
}

LocalizedClass serre_dual(const LocalizedClass& F) {
  const RootSystem& R = *F.sys;
  LocalizedClass out(F.sys);
  const int sign = R.dim_flag() % 2 ? -1 : 1;
  Weight two_rho = R.rho() * 2;
  for (Elt w : R.elements())
    out[w] = F[w].dual_vee() * CharFrac(CharPoly::exp(R.act(w, two_rho), Scalar(sign)));
  return out;
}

LocalizedClass star_dual(const LocalizedClass& F) {
  return F.map([](const CharFrac& f) { return f.star(); });
}

CharPoly euler_char(const LocalizedClass& F) {
  const RootSystem& R = *F.sys;
  CharFrac s(CharPoly(R.rank()));
  for (Elt x : R.elements()) {
    if (F[x].is_zero()) continue;
    s += divide_by_euler(R, x, F[x]);
  }
  return s.poly_or_throw("euler characteristic");
}

CharPoly pair(const LocalizedClass& F, const LocalizedClass& G) { return euler_char(F * G); }

// ---------------------------------------------------------------- KOracle

KOracle::KOracle(SystemPtr sys) : sys_(std::move(sys)) {
  const RootSystem& R = *sys_;
  const auto order = R.elements();
  mc_.resize(R.order());
  mcy_.resize(R.order());
  smc_.resize(R.order());
  mc_[R.id()] = point_class(sys_);
  for (Elt w : order) {
    if (w == R.id()) continue;
    int i = R.word(w).front();
    mc_[w] = dl_left(i, mc_[R.lmul_simple(i, w)]);
  }
  for (Elt w : order) {
    // MC(X(w)°)|_w is lambda_y of the cotangent space of X(w) times lambda_{-1} of the conormal space
    CharPoly d = one(R.rank());
    for (int b = 0; b < R.num_positive(); ++b) {
      int wb = R.act_root(w, b);
      d *= R.is_positive(wb) ? one_minus_exp(R.root(wb)) : one_plus_y_exp(R.root(wb));
    }
    if (!mc_[w][w].is_poly() || mc_[w][w].num() != d)
      throw std::logic_error("MC diagonal restriction mismatch at " + R.elt_str(w));
    for (Elt x : order)
      if (!mc_[w][x].is_zero() && !R.leq(x, w))
        throw std::logic_error("MC class not supported on the Schubert variety");
  }
  const Elt w0 = R.w0();
  for (Elt w : order) mcy_[w] = left_action(w0, mc_[R.mul(w0, w)]);

  auto M = [&](Elt w, Elt x) -> const CharFrac& { return mc_[w][x]; };
  auto below = [&](Elt a, Elt b) { return R.leq(a, b); };
  num_.resize(R.order());
  den_.resize(R.order());
  support_.resize(R.order());
  for (Elt u : order) {
    std::vector<CharFrac> Z(R.order());
    for (Elt w : order) {
      if (!below(u, w)) continue;
      CharFrac rhs = w == u ? CharFrac(one(R.rank())) : CharFrac(CharPoly(R.rank()));
      for (Elt x : order) {
        if (x == w) break;
        if (Z[x].is_zero() || !below(x, w)) continue;
        const CharFrac& m = M(w, x);
        if (m.is_zero()) continue;
        rhs -= m * Z[x];
      }
      // pivot MC(X(w)°)|_w, one binomial at a time so the denominator stays factored
      for (int b = 0; b < R.num_positive(); ++b) {
        int wb = R.act_root(w, b);
        rhs = over(rhs, R.is_positive(wb) ? one_minus_exp(R.root(wb)) : one_plus_y_exp(R.root(wb)));
      }
      Z[w] = rhs.reduced();
    }
    LocalizedClass S(sys_);
    for (Elt x : order) {
      if (Z[x].is_zero()) continue;
      CharFrac e(one(R.rank()));
      for (int b = 0; b < R.num_positive(); ++b) e = e * CharFrac(one_minus_exp(R.act(x, R.root(b))));
      S[x] = (Z[x] * e).reduced();
      support_[u].push_back(x);
    }
    smc_[u] = S;
    std::vector<CharFrac> zs;
    for (Elt x : support_[u]) zs.push_back(Z[x]);
    std::vector<CharPoly> nums;
    den_[u] = common_denominator(zs, nums);
    num_[u].assign(R.order(), CharPoly(R.rank()));
    for (size_t k = 0; k < support_[u].size(); ++k) num_[u][support_[u][k]] = nums[k];
  }
}

LocalizedClass KOracle::smc_from_definition(Elt u) const {
  const RootSystem& R = *sys_;
  int dim = R.dim_flag() - R.length(u);
  LocalizedClass D = serre_dual(mcy_[u]);
  LocalizedClass out(sys_);
  for (Elt x : R.elements()) {
    if (D[x].is_zero()) continue;
    out[x] = divide_by_lambda_y(R, x, D[x] * CharFrac(CharPoly::constant(R.rank(), Scalar::neg_y_pow(dim)))).reduced();
  }
  return out;
}

LocalizedClass KOracle::smc_schubert(Elt w) const {
  const RootSystem& R = *sys_;
  LocalizedClass D = serre_dual(mc_[w]);
  LocalizedClass out(sys_);
  for (Elt x : R.elements()) {
    if (D[x].is_zero()) continue;
    out[x] = divide_by_lambda_y(R, x, D[x] * CharFrac(CharPoly::constant(R.rank(), Scalar::neg_y_pow(R.length(w))))).reduced();
  }
  return out;
}

ChevalleyTable KOracle::expand_product(Elt w, const Weight& lambda) const {
  const RootSystem& R = *sys_;
  ChevalleyTable t{sys_, w, lambda, {}, "oracle"};
  for (Elt u : R.elements()) {
    if (!R.leq(u, w)) continue;
    CharPoly s(R.rank());
    for (Elt x : support_[u]) {
      if (!R.leq(x, w)) continue;
      s += CharPoly::exp(R.act(x, lambda)) * mc_[w][x].num() * num_[u][x];
    }
    if (s.is_zero()) continue;
    CharPoly c = s.div_exact_or_throw(den_[u]);
    if (!c.is_zero()) t.entries.emplace(u, std::move(c));
  }
  return t;
}

std::map<Elt, CharPoly> KOracle::expand_class(const LocalizedClass& F) const {
  const RootSystem& R = *sys_;
  std::map<Elt, CharPoly> out;
  for (Elt u : R.elements()) {
    CharFrac s(CharPoly(R.rank()));
    for (Elt x : support_[u]) {
      if (F[x].is_zero()) continue;
      s += F[x] * CharFrac::ratio(num_[u][x], den_[u]);
    }
    CharPoly c = s.poly_or_throw("expansion coefficient");
    if (!c.is_zero()) out.emplace(u, std::move(c));
  }
  return out;
}

std::map<Elt, CharPoly> KOracle::expand_bundle(Elt w, const CharPoly& character) const {
  const RootSystem& R = *sys_;
  std::map<Elt, CharPoly> out;
  for (Elt u : R.elements()) {
    if (!R.leq(u, w)) continue;
    CharPoly s(R.rank());
    for (Elt x : support_[u]) {
      if (!R.leq(x, w)) continue;
      s += character.weyl_act(R, x) * mc_[w][x].num() * num_[u][x];
    }
    if (s.is_zero()) continue;
    CharPoly c = s.div_exact_or_throw(den_[u]);
    if (!c.is_zero()) out.emplace(u, std::move(c));
  }
  return out;
}

const KOracle& oracle_for(const SystemPtr& sys) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<KOracle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[sys->label()];
  if (!slot) slot = std::make_unique<KOracle>(sys);
  return *slot;
}

ChevalleyTable oracle_chevalley(const SystemPtr& sys, Elt w, const Weight& lambda) {
  return oracle_for(sys).expand_product(w, lambda);
}

// ---------------------------------------------------------------- ParabolicOracle

ParabolicOracle::ParabolicOracle(SystemPtr sys, std::set<int> parabolic)
    : sys_(std::move(sys)), parabolic_(std::move(parabolic)) {
  const RootSystem& R = *sys_;
  for (int i : parabolic_)
    if (i < 1 || i > R.rank()) throw std::invalid_argument("parabolic index out of range");
  reps_ = R.minimal_coset_reps(parabolic_);
  const KOracle& K = oracle_for(sys_);
  const auto rp = parabolic_roots(R, parabolic_);
  for (Elt w : reps_) {
    LocalizedClass F(sys_);
    for (Elt x : reps_) {
      CharFrac s(CharPoly(R.rank()));
      for (Elt z : R.coset(x, parabolic_)) {
        CharFrac t = K.mc(w)[z];
        if (t.is_zero()) continue;
        for (int b : rp) t = over(t, one_minus_exp(R.act(z, R.root(b))));
        s += t;
      }
      F[x] = s.reduced();
    }
    mc_.emplace(w, F);
  }
  // dual basis on G/P
  for (Elt u : reps_) {
    std::map<Elt, CharFrac> Z;
    for (Elt w : reps_) {
      if (!R.leq(u, w)) continue;
      CharFrac rhs = w == u ? CharFrac(one(R.rank())) : CharFrac(CharPoly(R.rank()));
      for (Elt x : reps_) {
        if (x == w) break;
        auto it = Z.find(x);
        if (it == Z.end() || !R.leq(x, w)) continue;
        const CharFrac& m = mc_.at(w)[x];
        if (!m.is_zero()) rhs -= m * it->second;
      }
      Z[w] = (rhs / mc_.at(w)[w]).reduced();
    }
    LocalizedClass S(sys_);
    for (auto& [x, z] : Z) {
      CharFrac e(one(R.rank()));
      for (int b = 0; b < R.num_positive(); ++b) {
        if (std::find(rp.begin(), rp.end(), b) != rp.end()) continue;
        e = e * CharFrac(one_minus_exp(R.act(x, R.root(b))));
      }
      S[x] = (z * e).reduced();
    }
    smc_.emplace(u, S);
  }
}

const LocalizedClass& ParabolicOracle::mc(Elt w) const {
  auto it = mc_.find(w);
  if (it == mc_.end()) throw std::invalid_argument("not a minimal coset representative");
  return it->second;
}

CharPoly ParabolicOracle::pair(const LocalizedClass& F, const LocalizedClass& G) const {
  const RootSystem& R = *sys_;
  CharFrac s(CharPoly(R.rank()));
  for (Elt x : reps_) {
    CharFrac t = F[x] * G[x];
    if (t.is_zero()) continue;
    s += divide_by_euler(R, x, t, parabolic_);
  }
  return s.poly_or_throw("parabolic pairing");
}

ChevalleyTable ParabolicOracle::expand_product(Elt w, const Weight& lambda) const {
  for (int i : parabolic_)
    if (lambda[i - 1] != 0) throw std::invalid_argument("weight does not descend to G/P");
  LocalizedClass F = line_bundle(sys_, lambda) * mc(w);
  ChevalleyTable t{sys_, w, lambda, {}, "oracle"};
  for (Elt u : reps_) {
    CharPoly c = pair(F, smc_.at(u));
    if (!c.is_zero()) t.entries.emplace(u, std::move(c));
  }
  return t;
}

nlohmann::json class_json(const LocalizedClass& F, const std::string& name) {
  nlohmann::json rs = nlohmann::json::array();
  for (Elt w : F.sys->elements()) {
    if (F[w].is_zero()) continue;
    rs.push_back({{"w", F.sys->elt_str(w)}, {"frac", frac_text(F[w])}});
  }
  return {{"class", name}, {"restrictions", rs}};
}

}  // namespace chev
