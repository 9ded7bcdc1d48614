#include "chev/charpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace chev {

CharPoly CharPoly::constant(int rank, const Scalar& s) {
  CharPoly p(rank);
  for (auto [k, c] : s.terms()) p.t_.push_back({Mono{Weight(rank), k}, c});
  return p;
}

CharPoly CharPoly::exp(const Weight& mu, const Scalar& s) {
  CharPoly p(mu.rank());
  for (auto [k, c] : s.terms()) p.t_.push_back({Mono{mu, k}, c});
  return p;
}

CharPoly CharPoly::from_terms(int rank, std::vector<Term> terms) {
  CharPoly p(rank);
  p.t_ = std::move(terms);
  p.canonicalize();
  return p;
}

void CharPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  size_t o = 0;
  for (size_t i = 0; i < t_.size();) {
    Mono m = t_[i].first;
    int64_t c = 0;
    while (i < t_.size() && t_[i].first == m) c = add_ck(c, t_[i++].second);
    if (c != 0) t_[o++] = {m, c};
  }
  t_.resize(o);
}

bool CharPoly::is_constant() const {
  for (const auto& [m, c] : t_)
    if (!m.w.is_zero()) return false;
  return true;
}

CharPoly CharPoly::operator+(const CharPoly& o) const {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return o;
  CharPoly r(std::max(rank_, o.rank_));
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      r.t_.push_back(o.t_[j++]);
    } else {
      int64_t c = add_ck(t_[i].second, o.t_[j].second);
      if (c != 0) r.t_.push_back({t_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

CharPoly CharPoly::operator-() const {
  CharPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

CharPoly CharPoly::operator-(const CharPoly& o) const { return *this + (-o); }

CharPoly CharPoly::operator*(const CharPoly& o) const {
  CharPoly r(std::max(rank_, o.rank_));
  if (t_.empty() || o.t_.empty()) return r;
  r.t_.reserve(t_.size() * o.t_.size());
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.t_.push_back({m1 + m2, mul_ck(c1, c2)});
  r.canonicalize();
  return r;
}

CharPoly CharPoly::operator*(const Scalar& s) const { return *this * constant(rank_, s); }

CharPoly CharPoly::pow(int k) const {
  if (k < 0) {
    if (t_.size() != 1 || (t_[0].second != 1 && t_[0].second != -1))
      throw std::domain_error("negative power of a non-unit character");
    Mono m = t_[0].first;
    Mono inv{-m.w * (-k), -m.v * (-k)};
    int64_t c = (t_[0].second == -1 && (k % 2)) ? -1 : 1;
    return from_terms(rank_, {{inv, c}});
  }
  CharPoly r = constant(rank_, Scalar(1)), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

CharPoly CharPoly::shift(const Mono& m) const {
  CharPoly r = *this;
  for (auto& t : r.t_) t.first = t.first + m;
  return r;
}

std::optional<CharPoly> CharPoly::div_exact(const CharPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero character");
  const int rk = std::max(rank_, d.rank_);
  if (is_zero()) return CharPoly(rk);
  // The quotient's monomials lie in the box difference of the two supports.
  auto box = [&](const CharPoly& p) {
    std::vector<int64_t> lo(rk + 1, std::numeric_limits<int64_t>::max()),
        hi(rk + 1, std::numeric_limits<int64_t>::min());
    for (const auto& [m, c] : p.t_) {
      for (int i = 0; i < rk; ++i) {
        lo[i] = std::min<int64_t>(lo[i], m.w[i]);
        hi[i] = std::max<int64_t>(hi[i], m.w[i]);
      }
      lo[rk] = std::min<int64_t>(lo[rk], m.v);
      hi[rk] = std::max<int64_t>(hi[rk], m.v);
    }
    return std::make_pair(lo, hi);
  };
  auto [plo, phi] = box(*this);
  auto [dlo, dhi] = box(d);
  std::vector<int64_t> qlo(rk + 1), qhi(rk + 1);
  for (int i = 0; i <= rk; ++i) {
    qlo[i] = plo[i] - dlo[i];
    qhi[i] = phi[i] - dhi[i];
    if (qlo[i] > qhi[i]) return std::nullopt;
  }
  const Mono lead = d.t_.back().first;
  const int64_t lc = d.t_.back().second;
  std::vector<Term> rem = t_;
  std::vector<Term> quo;
  std::vector<Term> scratch;
  while (!rem.empty()) {
    const auto& [rm, rc] = rem.back();
    Mono m = rm - lead;
    for (int i = 0; i < rk; ++i)
      if (m.w[i] < qlo[i] || m.w[i] > qhi[i]) return std::nullopt;
    if (m.v < qlo[rk] || m.v > qhi[rk]) return std::nullopt;
    if (rc % lc != 0) return std::nullopt;
    int64_t c = rc / lc;
    quo.push_back({m, c});
    // rem -= c * m * d, merging sorted sequences
    scratch.clear();
    scratch.reserve(rem.size() + d.t_.size());
    size_t i = 0, j = 0;
    while (i < rem.size() || j < d.t_.size()) {
      if (j == d.t_.size()) {
        scratch.push_back(rem[i++]);
        continue;
      }
      Mono dm = d.t_[j].first + m;
      if (i < rem.size() && rem[i].first < dm) {
        scratch.push_back(rem[i++]);
      } else if (i == rem.size() || dm < rem[i].first) {
        scratch.push_back({dm, -mul_ck(c, d.t_[j].second)});
        ++j;
      } else {
        int64_t x = add_ck(rem[i].second, -mul_ck(c, d.t_[j].second));
        if (x != 0) scratch.push_back({dm, x});
        ++i;
        ++j;
      }
    }
    rem.swap(scratch);
  }
  std::reverse(quo.begin(), quo.end());
  CharPoly q(rk);
  q.t_ = std::move(quo);
  return q;
}

CharPoly CharPoly::div_exact_or_throw(const CharPoly& d) const {
  auto q = div_exact(d);
  if (!q) throw std::domain_error("inexact character division");
  return *q;
}

CharPoly CharPoly::map_weights(const std::function<Weight(const Weight&)>& f) const {
  CharPoly r(rank_);
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.push_back({Mono{f(m.w), m.v}, c});
  r.canonicalize();
  if (!r.t_.empty()) r.rank_ = r.t_.front().first.w.rank();
  return r;
}

CharPoly CharPoly::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
  CharPoly r(rank_);
  for (const auto& [mu, s] : by_weight()) r += exp(mu, f(s));
  return r;
}

CharPoly CharPoly::weyl_act(const RootSystem& sys, Elt w) const {
  if (w == sys.id()) return *this;
  return map_weights([&](const Weight& mu) { return sys.act(w, mu); });
}

CharPoly CharPoly::v_inverse() const {
  CharPoly r = *this;
  for (auto& t : r.t_) t.first.v = -t.first.v;
  r.canonicalize();
  return r;
}

CharPoly CharPoly::star() const {
  return map_weights([](const Weight& mu) { return -mu; });
}

CharPoly CharPoly::dual_vee() const { return star().v_inverse(); }

CharPoly CharPoly::iota(const RootSystem& sys) const { return star().weyl_act(sys, sys.w0()); }

Scalar CharPoly::coefficient(const Weight& mu) const {
  Scalar s;
  auto it = std::lower_bound(t_.begin(), t_.end(), Mono{mu, std::numeric_limits<int32_t>::min()},
                             [](const Term& a, const Mono& m) { return a.first < m; });
  for (; it != t_.end() && it->first.w == mu; ++it) s += Scalar::mono(it->first.v, it->second);
  return s;
}

std::map<Weight, Scalar> CharPoly::by_weight() const {
  std::map<Weight, Scalar> out;
  for (const auto& [m, c] : t_) out[m.w] += Scalar::mono(m.v, c);
  return out;
}

Scalar CharPoly::eval_weights_at_one() const {
  Scalar s;
  for (const auto& [m, c] : t_) s += Scalar::mono(m.v, c);
  return s;
}

CharPoly one_plus(const Mono& m, int64_t c, int rank) {
  return CharPoly::from_terms(rank, {{Mono{Weight(rank), 0}, 1}, {m, c}});
}

// ---------------------------------------------------------------- CharFrac

CharFrac CharFrac::ratio(const CharPoly& num, const CharPoly& den) { return make(num, {{den, 1}}); }

void CharFrac::add_factor(const CharPoly& f0, int mult) {
  if (mult == 0) return;
  if (f0.is_zero()) throw std::domain_error("zero denominator");
  const Mono lead = f0.terms().back().first;
  const int64_t lc = f0.terms().back().second;
  CharPoly f = f0.shift(Mono{-lead.w, -lead.v});
  int64_t sign = 1;
  if (lc < 0) {
    f = -f;
    sign = -1;
  }
  // f0 = sign * lead * f
  Mono inv{-lead.w * mult, -lead.v * mult};
  num_ = num_.shift(inv);
  if (sign < 0 && (mult % 2)) num_ = -num_;
  if (f.size() == 1 && f.terms()[0].second == 1) return;  // unit
  auto it = std::lower_bound(den_.begin(), den_.end(), f,
                             [](const std::pair<CharPoly, int>& a, const CharPoly& b) { return a.first < b; });
  if (it != den_.end() && it->first == f)
    it->second += mult;
  else
    den_.insert(it, {f, mult});
}

CharFrac CharFrac::make(CharPoly num, std::vector<std::pair<CharPoly, int>> den) {
  CharFrac r;
  r.num_ = std::move(num);
  for (auto& [f, k] : den) r.add_factor(f, k);
  return r;
}

CharPoly CharFrac::den_product() const {
  CharPoly p = CharPoly::constant(rank(), Scalar(1));
  for (const auto& [f, k] : den_) p *= f.pow(k);
  return p;
}

CharFrac CharFrac::operator*(const CharFrac& o) const {
  CharFrac r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (const auto& [f, k] : o.den_) r.add_factor(f, k);
  return r;
}

CharFrac CharFrac::operator/(const CharFrac& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  CharFrac r = *this;
  for (const auto& [f, k] : o.den_) r.num_ *= f.pow(k);
  r.add_factor(o.num_, 1);
  return r;
}

CharFrac CharFrac::operator-() const {
  CharFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

CharFrac CharFrac::operator+(const CharFrac& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) {
    CharFrac r = *this;
    r.num_ += o.num_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }
  // least common multiple of the factor multisets
  std::map<CharPoly, std::pair<int, int>> all;
  for (const auto& [f, k] : den_) all[f].first = k;
  for (const auto& [f, k] : o.den_) all[f].second = k;
  CharPoly a = num_, b = o.num_;
  CharFrac r;
  for (const auto& [f, ks] : all) {
    int m = std::max(ks.first, ks.second);
    if (m > ks.first) a *= f.pow(m - ks.first);
    if (m > ks.second) b *= f.pow(m - ks.second);
    r.den_.push_back({f, m});
  }
  r.num_ = a + b;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

CharFrac CharFrac::operator-(const CharFrac& o) const { return *this + (-o); }

CharFrac CharFrac::reduced() const {
  CharFrac r = *this;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  std::vector<std::pair<CharPoly, int>> keep;
  for (auto& [f, k] : r.den_) {
    int left = k;
    while (left > 0) {
      auto q = r.num_.div_exact(f);
      if (!q) break;
      r.num_ = std::move(*q);
      --left;
    }
    if (left > 0) keep.push_back({f, left});
  }
  r.den_ = std::move(keep);
  return r;
}

std::optional<CharPoly> CharFrac::to_poly() const {
  CharFrac r = reduced();
  if (!r.den_.empty()) return std::nullopt;
  return r.num_;
}

CharPoly CharFrac::poly_or_throw(const std::string& what) const {
  auto p = to_poly();
  if (!p) throw std::domain_error(what + ": expected a Laurent polynomial, got a proper fraction");
  return *p;
}

CharFrac CharFrac::map_weights(const std::function<Weight(const Weight&)>& f) const {
  std::vector<std::pair<CharPoly, int>> d;
  for (const auto& [g, k] : den_) d.push_back({g.map_weights(f), k});
  return make(num_.map_weights(f), std::move(d));
}

CharFrac CharFrac::weyl_act(const RootSystem& sys, Elt w) const {
  if (w == sys.id()) return *this;
  return map_weights([&](const Weight& mu) { return sys.act(w, mu); });
}

CharFrac CharFrac::v_inverse() const {
  std::vector<std::pair<CharPoly, int>> d;
  for (const auto& [g, k] : den_) d.push_back({g.v_inverse(), k});
  return make(num_.v_inverse(), std::move(d));
}

CharFrac CharFrac::star() const {
  return map_weights([](const Weight& mu) { return -mu; });
}

CharFrac CharFrac::dual_vee() const { return star().v_inverse(); }

CharFrac CharFrac::iota(const RootSystem& sys) const { return star().weyl_act(sys, sys.w0()); }

bool CharFrac::equals(const CharFrac& o) const { return (*this - o).num_.is_zero(); }

CharFrac involute(const RootSystem& sys, const CharFrac& f, Involution which) {
  switch (which) {
    case Involution::dual_vee:
      return f.dual_vee();
    case Involution::star:
      return f.star();
    case Involution::iota:
      return f.iota(sys);
    case Involution::y_inverse:
      return f.v_inverse();
    case Involution::q_to_minus_y:
      // q and -y are the same element of the parameter ring
      return f;
  }
  return f;
}

Involution parse_involution(const std::string& s) {
  if (s == "dual_vee") return Involution::dual_vee;
  if (s == "star") return Involution::star;
  if (s == "iota") return Involution::iota;
  if (s == "y_inverse") return Involution::y_inverse;
  if (s == "q_to_minus_y") return Involution::q_to_minus_y;
  throw std::invalid_argument("unknown involution '" + s + "'");
}

}  // namespace chev
