#include "chev/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace chev {

Scalar Scalar::mono(int k, int64_t c) {
  Scalar s;
  if (c != 0) {
    s.lo_ = k;
    s.c_ = {c};
  }
  return s;
}

void Scalar::normalize() {
  size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  if (a > 0 || b < c_.size()) c_ = std::vector<int64_t>(c_.begin() + a, c_.begin() + b);
  lo_ += static_cast<int>(a);
}

int64_t Scalar::coeff(int k) const {
  if (c_.empty() || k < lo_ || k > hi()) return 0;
  return c_[k - lo_];
}

bool Scalar::even_only() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && ((lo_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Scalar r;
  r.lo_ = std::min(lo_, o.lo_);
  int h = std::max(hi(), o.hi());
  r.c_.assign(h - r.lo_ + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[lo_ - r.lo_ + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) {
    auto& x = r.c_[o.lo_ - r.lo_ + i];
    x = add_ck(x, o.c_[i]);
  }
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = add_ck(r.c_[i + j], mul_ck(c_[i], o.c_[j]));
  }
  r.normalize();
  return r;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) {
    if (!is_monomial() || (c_[0] != 1 && c_[0] != -1)) throw std::domain_error("negative power of a non-unit scalar");
    return mono(-lo_ * (-k), (c_[0] == -1 && (k % 2)) ? -1 : 1);
  }
  Scalar r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::optional<Scalar> Scalar::div_exact(const Scalar& d) const {
  if (d.is_zero()) throw std::domain_error("scalar division by zero");
  if (is_zero()) return Scalar();
  int qlo = lo_ - d.lo_;
  int qhi = hi() - d.hi();
  if (qhi < qlo) return std::nullopt;
  std::vector<int64_t> rem = c_;  // indexed from lo_
  std::vector<int64_t> q(qhi - qlo + 1, 0);
  int64_t lead = d.c_.back();
  for (int k = qhi; k >= qlo; --k) {
    int top = k + d.hi();
    int64_t t = rem[top - lo_];
    if (t % lead != 0) return std::nullopt;
    int64_t c = t / lead;
    q[k - qlo] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.c_.size(); ++j) {
      int idx = k + d.lo_ + static_cast<int>(j) - lo_;
      rem[idx] = add_ck(rem[idx], -mul_ck(c, d.c_[j]));
    }
  }
  for (int64_t x : rem)
    if (x != 0) return std::nullopt;
  Scalar r;
  r.lo_ = qlo;
  r.c_ = std::move(q);
  r.normalize();
  return r;
}

Scalar Scalar::v_inverse() const {
  Scalar r;
  if (is_zero()) return r;
  r.lo_ = -hi();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

Scalar Scalar::shift(int k) const {
  Scalar r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

std::vector<std::pair<int, int64_t>> Scalar::terms() const {
  std::vector<std::pair<int, int64_t>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

namespace {

struct DisplayTerm {
  int num;  // exponent numerator
  int den;  // 1 or 2
  int64_t c;
};

// returns (variable name, terms) for the chosen display variable
std::pair<std::string, std::vector<DisplayTerm>> display_terms(const Scalar& s, Var var) {
  std::vector<DisplayTerm> out;
  bool even = s.even_only();
  if (!even && (var == Var::q || var == Var::y || var == Var::t || var == Var::t_inv)) var = Var::v;
  std::string name;
  for (auto [k, c] : s.terms()) {
    switch (var) {
      case Var::v:
        name = "v";
        out.push_back({k, 1, c});
        break;
      case Var::q:
        name = "q";
        out.push_back({k / 2, 1, c});
        break;
      case Var::t:
        name = "t";
        out.push_back({k / 2, 1, c});
        break;
      case Var::t_inv:
        name = "t";
        out.push_back({-k / 2, 1, c});
        break;
      case Var::y:
        name = "y";
        out.push_back({k / 2, 1, ((k / 2) % 2) ? -c : c});
        break;
      case Var::qhalf:
        name = "q";
        if (k % 2 == 0)
          out.push_back({k / 2, 1, c});
        else
          out.push_back({k, 2, c});
        break;
    }
  }
  std::sort(out.begin(), out.end(), [](const DisplayTerm& a, const DisplayTerm& b) {
    return static_cast<int64_t>(a.num) * b.den > static_cast<int64_t>(b.num) * a.den;
  });
  return {name, out};
}

std::string render(const Scalar& s, Var var, bool latex) {
  if (s.is_zero()) return "0";
  auto [name, ts] = display_terms(s, var);
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    int64_t c = t.c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    int64_t a = c < 0 ? -c : c;
    bool unit = (t.num == 0);
    if (unit) {
      os << a;
    } else {
      if (a != 1) os << a << (latex ? "" : "*");
      os << name;
      bool one = (t.den == 1 && t.num == 1);
      if (!one) {
        os << "^";
        std::string e = t.den == 1 ? std::to_string(t.num) : std::to_string(t.num) + "/2";
        if (latex) {
          if (t.den == 2) e = (t.num < 0 ? "-" : "") + std::string("\\frac{") + std::to_string(t.num < 0 ? -t.num : t.num) + "}{2}";
          os << "{" << e << "}";
        } else if (t.num < 0 || t.den != 1) {
          os << "(" << e << ")";
        } else {
          os << e;
        }
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string Scalar::str(Var var) const { return render(*this, var, false); }

std::string Scalar::latex(Var var) const { return render(*this, var, true); }

}  // namespace chev
