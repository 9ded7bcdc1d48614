#include "chev/chevalley.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chev/render.hpp"

namespace chev {

namespace {

int sgn(int k) { return (k % 2) ? -1 : 1; }

void drop_zeros(std::map<Elt, CharPoly>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero()) it = m.erase(it);
    else ++it;
  }
}

Scalar minus_one_minus_y() { return -(Scalar(1) + Scalar::y()); }

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::chain: return "chain";
    case Method::operator_: return "operator";
    case Method::walk: return "walk";
    case Method::hecke: return "hecke";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "chain") return Method::chain;
  if (s == "operator") return Method::operator_;
  if (s == "walk") return Method::walk;
  if (s == "hecke") return Method::hecke;
  throw std::invalid_argument("unknown method: " + s);
}

CharPoly ChevalleyTable::at(Elt u) const {
  auto it = entries.find(u);
  return it == entries.end() ? CharPoly(sys->rank()) : it->second;
}

CharPoly ChevalleyGrid::at(Elt u, Elt w) const {
  auto it = entries.find({u, w});
  return it == entries.end() ? CharPoly(sys->rank()) : it->second;
}

std::vector<ChevalleyTerm> chevalley_terms(const RootSystem& sys, Elt w, const LambdaChain& c, int sign, Elt target,
                                           bool check_alternative) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::vector<ChevalleyTerm> out;
  const int lw = sys.length(w);
  const Weight& lam = c.lambda;
  for_each_chain_path(
      sys, c, w, sign > 0 ? PathRule::greater : PathRule::less,
      [&](const std::vector<int>& J, Elt u) {
        auto cr = chain_reflections(sys, c, J);
        const int k = static_cast<int>(J.size());
        const int e = lw - sys.length(u) - k;
        if (e % 2 != 0 || e < 0) throw std::logic_error("odd power of -y in a chain term; chain is corrupt");
        ChevalleyTerm t;
        t.J = J;
        t.u = u;
        t.n_J = cr.n_J;
        Scalar base = sign > 0 ? minus_one_minus_y() : Scalar(1) + Scalar::y();
        t.coeff = base.pow(k) * Scalar::neg_y_pow(e / 2) * Scalar(sgn(cr.n_J));
        Weight alt;
        if (sign > 0) {
          t.exponent = -sys.act(w, cr.rhat_lt.apply(sys, -lam));
          if (check_alternative) alt = sys.act(u, cr.rtilde_gt.apply(sys, lam));
        } else {
          t.exponent = -sys.act(w, cr.rtilde_gt.apply(sys, lam));
          if (check_alternative) alt = sys.act(u, cr.rhat_lt.apply(sys, -lam));
        }
        if (check_alternative && alt != t.exponent)
          throw std::logic_error("alternative exponent disagrees at J of size " + std::to_string(k));
        out.push_back(std::move(t));
      },
      target);
  return out;
}

ChevalleyTable chevalley_chain(const SystemPtr& sys, Elt w, const LambdaChain& c, int sign, bool check_alternative) {
  ChevalleyTable t{sys, w, c.lambda * sign, {}, "chain"};
  for (const auto& term : chevalley_terms(*sys, w, c, sign, -1, check_alternative)) {
    auto it = t.entries.find(term.u);
    if (it == t.entries.end()) it = t.entries.emplace(term.u, CharPoly(sys->rank())).first;
    it->second += CharPoly::exp(term.exponent, term.coeff);
  }
  drop_zeros(t.entries);
  return t;
}

ChevalleyTable chevalley_operator(const SystemPtr& sys, Elt w, const LambdaChain& c) {
  const RootSystem& R = *sys;
  const int h = R.coxeter_number();
  const int r = R.rank();
  // exponents live in the h-scaled lattice: E^mu multiplies the u-component by e^{u(mu)}
  std::map<Elt, CharPoly> state{{w, CharPoly::constant(r, Scalar(1))}};
  const Weight rho = R.rho();
  for (int j = 0; j < c.length(); ++j) {
    const int b = c.betas[j];
    const Weight& beta = R.root(b);
    const int rb = static_cast<int>(R.pair(rho, b));
    const Elt sb = R.reflection(b);
    std::map<Elt, CharPoly> next;
    for (const auto& [u, f] : state) {
      auto add = [&](Elt x, const CharPoly& p) {
        auto it = next.find(x);
        if (it == next.end()) next.emplace(x, p);
        else it->second += p;
      };
      add(u, f * CharPoly::exp(R.act(u, beta)));
      Elt x = R.mul(u, sb);
      const int d = R.length(u) - R.length(x);
      if (d > 0) {
        if ((d - 1) % 2 != 0) throw std::logic_error("reflection changed length by an even amount");
        Scalar fac = minus_one_minus_y() * Scalar::neg_y_pow((d - 1) / 2);
        if (!R.is_positive(b)) fac = -fac;
        add(x, f * CharPoly::exp(R.act(x, beta * rb), fac));
      }
    }
    drop_zeros(next);
    state = std::move(next);
  }
  ChevalleyTable t{sys, w, c.lambda, {}, "operator"};
  for (const auto& [u, f] : state) {
    t.entries[u] = f.map_weights([&](const Weight& m) {
      if (!m.divisible_by(h)) throw std::logic_error("operator formula left a fractional exponent " + m.str());
      return m.divided_by(h);
    });
  }
  drop_zeros(t.entries);
  return t;
}

ChevalleyTable chevalley_walk(const SystemPtr& sys, Elt w, const Weight& lambda, const std::vector<int>& word) {
  const RootSystem& R = *sys;
  auto cr = walk_crossings(R, word);
  std::vector<int> roots;
  for (const auto& x : cr) roots.push_back(x.h.root);
  // the walk must end at A - lambda
  {
    AffineMap v = AffineMap::identity(R);
    for (const auto& x : cr) v = AffineMap::reflection(R, x.h).then_after(R, v);
    const int h = R.coxeter_number();
    Weight p = R.act(v.lin, R.rho()) + v.t * h + lambda * h;
    for (int i = 0; i < R.rank(); ++i)
      if (p[i] <= 0) throw std::invalid_argument("walk does not end at A - lambda");
    if (R.pair(p, R.theta()) >= h) throw std::invalid_argument("walk does not end at A - lambda");
  }
  ChevalleyTable t{sys, w, lambda, {}, "walk"};
  const int lw = R.length(w);
  for_each_reflection_path(R, roots, w, PathRule::greater, [&](const std::vector<int>& M, Elt u) {
    AffineMap rh = AffineMap::identity(R);
    int fplus = 0;
    for (int m : M) {
      rh = rh.then_after(R, AffineMap::reflection(R, cr[m].h));
      if (cr[m].eps > 0) ++fplus;
    }
    const int k = static_cast<int>(M.size());
    const int e = lw - R.length(u) - k;
    if (e % 2 != 0) throw std::logic_error("odd power of -y in a walk term");
    Scalar coeff = minus_one_minus_y().pow(k) * Scalar::neg_y_pow(e / 2) * Scalar(sgn(fplus));
    Weight ex = -R.act(w, rh.apply(R, -lambda));
    auto it = t.entries.find(u);
    if (it == t.entries.end()) it = t.entries.emplace(u, CharPoly(R.rank())).first;
    it->second += CharPoly::exp(ex, coeff);
  });
  drop_zeros(t.entries);
  return t;
}

ChevalleyTable chevalley_hecke(const SystemPtr& sys, Elt w, const Weight& lambda) {
  // C_{u,-lam}^w = sum_mu y^{l(w)-l(u)} e^{-mu} c_{u,mu}^{w,lam}, here lam = -lambda
  const RootSystem& R = *sys;
  auto c = transition_direct(sys, w, -lambda);
  ChevalleyTable t{sys, w, lambda, {}, "hecke"};
  for (const auto& [k, s] : c) {
    int d = R.length(w) - R.length(k.w);
    auto it = t.entries.find(k.w);
    if (it == t.entries.end()) it = t.entries.emplace(k.w, CharPoly(R.rank())).first;
    it->second += CharPoly::exp(-k.mu, s * Scalar::y_pow(d));
  }
  drop_zeros(t.entries);
  return t;
}

ChevalleyTable chevalley(const SystemPtr& sys, Elt w, const Weight& lambda, Method m) {
  switch (m) {
    case Method::chain: return chevalley_chain(sys, w, chain_default(*sys, lambda), 1);
    case Method::operator_: return chevalley_operator(sys, w, chain_default(*sys, lambda));
    case Method::walk: return chevalley_walk(sys, w, lambda, v_minus_lambda(*sys, lambda));
    case Method::hecke: return chevalley_hecke(sys, w, lambda);
  }
  throw std::invalid_argument("unknown method");
}

ChevalleyTable chevalley_parabolic(const SystemPtr& sys, Elt w, const Weight& lambda, const std::set<int>& parabolic,
                                   Method m) {
  const RootSystem& R = *sys;
  for (int i : parabolic) {
    if (i < 1 || i > R.rank()) throw std::invalid_argument("parabolic index out of range");
    if (lambda[i - 1] != 0) throw std::invalid_argument("weight is not trivial on the parabolic roots");
  }
  if (R.coset_min(w, parabolic) != w) throw std::invalid_argument("w is not a minimal coset representative");
  ChevalleyTable full = chevalley(sys, w, lambda, m);
  ChevalleyTable t{sys, w, lambda, {}, full.method + "/parabolic"};
  for (const auto& [v, f] : full.entries) {
    Elt u = R.coset_min(v, parabolic);
    auto it = t.entries.find(u);
    if (it == t.entries.end()) it = t.entries.emplace(u, CharPoly(R.rank())).first;
    it->second += f * Scalar::neg_y_pow(R.length(v) - R.length(u));
  }
  drop_zeros(t.entries);
  return t;
}

std::map<Elt, CharPoly> chevalley_bundle(const SystemPtr& sys, Elt w, const CharPoly& character, Method m) {
  std::map<Elt, CharPoly> out;
  for (const auto& [mu, a] : character.by_weight()) {
    auto t = chevalley(sys, w, mu, m);
    for (const auto& [u, f] : t.entries) {
      auto it = out.find(u);
      if (it == out.end()) out.emplace(u, f * a);
      else it->second += f * a;
    }
  }
  drop_zeros(out);
  return out;
}

ChevalleyGrid chevalley_grid(const SystemPtr& sys, const Weight& lambda, Method m) {
  ChevalleyGrid g{sys, lambda, {}};
  for (Elt w : sys->elements()) {
    auto t = chevalley(sys, w, lambda, m);
    for (const auto& [u, f] : t.entries) g.entries[{u, w}] = f;
  }
  return g;
}

std::string duality_name(Duality d) {
  switch (d) {
    case Duality::serre: return "serre";
    case Duality::star: return "star";
    case Duality::dynkin: return "dynkin";
    case Duality::serre_star: return "serre_star";
    case Duality::star_dynkin: return "star_dynkin";
  }
  return "?";
}

Duality parse_duality(const std::string& s) {
  for (Duality d : all_dualities())
    if (duality_name(d) == s) return d;
  if (s == "palindromic") return Duality::serre_star;
  throw std::invalid_argument("unknown duality: " + s);
}

const std::vector<Duality>& all_dualities() {
  static const std::vector<Duality> v{Duality::serre, Duality::star, Duality::dynkin, Duality::serre_star,
                                      Duality::star_dynkin};
  return v;
}

Weight duality_source_weight(const RootSystem& sys, Duality d, const Weight& lambda) {
  switch (d) {
    case Duality::serre:
    case Duality::star: return -lambda;
    case Duality::dynkin: return -sys.act(sys.w0(), lambda);
    case Duality::serre_star: return lambda;
    case Duality::star_dynkin: return sys.act(sys.w0(), lambda);
  }
  throw std::invalid_argument("unknown duality");
}

ChevalleyGrid duality_transform(const ChevalleyGrid& src, Duality d) {
  const RootSystem& R = *src.sys;
  const Elt w0 = R.w0();
  // target weight: every source map above is an involution on weights
  Weight lambda = duality_source_weight(R, d, src.lambda);
  ChevalleyGrid out{src.sys, lambda, {}};
  for (Elt w : R.elements())
    for (Elt u : R.elements()) {
      const int d_len = R.length(w) - R.length(u);
      CharPoly p(R.rank());
      switch (d) {
        case Duality::serre:
          p = src.at(R.mul(w0, w), R.mul(w0, u)).dual_vee().weyl_act(R, w0) * Scalar::neg_y_pow(d_len);
          break;
        case Duality::star:
          p = src.at(R.mul(w0, w), R.mul(w0, u)).iota(R) * Scalar(sgn(d_len < 0 ? -d_len : d_len));
          break;
        case Duality::dynkin:
          p = src.at(R.mul(R.mul(w0, u), w0), R.mul(R.mul(w0, w), w0)).iota(R);
          break;
        case Duality::serre_star:
          p = src.at(u, w).v_inverse() * Scalar::y_pow(d_len);
          break;
        case Duality::star_dynkin:
          p = src.at(R.mul(w, w0), R.mul(u, w0)) * Scalar(sgn(d_len < 0 ? -d_len : d_len));
          break;
      }
      if (!p.is_zero()) out.entries[{u, w}] = p;
    }
  return out;
}

std::vector<PositivityTerm> positivity_structure(const RootSystem& sys, Elt w, const LambdaChain& c, int sign) {
  if (!sys.is_dominant(c.lambda)) throw std::invalid_argument("positivity structure needs a dominant weight");
  std::vector<PositivityTerm> out;
  const int lw = sys.length(w);
  for (const auto& t : chevalley_terms(sys, w, c, sign)) {
    PositivityTerm p;
    p.J = t.J;
    p.u = t.u;
    p.mu = t.exponent;
    p.b = static_cast<int>(t.J.size());
    p.a = (lw - sys.length(t.u) - p.b) / 2;
    // (-1-y) = q-1, (1+y) = -(q-1), (-y) = q
    p.sign = sgn(t.n_J) * (sign > 0 ? 1 : sgn(p.b));
    out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json table_json(const ChevalleyTable& t) {
  const RootSystem& R = *t.sys;
  nlohmann::json j;
  j["type"] = R.label();
  j["w"] = R.elt_str(t.w);
  j["lambda"] = t.lambda.to_vector();
  j["method"] = t.method;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [u, f] : t.entries) es.push_back({{"u", R.elt_str(u)}, {"coeff", poly_json(f)}});
  j["entries"] = es;
  return j;
}

nlohmann::json coeffs_json(const RootSystem& sys, Elt w, const Weight& lambda, int sign, const Coeffs& c) {
  nlohmann::json j;
  j["type"] = sys.label();
  j["w"] = sys.elt_str(w);
  j["lambda"] = lambda.to_vector();
  j["sign"] = sign;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [k, s] : c)
    es.push_back({{"u", sys.elt_str(k.w)}, {"mu", k.mu.to_vector()}, {"coeff", scalar_json(s)}});
  j["entries"] = es;
  return j;
}

std::string table_text(const ChevalleyTable& t, Var var, bool factored) {
  const RootSystem& R = *t.sys;
  std::ostringstream os;
  os << "L_{" << weight_text(t.lambda) << "} (x) MC(" << R.elt_str(t.w) << ")\n";
  // longest u first, as in the worked examples
  std::vector<Elt> us;
  for (const auto& kv : t.entries) us.push_back(kv.first);
  std::stable_sort(us.begin(), us.end(), [&](Elt a, Elt b) { return R.length(a) > R.length(b); });
  for (Elt u : us) {
    const CharPoly& f = t.entries.at(u);
    os << "  " << R.elt_str(u) << ": " << (factored ? poly_factored(f, var) : poly_text(f, var)) << "\n";
  }
  return os.str();
}

std::string table_latex(const ChevalleyTable& t, Var var) {
  const RootSystem& R = *t.sys;
  auto elt = [&](Elt x) {
    if (x == R.id()) return std::string("id");
    std::string s;
    for (int i : R.word(x)) s += "s_" + std::to_string(i);
    return s;
  };
  std::vector<Elt> us;
  for (const auto& kv : t.entries) us.push_back(kv.first);
  std::stable_sort(us.begin(), us.end(), [&](Elt a, Elt b) { return R.length(a) > R.length(b); });
  const std::string mc = var == Var::q ? "MC_{-q}" : "MC_y";
  // a common scalar is pulled out of the exponentials, as in the worked examples
  auto coeff = [&](const CharPoly& f) {
    auto bw = f.by_weight();
    const Scalar& s0 = bw.begin()->second;
    for (const auto& [mu, s] : bw)
      if (!(s == s0)) return "\\left(" + poly_latex(f, var) + "\\right)";
    std::string sum;
    for (const auto& [mu, s] : bw) sum += (sum.empty() ? "" : "+") + std::string("e^{") + weight_latex(mu) + "}";
    if (bw.size() > 1) sum = "(" + sum + ")";
    std::string c = scalar_factored_latex(s0, var);
    if (c == "1") return sum;
    if (c == "-1") return "-" + sum;
    bool product = c.front() == '(' || (c.size() > 1 && c[0] == '-' && c[1] == '(');
    if (c.find(' ') != std::string::npos && !product) c = "(" + c + ")";
    return c + sum;
  };
  std::ostringstream os;
  os << "\\mathcal{L}_{" << weight_latex(t.lambda) << "}\\otimes " << mc << "(X(" << elt(t.w) << ")^\\circ)\n";
  bool first = true;
  for (Elt u : us) {
    std::string c = coeff(t.entries.at(u));
    std::string lead = first ? "&= " : "&+ ";
    if (!first && c.front() == '-') {
      lead = "&- ";
      c = c.substr(1);
    }
    os << lead << c << " " << mc << "(X(" << elt(u) << ")^\\circ)\\\\\n";
    first = false;
  }
  return os.str();
}

}  // namespace chev
