#include "chev/render.hpp"

#include <sstream>

namespace chev {

namespace {

std::string weight_generic(const Weight& mu, const char* sym, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < mu.rank(); ++i) {
    int x = mu[i];
    if (x == 0) continue;
    if (x < 0) os << '-';
    else if (!first) os << '+';
    int a = x < 0 ? -x : x;
    if (a != 1) os << a;
    os << sym;
    if (latex) os << '_' << (i + 1);
    else os << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

bool needs_parens(const Scalar& s) { return s.terms().size() > 1; }

std::string term_text(const Scalar& s, const Weight& mu, Var var, bool latex, bool factored) {
  std::string e = latex ? "e^{" + weight_latex(mu) + "}" : "e^{" + weight_text(mu) + "}";
  bool zero = mu.is_zero();
  if (factored) {
    std::string f = scalar_factored(s, var);
    if (zero) return f;
    if (f == "1") return e;
    if (f == "-1") return "-" + e;
    return f + "*" + e;
  }
  std::string c = latex ? s.latex(var) : s.str(var);
  if (zero) return needs_parens(s) ? "(" + c + ")" : c;
  if (c == "1") return e;
  if (c == "-1") return "-" + e;
  if (needs_parens(s)) c = "(" + c + ")";
  return c + (latex ? "" : "*") + e;
}

std::string poly_generic(const CharPoly& p, Var var, bool latex, bool factored) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mu, s] : p.by_weight()) {
    std::string t = term_text(s, mu, var, latex, factored);
    if (!first) {
      if (!t.empty() && t[0] == '-')
        out += " - " + t.substr(1);
      else
        out += " + " + t;
    } else {
      out += t;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string weight_text(const Weight& mu) { return weight_generic(mu, "w", false); }

std::string weight_latex(const Weight& mu) { return weight_generic(mu, "\\varpi", true); }

std::string poly_text(const CharPoly& p, Var var) { return poly_generic(p, var, false, false); }

std::string poly_latex(const CharPoly& p, Var var) { return poly_generic(p, var, true, false); }

std::string poly_factored(const CharPoly& p, Var var) { return poly_generic(p, var, false, true); }

namespace {

std::string factored_generic(const Scalar& s0, Var var, bool latex) {
  if (s0.is_zero()) return "0";
  // factor family in y = -v^2: y+1, y-1, y^2+y+1, y^2+1, y^2-y+1
  const std::vector<Scalar> family = {
      Scalar(1) + Scalar::y(),
      Scalar::y() - Scalar(1),
      Scalar(1) + Scalar::y() + Scalar::y_pow(2),
      Scalar(1) + Scalar::y_pow(2),
      Scalar(1) - Scalar::y() + Scalar::y_pow(2),
  };
  Scalar s = s0;
  int low = s.lo();
  s = s.shift(-low);
  std::vector<std::pair<Scalar, int>> found;
  for (const auto& f : family) {
    int k = 0;
    while (true) {
      auto q = s.div_exact(f);
      if (!q) break;
      s = *q;
      ++k;
    }
    if (k) found.push_back({f, k});
  }
  // show each factor with a positive leading coefficient in the display variable
  for (auto& [f, k] : found) {
    int64_t lead = f.coeff(f.hi());
    if (var == Var::y && (f.hi() / 2) % 2) lead = -lead;
    if (lead < 0) {
      f = -f;
      if (k % 2) s = -s;
    }
  }
  s = s.shift(low);
  std::string out;
  auto str = [&](const Scalar& x) { return latex ? x.latex(var) : x.str(var); };
  const std::string times = latex ? "" : "*";
  std::string rest = str(s);
  bool unit_rest = (rest == "1" || rest == "-1");
  if (found.empty()) return rest;
  if (rest == "-1") out = "-";
  else if (!unit_rest) out = (needs_parens(s) ? "(" + rest + ")" : rest) + times;
  for (size_t i = 0; i < found.size(); ++i) {
    if (i) out += times;
    out += "(" + str(found[i].first) + ")";
    if (found[i].second > 1)
      out += latex ? "^{" + std::to_string(found[i].second) + "}" : "^" + std::to_string(found[i].second);
  }
  return out;
}

}  // namespace

std::string scalar_factored(const Scalar& s, Var var) { return factored_generic(s, var, false); }
std::string scalar_factored_latex(const Scalar& s, Var var) { return factored_generic(s, var, true); }

json scalar_json(const Scalar& s) {
  json a = json::array();
  for (auto [k, c] : s.terms()) a.push_back({k, c});
  return a;
}

Scalar scalar_from_json(const json& j) {
  Scalar s;
  for (const auto& t : j) s += Scalar::mono(t.at(0).get<int>(), t.at(1).get<int64_t>());
  return s;
}

json poly_json(const CharPoly& p) {
  json a = json::array();
  for (const auto& [mu, s] : p.by_weight()) a.push_back({{"weight", mu.to_vector()}, {"coeff", scalar_json(s)}});
  return a;
}

CharPoly poly_from_json(const json& j, int rank) {
  CharPoly p(rank);
  for (const auto& t : j) {
    auto v = t.at("weight").get<std::vector<int>>();
    if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("weight rank mismatch in JSON");
    p += CharPoly::exp(Weight::from(v), scalar_from_json(t.at("coeff")));
  }
  return p;
}

std::string frac_text(const CharFrac& f, Var var) {
  if (f.is_poly()) return poly_text(f.num(), var);
  std::string out = "(" + poly_text(f.num(), var) + ")/(";
  bool first = true;
  for (const auto& [g, k] : f.den()) {
    if (!first) out += "*";
    out += "(" + poly_text(g, var) + ")";
    if (k > 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out + ")";
}

}  // namespace chev
