#include "chev/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chev/chevalley.hpp"
#include "chev/csm.hpp"
#include "chev/oracle.hpp"
#include "chev/render.hpp"
#include "chev/special.hpp"
#include "chev/stable.hpp"

namespace chev {

namespace {

CharPoly E(const Weight& mu, const Scalar& s = Scalar(1)) { return CharPoly::exp(mu, s); }

CharPoly weyl_character(const RootSystem& R, const Weight& mu) {
  CharPoly num(R.rank()), den(R.rank());
  for (Elt w : R.elements()) {
    Scalar sg(R.length(w) % 2 ? -1 : 1);
    num += E(R.act(w, mu + R.rho()), sg);
    den += E(R.act(w, R.rho()), sg);
  }
  return num.div_exact_or_throw(den);
}

CharPoly lambda_y_id(const RootSystem& R) {
  CharPoly p = CharPoly::constant(R.rank(), Scalar(1));
  for (int b = 0; b < R.num_positive(); ++b) p *= one_plus(Mono{R.root(b), 2}, -1, R.rank());
  return p;
}

std::string pair_str(const RootSystem& R, Elt u, Elt w) { return "u=" + R.elt_str(u) + " w=" + R.elt_str(w); }

std::string mismatch(const RootSystem& R, const std::string& what, Elt u, Elt w, const CharPoly& a,
                     const CharPoly& b) {
  return what + " differs at " + pair_str(R, u, w) + ": " + poly_text(a) + " vs " + poly_text(b);
}

// first differing entry of two tables, or ""
std::string compare_tables(const RootSystem& R, const std::string& what, Elt w, const std::map<Elt, CharPoly>& a,
                           const std::map<Elt, CharPoly>& b) {
  if (a == b) return "";
  CharPoly zero(R.rank());
  for (Elt u : R.elements()) {
    auto ia = a.find(u), ib = b.find(u);
    const CharPoly& pa = ia == a.end() ? zero : ia->second;
    const CharPoly& pb = ib == b.end() ? zero : ib->second;
    if (!(pa == pb)) return mismatch(R, what, u, w, pa, pb);
  }
  return what + " differs";
}

std::string compare_h(const RootSystem& R, const std::string& what, Elt w, const std::map<Elt, HPoly>& a,
                      const std::map<Elt, HPoly>& b) {
  if (a == b) return "";
  HPoly zero(R.rank());
  for (Elt u : R.elements()) {
    auto ia = a.find(u), ib = b.find(u);
    const HPoly& pa = ia == a.end() ? zero : ia->second;
    const HPoly& pb = ib == b.end() ? zero : ib->second;
    if (!(pa == pb)) return what + " differs at " + pair_str(R, u, w) + ": " + h_text(pa) + " vs " + h_text(pb);
  }
  return what + " differs";
}

std::vector<Weight> box(int rank, int lo, int hi) {
  std::vector<Weight> out;
  Weight mu(rank);
  for (int i = 0; i < rank; ++i) mu[i] = lo;
  while (true) {
    out.push_back(mu);
    int i = rank - 1;
    while (i >= 0 && mu[i] == hi) mu[i--] = lo;
    if (i < 0) break;
    ++mu[i];
  }
  return out;
}

// (+-varpi_i, +-rho)
std::vector<Weight> basic_weights(const RootSystem& R) {
  std::vector<Weight> out;
  for (int i = 1; i <= R.rank(); ++i) {
    out.push_back(R.fundamental(i));
    out.push_back(-R.fundamental(i));
  }
  out.push_back(R.rho());
  out.push_back(-R.rho());
  return out;
}

struct Sample {
  Elt w;
  Weight lambda;
};

std::vector<Sample> samples(const RootSystem& R, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(R.label()));
  std::uniform_int_distribution<int> c(-opt.max_weight, opt.max_weight);
  std::uniform_int_distribution<size_t> e(0, R.order() - 1);
  std::vector<Sample> out;
  for (int k = 0; k < opt.samples; ++k) {
    Weight mu(R.rank());
    for (int i = 0; i < R.rank(); ++i) mu[i] = c(rng);
    Elt w = static_cast<Elt>(e(rng));
    out.push_back({w, mu});
  }
  return out;
}

// Exhaustive over the weight box in rank <= 2, sampled otherwise.
template <class F>
void fan_weights(std::vector<VerifyCase>& out, const std::string& suite, const SystemPtr& R, const VerifyOptions& opt,
                 F make) {
  if (R->rank() <= 2) {
    for (const auto& lam : box(R->rank(), -opt.max_weight, opt.max_weight)) {
      std::vector<Elt> ws = R->elements();
      out.push_back({suite, R->label() + " lambda=" + weight_text(lam), make(lam, ws)});
    }
  } else {
    for (const auto& s : samples(*R, opt))
      out.push_back({suite, R->label() + " lambda=" + weight_text(s.lambda) + " w=" + R->elt_str(s.w),
                     make(s.lambda, std::vector<Elt>{s.w})});
  }
}

void dualities_cases(std::vector<VerifyCase>& out, const SystemPtr& R) {
  for (const auto& lam : basic_weights(*R))
    for (Duality d : all_dualities())
      out.push_back({"dualities", R->label() + " " + duality_name(d) + " lambda=" + weight_text(lam), [R, lam, d] {
                       auto target = chevalley_grid(R, lam);
                       auto pred = duality_transform(chevalley_grid(R, duality_source_weight(*R, d, lam)), d);
                       if (!(pred.lambda == lam)) return std::string("source weight does not map back");
                       for (Elt w : R->elements())
                         for (Elt u : R->elements())
                           if (!(pred.at(u, w) == target.at(u, w)))
                             return mismatch(*R, duality_name(d), u, w, pred.at(u, w), target.at(u, w));
                       return std::string();
                     }});
}

void oracle_cases(std::vector<VerifyCase>& out, const SystemPtr& R, const VerifyOptions& opt) {
  fan_weights(out, "oracle", R, opt, [R](const Weight& lam, std::vector<Elt> ws) {
    return std::function<std::string()>([R, lam, ws] {
      for (Elt w : ws) {
        auto s = compare_tables(*R, "chain vs oracle", w, chevalley(R, w, lam).entries,
                                oracle_chevalley(R, w, lam).entries);
        if (!s.empty()) return s;
      }
      return std::string();
    });
  });
}

void methods_cases(std::vector<VerifyCase>& out, const SystemPtr& R, const VerifyOptions& opt) {
  fan_weights(out, "methods", R, opt, [R](const Weight& lam, std::vector<Elt> ws) {
    return std::function<std::string()>([R, lam, ws] {
      auto alt = chain_from_word(*R, lam, v_minus_lambda(*R, lam));
      auto neg = chain_default(*R, -lam);
      for (Elt w : ws) {
        auto t = chevalley(R, w, lam).entries;
        std::vector<std::pair<std::string, std::map<Elt, CharPoly>>> others = {
            {"operator", chevalley(R, w, lam, Method::operator_).entries},
            {"walk", chevalley(R, w, lam, Method::walk).entries},
            {"hecke bridge", chevalley(R, w, lam, Method::hecke).entries},
            {"v_{-lambda} chain", chevalley_chain(R, w, alt, 1).entries},
            {"chain of -lambda", chevalley_chain(R, w, neg, -1).entries}};
        for (const auto& [name, e] : others) {
          auto s = compare_tables(*R, "chain vs " + name, w, t, e);
          if (!s.empty()) return s;
        }
      }
      return std::string();
    });
  });
}

void stable_cases(std::vector<VerifyCase>& out, const SystemPtr& R) {
  std::vector<Weight> lams = basic_weights(*R);
  for (const auto& lam : lams) {
    out.push_back({"stable", R->label() + " routes lambda=" + weight_text(lam), [R, lam] {
                     for (Elt u : R->elements()) {
                       auto a = chevalley_stab(R, u, lam);
                       if (!(a == chevalley_stab(R, u, lam, StabRoute::chain)))
                         return "chain route differs at u=" + R->elt_str(u);
                       if (!(a == chevalley_stab(R, u, lam, StabRoute::oracle)))
                         return "oracle route differs at u=" + R->elt_str(u);
                     }
                     return std::string();
                   }});
    out.push_back({"stable", R->label() + " wall crossing lambda=" + weight_text(lam), [R, lam] {
                     auto wc = stab_by_wall_crossing(R, lam);
                     for (Elt w : R->elements())
                       if (!(wc[w] == stab_translate(R, w, lam)))
                         return "wall crossing differs at w=" + R->elt_str(w) + ": " + stab_text(*R, wc[w]) + " vs " +
                                stab_text(*R, stab_translate(R, w, lam));
                     return std::string();
                   }});
  }
  for (int i = 1; i <= R->rank(); ++i)
    out.push_back({"stable", R->label() + " Hecke action i=" + std::to_string(i), [R, i] {
                     for (Elt w : R->elements())
                       if (!(stab_expand(R, hecke_T_localized(i, stab_class(R, w))) == hecke_T_on_stab(R, i, w)))
                         return "two-case formula fails at w=" + R->elt_str(w);
                     return std::string();
                   }});
}

void hl_cases(std::vector<VerifyCase>& out, const SystemPtr& R, const VerifyOptions& opt) {
  for (const auto& lam : box(R->rank(), 0, opt.max_weight)) {
    out.push_back({"hl", R->label() + " lambda=" + weight_text(lam), [R, lam] {
                     CharPoly hl = hall_littlewood(R, lam, HLMethod::closed);
                     std::vector<std::pair<std::string, CharPoly>> others = {
                         {"formula 1", hall_littlewood(R, lam, HLMethod::chain_lenart)},
                         {"formula 2", hall_littlewood(R, lam, HLMethod::chain_new)},
                         {"H at y=-t", hall_littlewood_from_H(R, lam, 1)},
                         {"H at y=-1/t", hall_littlewood_from_H(R, lam, 2)}};
                     for (const auto& [name, p] : others)
                       if (!(p == hl)) return "closed form vs " + name + ": " + poly_text(hl, Var::t) + " vs " + poly_text(p, Var::t);
                     CharPoly at0 = hl.map_scalars([](const Scalar& s) { return Scalar(s.coeff(0)); });
                     if (!(at0 == weyl_character(*R, lam))) return std::string("t = 0 is not the Weyl character");
                     return std::string();
                   }});
  }
}

void whittaker_cases(std::vector<VerifyCase>& out, const SystemPtr& R, const VerifyOptions& opt) {
  for (const auto& mu : box(R->rank(), 0, opt.max_weight)) {
    Weight lam = -mu;
    out.push_back({"whittaker", R->label() + " lambda=" + weight_text(lam), [R, lam] {
                     CharPoly sum(R->rank()), twisted(R->rank());
                     for (Elt w : R->elements()) {
                       CharPoly W = whittaker(R, lam, w);
                       if (!(W == whittaker_chevalley(R, lam, w)))
                         return "operator vs Chevalley differs at w=" + R->elt_str(w);
                       if (!(W == whittaker_oracle(R, lam, w)))
                         return "operator vs localization differs at w=" + R->elt_str(w);
                       sum += W;
                       twisted += W * Scalar::y_pow(-R->length(w));
                     }
                     if (!(sum == lambda_y_id(*R) * weyl_character(*R, R->act(R->w0(), lam))))
                       return std::string("Casselman-Shalika sum fails");
                     if (!(twisted == big_R(R, lam - R->rho()).v_inverse() * E(R->rho())))
                       return std::string("R corollary fails");
                     return std::string();
                   }});
  }
  out.push_back({"whittaker", R->label() + " at rho", [R] {
                   for (Elt w : R->elements()) {
                     Scalar sg(R->length(w) % 2 ? -1 : 1);
                     if (!(whittaker_oracle(R, R->rho(), w) == E(R->rho(), sg)))
                       return "value at rho fails for w=" + R->elt_str(w);
                   }
                   return std::string();
                 }});
}

void csm_cases(std::vector<VerifyCase>& out, const SystemPtr& R, const VerifyOptions& opt) {
  std::vector<Weight> lams;
  for (int i = 1; i <= R->rank(); ++i) lams.push_back(R->fundamental(i));
  lams.push_back(R->rho());
  if (R->rank() <= 2)
    for (const auto& mu : box(R->rank(), -opt.max_weight, opt.max_weight)) lams.push_back(mu);
  for (const auto& lam : lams)
    out.push_back({"csm", R->label() + " lambda=" + weight_text(lam), [R, lam] {
                     for (Elt w : R->elements()) {
                       auto s = compare_h(*R, "CSM closed form vs oracle", w, csm_chevalley(R, w, lam),
                                          csm_chevalley_oracle(R, w, lam));
                       if (s.empty())
                         s = compare_h(*R, "SM closed form vs oracle", w, sm_chevalley(R, w, lam),
                                       sm_chevalley_oracle(R, w, lam));
                       if (!s.empty()) return s;
                     }
                     return std::string();
                   }});
  out.push_back({"csm", R->label() + " degenerate Hecke commutation", [R] {
                   std::vector<Weight> ws = basic_weights(*R);
                   for (Elt w : R->elements())
                     for (const auto& lam : ws)
                       if (degenerate_commute(*R, w, lam) != degenerate_rewrite(*R, w, lam))
                         return "commutation fails for w=" + R->elt_str(w) + " lambda=" + weight_text(lam);
                   return std::string();
                 }});
  out.push_back({"csm", R->label() + " duality of c_SM and s_M", [R] {
                   const CohOracle& O = coh_oracle_for(R);
                   HPoly one = CharPoly::constant(R->rank(), Scalar(1)), zero(R->rank());
                   for (Elt w : O.points())
                     for (Elt u : O.points())
                       if (!(O.pair(O.csm(w), O.sm(u)) == (u == w ? one : zero)))
                         return "pairing fails at " + pair_str(*R, u, w);
                   return std::string();
                 }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v{"dualities", "oracle", "methods", "stable", "hl", "whittaker", "csm"};
  return v;
}

const std::vector<std::string>& suite_default_types(const std::string& suite) {
  static const std::map<std::string, std::vector<std::string>> m{
      {"dualities", {"A2", "B2"}}, {"oracle", {"A2"}},     {"methods", {"A2", "B2"}},
      {"stable", {"A2"}},          {"hl", {"A2", "B2"}}, {"whittaker", {"A2", "B2"}},
      {"csm", {"A2", "B2"}}};
  auto it = m.find(suite);
  if (it == m.end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

std::vector<VerifyCase> suite_cases(const std::string& suite, const VerifyOptions& opt) {
  if (opt.max_weight < 0) throw std::invalid_argument("max-weight must be non-negative");
  std::vector<VerifyCase> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto c = suite_cases(s, opt);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
  const auto& types = opt.types.empty() ? suite_default_types(suite) : opt.types;
  for (const auto& lab : types) {
    auto R = RootSystem::make(lab);
    if (suite == "dualities") dualities_cases(out, R);
    else if (suite == "oracle") oracle_cases(out, R, opt);
    else if (suite == "methods") methods_cases(out, R, opt);
    else if (suite == "stable") stable_cases(out, R);
    else if (suite == "hl") hl_cases(out, R, opt);
    else if (suite == "whittaker") whittaker_cases(out, R, opt);
    else if (suite == "csm") csm_cases(out, R, opt);
    else throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

std::vector<CaseResult> run_cases(const std::vector<VerifyCase>& cases, int jobs) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < cases.size(); k = next++) {
      const auto& c = cases[k];
      CaseResult r{c.suite, c.name, false, "", 0};
      auto t0 = std::chrono::steady_clock::now();
      try {
        r.detail = c.run();
        r.pass = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      results[k] = std::move(r);
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<CaseResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
  return run_cases(suite_cases(suite, opt), opt.jobs);
}

bool all_passed(const std::vector<CaseResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

nlohmann::json verify_json(const std::vector<CaseResult>& results) {
  nlohmann::json cases = nlohmann::json::array();
  size_t failed = 0;
  for (const auto& r : results) {
    nlohmann::json c{{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}};
    if (!r.pass) {
      c["detail"] = r.detail;
      ++failed;
    }
    cases.push_back(c);
  }
  return {{"kind", "verify"}, {"cases", cases}, {"total", results.size()}, {"failed", failed}, {"pass", failed == 0}};
}

std::string verify_text(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  size_t failed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
    if (!r.pass) {
      os << " -- " << r.detail;
      ++failed;
    }
    os << "\n";
  }
  os << (failed ? "FAIL" : "PASS") << " " << results.size() - failed << "/" << results.size() << " cases\n";
  return os.str();
}

std::vector<PositivityReport> search_positivity(const std::vector<std::string>& types) {
  std::vector<PositivityReport> out;
  for (const auto& lab : types) {
    auto R = RootSystem::make(lab);
    for (int i = 1; i <= R->rank(); ++i) {
      Weight lam = R->fundamental(i);
      bool minuscule = true;
      for (int b = 0; b < R->num_positive(); ++b)
        if (R->pair(lam, b) > 1) minuscule = false;
      if (!minuscule) continue;
      auto chain = chain_default(*R, lam);
      for (Elt w : R->elements())
        for (const auto& [u, f] : chevalley_chain(R, w, chain, 1).entries)
          for (const auto& [mu, s] : f.by_weight()) {
            // y-coefficients of one weight; the coefficient of y^k is (-1)^k [v^{2k}]
            bool pos = false, neg = false;
            for (int k = s.lo(); k <= s.hi(); ++k) {
              int64_t c = s.coeff(k);
              if (c == 0) continue;
              if (k % 2 != 0) throw std::logic_error("odd power of v in a Chevalley coefficient");
              if ((k / 2) % 2) c = -c;
              (c > 0 ? pos : neg) = true;
            }
            if (pos && neg) out.push_back({lab, i, R->elt_str(w), R->elt_str(u), poly_text(f)});
          }
    }
  }
  return out;
}

}  // namespace chev
