#include "chev/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "chev/cache.hpp"
#include "chev/chevalley.hpp"
#include "chev/csm.hpp"
#include "chev/oracle.hpp"
#include "chev/render.hpp"
#include "chev/special.hpp"
#include "chev/stable.hpp"
#include "chev/verify.hpp"

namespace chev {

using json = nlohmann::json;

namespace {

const std::vector<std::string> kFormats{"text", "json", "latex"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "|") + x;
  return s;
}

std::set<int> parse_parabolic(const std::string& s, int rank) {
  std::set<int> P;
  if (s.empty()) return P;
  for (int i : parse_word(s)) {
    if (i < 1 || i > rank) throw std::invalid_argument("parabolic index " + std::to_string(i) + " out of range");
    P.insert(i);
  }
  return P;
}

std::string elt_latex(const RootSystem& R, Elt x) {
  if (x == R.id()) return "id";
  std::string s;
  for (int i : R.word(x)) s += "s_" + std::to_string(i);
  return s;
}

// Everything a job needs once it has been validated.
struct Job {
  JobSpec spec;
  SystemPtr R;
  Weight lambda;  // sign already applied
  std::vector<Elt> ws;
  std::optional<ResultCache> cache;
};

Job prepare(const JobSpec& spec) {
  spec.validate();
  Job j{spec, RootSystem::make(spec.type), Weight::from(spec.lambda), {}, std::nullopt};
  if (spec.sign < 0) j.lambda = -j.lambda;
  if (spec.w == "all") j.ws = j.R->elements();
  else j.ws = {j.R->parse_elt(spec.w)};
  if (!spec.cache_dir.empty()) j.cache.emplace(spec.cache_dir);
  else j.cache = ResultCache::from_env();
  return j;
}

json header(const Job& j) { return {{"kind", j.spec.command}, {"job", j.spec.to_json()}}; }

void no_latex(const Job& j) {
  if (j.spec.format == "latex") throw std::invalid_argument(j.spec.command + " has no LaTeX output");
}

Var parse_var(const std::string& s) {
  if (s == "y") return Var::y;
  if (s == "q") return Var::q;
  throw std::invalid_argument("display variable must be y or q");
}

struct ChevalleyExtra {
  std::string parabolic;
  std::string word;  // pinned alcove path for the chain method
  std::string var;   // empty: q for LaTeX, y otherwise
  bool factored = false;
};

int cmd_chevalley(const Job& j, const ChevalleyExtra& x, std::ostream& out) {
  const auto& R = j.R;
  auto P = parse_parabolic(x.parabolic, R->rank());
  Var var = parse_var(x.var.empty() ? (j.spec.format == "latex" ? "q" : "y") : x.var);
  if (!x.word.empty() && j.spec.method != "chain") throw std::invalid_argument("--word applies to the chain method");
  std::vector<ChevalleyTable> tables;
  for (Elt w : j.ws) {
    if (j.spec.method == "oracle") {
      if (!P.empty()) tables.push_back(ParabolicOracle(R, P).expand_product(w, j.lambda));
      else tables.push_back(oracle_chevalley(R, w, j.lambda));
    } else if (!x.word.empty()) {
      auto c = chain_from_word(*R, j.lambda, parse_word(x.word));
      tables.push_back(chevalley_chain(R, w, c, 1));
    } else if (!P.empty()) {
      tables.push_back(chevalley_parabolic(R, w, j.lambda, P, parse_method(j.spec.method)));
    } else {
      tables.push_back(cached_chevalley(j.cache ? &*j.cache : nullptr, R, w, j.lambda, parse_method(j.spec.method)));
    }
  }
  if (j.spec.format == "json") {
    json doc = header(j);
    doc["tables"] = json::array();
    for (const auto& t : tables) doc["tables"].push_back(table_json(t));
    out << doc.dump(2) << "\n";
  } else {
    bool first = true;
    for (const auto& t : tables) {
      if (!first) out << "\n";
      out << (j.spec.format == "latex" ? table_latex(t, var) : table_text(t, var, x.factored));
      first = false;
    }
  }
  return exit_ok;
}

int cmd_hecke(const Job& j, std::ostream& out) {
  no_latex(j);
  const RootSystem& R = *j.R;
  Weight lam = Weight::from(j.spec.lambda);
  json doc = header(j);
  doc["tables"] = json::array();
  std::ostringstream text;
  for (Elt w : j.ws) {
    Coeffs c;
    if (j.spec.method == "chain") c = transition_chain(R, w, chain_default(R, lam), j.spec.sign);
    else c = transition_direct(j.R, w, j.lambda, j.spec.method == "theta" ? DirectRoute::theta : DirectRoute::inverse);
    doc["tables"].push_back(coeffs_json(R, w, lam, j.spec.sign, c));
    if (text.tellp() > 0) text << "\n";
    text << "T_{w^-1}^-1 X^{" << weight_text(j.lambda) << "}, w = " << R.elt_str(w) << "\n";
    for (const auto& [k, s] : c)
      text << "  " << R.elt_str(k.w) << " X^{" << weight_text(k.mu) << "}: " << s.str(Var::q) << "\n";
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << text.str();
  return exit_ok;
}

int cmd_chain(const Job& j, const std::string& word, std::ostream& out) {
  no_latex(j);
  const RootSystem& R = *j.R;
  LambdaChain c;
  if (!word.empty()) c = chain_from_word(R, j.lambda, parse_word(word));
  else if (j.spec.method == "v_minus_lambda") c = chain_from_word(R, j.lambda, v_minus_lambda(R, j.lambda));
  else c = chain_default(R, j.lambda);
  if (j.spec.format == "json") {
    json doc = header(j);
    doc["lambda"] = j.lambda.to_vector();
    doc["word"] = c.word;
    doc["reduced"] = c.reduced;
    json steps = json::array();
    for (int k = 0; k < c.length(); ++k) {
      const auto& sc = R.root_simple_coords(c.betas[k]);
      steps.push_back({{"beta", sc}, {"level", c.levels[k]}});
    }
    doc["chain"] = steps;
    out << doc.dump(2) << "\n";
  } else {
    out << "lambda = " << weight_text(j.lambda) << ", word " << affine_word_str(c.word)
        << (c.reduced ? "" : " (not reduced)") << "\n";
    for (int k = 0; k < c.length(); ++k)
      out << "  beta_" << k + 1 << " = " << root_str(R, c.betas[k]) << "  level " << c.levels[k] << "\n";
  }
  return exit_ok;
}

int cmd_oracle(const Job& j, std::ostream& out) {
  no_latex(j);
  const auto& R = j.R;
  json doc = header(j);
  std::ostringstream text;
  if (j.spec.method == "product") {
    doc["tables"] = json::array();
    for (Elt w : j.ws) {
      auto t = oracle_chevalley(R, w, j.lambda);
      doc["tables"].push_back(table_json(t));
      if (text.tellp() > 0) text << "\n";
      text << table_text(t);
    }
  } else {
    const KOracle& K = oracle_for(R);
    doc["classes"] = json::array();
    for (Elt w : j.ws) {
      const LocalizedClass& F = j.spec.method == "mc" ? K.mc(w) : K.smc(w);
      LocalizedClass G = line_bundle(R, j.lambda) * F;
      std::string name = (j.spec.method == "mc" ? "MC(X(" : "SMC(Y(") + R->elt_str(w) + ")°)";
      if (!(j.lambda == R->zero())) name = "L_{" + weight_text(j.lambda) + "} (x) " + name;
      doc["classes"].push_back(class_json(G, name));
      text << name << "\n";
      for (Elt x : R->elements())
        if (!G[x].is_zero()) text << "  " << R->elt_str(x) << ": " << frac_text(G[x]) << "\n";
    }
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << text.str();
  return exit_ok;
}

int cmd_stab(const Job& j, bool translate, std::ostream& out) {
  no_latex(j);
  const auto& R = j.R;
  StabRoute route = j.spec.method == "chain" ? StabRoute::chain
                    : j.spec.method == "oracle" ? StabRoute::oracle
                                                : StabRoute::chevalley;
  json doc = header(j);
  doc["translate"] = translate;
  doc["tables"] = json::array();
  std::ostringstream text;
  for (Elt u : j.ws) {
    auto e = translate ? stab_translate(R, u, j.lambda, route) : chevalley_stab(R, u, j.lambda, route);
    json es = json::array();
    for (const auto& [w, c] : e) es.push_back({{"w", R->elt_str(w)}, {"coeff", poly_json(c)}});
    doc["tables"].push_back({{"u", R->elt_str(u)}, {"lambda", j.lambda.to_vector()}, {"entries", es}});
    if (text.tellp() > 0) text << "\n";
    if (translate) text << "stab_{A+" << weight_text(j.lambda) << "}(" << R->elt_str(u) << ")\n";
    else text << "L_{" << weight_text(j.lambda) << "} (x) stab(" << R->elt_str(u) << ")\n";
    text << " = " << stab_text(*R, e) << "\n";
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << text.str();
  return exit_ok;
}

int cmd_whittaker(const Job& j, std::ostream& out) {
  const auto& R = j.R;
  json doc = header(j);
  doc["lambda"] = j.lambda.to_vector();
  doc["values"] = json::array();
  std::ostringstream text, tex;
  for (Elt w : j.ws) {
    CharPoly W = j.spec.method == "chevalley" ? whittaker_chevalley(R, j.lambda, w)
                 : j.spec.method == "oracle"  ? whittaker_oracle(R, j.lambda, w)
                                              : whittaker(R, j.lambda, w);
    doc["values"].push_back({{"w", R->elt_str(w)}, {"value", poly_json(W)}});
    text << "W(" << weight_text(j.lambda) << ", " << R->elt_str(w) << ") = " << poly_text(W) << "\n";
    tex << "\\mathcal{W}_{" << weight_latex(j.lambda) << "," << elt_latex(*R, w) << "} &= " << poly_latex(W)
        << "\\\\\n";
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << (j.spec.format == "latex" ? tex.str() : text.str());
  return exit_ok;
}

int cmd_hl(const Job& j, bool terms, const std::string& display, std::ostream& out) {
  no_latex(j);
  const auto& R = j.R;
  HLMethod m = parse_hl_method(j.spec.method);
  CharPoly hl = hall_littlewood(R, j.lambda, m);
  json doc = header(j);
  doc["lambda"] = j.lambda.to_vector();
  doc["polynomial"] = poly_json(hl);
  std::string rendered;
  if (R->type() == 'A') {
    CharPoly gl = to_gl(*R, hl, weight_degree(*R, j.lambda));
    doc["gl"] = gl_text(gl);
    doc["schur"] = schur_text(schur_expand(gl));
    if (!display.empty() && display != "x" && display != "schur") throw std::invalid_argument("display must be schur or x");
    rendered = display == "x" ? gl_text(gl) : schur_text(schur_expand(gl));
  } else {
    if (!display.empty()) throw std::invalid_argument("--display applies to type A");
    rendered = poly_text(hl, Var::t);
  }
  doc["text"] = poly_text(hl, Var::t);
  std::ostringstream text;
  text << rendered << "\n";
  if (terms) {
    if (m == HLMethod::closed) throw std::invalid_argument("--terms needs a chain method");
    json ts = json::array();
    for (const auto& t : hl_terms(R, j.lambda, m)) {
      std::vector<int> J;
      for (int k : t.J) J.push_back(k + 1);
      ts.push_back({{"w", R->elt_str(t.w)}, {"J", J}, {"u", R->elt_str(t.u)}, {"term", poly_json(t.term)}});
      std::string jt;
      for (int k : J) jt += (jt.empty() ? "" : ",") + std::to_string(k);
      std::string tt = R->type() == 'A' ? gl_text(to_gl(*R, t.term, weight_degree(*R, j.lambda)))
                                        : poly_text(t.term, Var::t);
      text << "  w=" << R->elt_str(t.w) << " J={" << jt << "} u=" << R->elt_str(t.u) << ": " << tt << "\n";
    }
    doc["terms"] = ts;
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << text.str();
  return exit_ok;
}

int cmd_csm(const Job& j, const std::string& parabolic, const std::string& basis, std::ostream& out) {
  no_latex(j);
  const auto& R = j.R;
  auto P = parse_parabolic(parabolic, R->rank());
  if (basis != "csm" && basis != "sm") throw std::invalid_argument("basis must be csm or sm");
  bool oracle = j.spec.method == "oracle";
  json doc = header(j);
  doc["basis"] = basis;
  doc["tables"] = json::array();
  std::ostringstream text;
  std::vector<Elt> ws;
  for (Elt w : j.ws)
    if (j.spec.w != "all" || R->coset_min(w, P) == w) ws.push_back(w);
  for (Elt w : ws) {
    std::map<Elt, HPoly> t;
    if (basis == "csm") t = oracle ? csm_chevalley_oracle(R, w, j.lambda, P) : csm_chevalley(R, w, j.lambda, P);
    else t = oracle ? sm_chevalley_oracle(R, w, j.lambda, P) : sm_chevalley(R, w, j.lambda, P);
    doc["tables"].push_back(csm_table_json(*R, w, j.lambda, t));
    if (text.tellp() > 0) text << "\n";
    text << "c_1(L_{" << weight_text(j.lambda) << "}) " << basis << "(" << R->elt_str(w) << ")\n = "
         << (t.empty() ? std::string("0") : csm_table_text(*R, t, basis)) << "\n";
  }
  if (j.spec.format == "json") out << doc.dump(2) << "\n";
  else out << text.str();
  return exit_ok;
}

std::vector<std::string> split_types(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    std::istringstream is(s);
    std::string t;
    while (std::getline(is, t, ','))
      if (!t.empty()) out.push_back(t);
  }
  return out;
}

}  // namespace

json JobSpec::to_json() const {
  return {{"command", command}, {"type", type},     {"lambda", lambda},      {"w", w},
          {"method", method},   {"sign", sign},     {"format", format},      {"cache_dir", cache_dir}};
}

JobSpec JobSpec::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("job spec must be a JSON object");
  static const std::set<std::string> known{"command", "type", "lambda", "w", "method", "sign", "format", "cache_dir"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw std::invalid_argument("unknown job field '" + k + "'");
  JobSpec s;
  try {
    if (j.contains("command")) s.command = j["command"].get<std::string>();
    if (j.contains("type")) s.type = j["type"].get<std::string>();
    if (j.contains("lambda")) s.lambda = j["lambda"].get<std::vector<int>>();
    if (j.contains("w")) s.w = j["w"].get<std::string>();
    if (j.contains("method")) s.method = j["method"].get<std::string>();
    if (j.contains("sign")) s.sign = j["sign"].get<int>();
    if (j.contains("format")) s.format = j["format"].get<std::string>();
    if (j.contains("cache_dir")) s.cache_dir = j["cache_dir"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad job spec: ") + e.what());
  }
  s.validate();
  return s;
}

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> v{"chevalley", "hecke-coeffs", "chain", "oracle",
                                          "stab",      "whittaker",    "hl",    "csm"};
  return v;
}

const std::vector<std::string>& command_methods(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> m{
      {"chevalley", {"chain", "operator", "walk", "hecke", "oracle"}},
      {"hecke-coeffs", {"chain", "direct", "theta"}},
      {"chain", {"lex", "v_minus_lambda"}},
      {"oracle", {"product", "mc", "smc"}},
      {"stab", {"chevalley", "chain", "oracle"}},
      {"whittaker", {"operator", "chevalley", "oracle"}},
      {"hl", {"closed", "chain_lenart", "chain_new"}},
      {"csm", {"closed", "oracle"}}};
  auto it = m.find(command);
  if (it == m.end()) throw std::invalid_argument("unknown command '" + command + "'");
  return it->second;
}

void JobSpec::validate() const {
  const auto& methods = command_methods(command);
  if (!contains(methods, method))
    throw std::invalid_argument("method '" + method + "' is not one of " + joined(methods) + " for " + command);
  auto R = RootSystem::make(type);
  if (static_cast<int>(lambda.size()) != R->rank())
    throw std::invalid_argument("lambda has " + std::to_string(lambda.size()) + " coordinates, " + type + " needs " +
                                std::to_string(R->rank()));
  if (w != "all") R->parse_elt(w);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be + or -");
  if (!contains(kFormats, format)) throw std::invalid_argument("format must be one of " + joined(kFormats));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"chevcalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chevalley formulas for motivic Chern classes of Schubert cells"};
  app.set_version_flag("--version", std::string(CHEV_VERSION));
  app.require_subcommand(1);

  // Options shared by the job commands
  struct JobOpts {
    std::string type = "A2", lambda, w = "all", method, sign = "+", format = "text", cache_dir, job_file;
    bool emit_job = false;
    CLI::App* sub = nullptr;
  };
  std::map<std::string, JobOpts> jobs;
  ChevalleyExtra cx;
  std::string chain_word, csm_parabolic, csm_basis = "csm", hl_display;
  bool stab_translate_flag = false, hl_terms_flag = false;

  const std::map<std::string, std::string> help{
      {"chevalley", "Chevalley coefficients C^w_{u,lambda} of L_lambda (x) MC(X(w)°)"},
      {"hecke-coeffs", "transition coefficients T_{w^-1}^-1 X^lambda = sum c X^mu T_{u^-1}^-1"},
      {"chain", "print a lambda-chain"},
      {"oracle", "localization oracle: expansions and class restrictions"},
      {"stab", "Chevalley formula for stable classes"},
      {"whittaker", "Iwahori-Whittaker functions"},
      {"hl", "Hall-Littlewood polynomials"},
      {"csm", "Chevalley formula for CSM and Segre-MacPherson classes"}};
  for (const auto& name : job_commands()) {
    JobOpts& o = jobs[name];
    o.sub = app.add_subcommand(name, help.at(name));
    o.sub->add_option("--type", o.type, "root system label, e.g. A2, B3, G2");
    o.sub->add_option("--lambda", o.lambda, "weight in fundamental-weight coordinates, e.g. 2,1")->allow_extra_args(false);
    o.sub->add_option("--w", o.w, "Weyl group element as a word s2*s1, or all");
    o.sub->add_option("--method", o.method, joined(command_methods(name)));
    o.sub->add_option("--sign", o.sign, "+ or -; - replaces lambda by -lambda");
    o.sub->add_option("--format", o.format, "text|json|latex");
    o.sub->add_option("--cache-dir", o.cache_dir, "result cache directory (default: $CHEV_CACHE_DIR)");
    o.sub->add_option("--job", o.job_file, "read the job from a JSON file; flags given explicitly override it");
    o.sub->add_flag("--emit-job", o.emit_job, "print the validated job as JSON and exit");
  }
  jobs["chevalley"].sub->add_option("--parabolic", cx.parabolic, "simple roots of P, e.g. 2 or 1,3");
  jobs["chevalley"].sub->add_option("--word", cx.word, "affine word of the alcove path for the chain method");
  jobs["chevalley"].sub->add_option("--var", cx.var, "display variable y|q (default y, q for LaTeX)");
  jobs["chevalley"].sub->add_flag("--factored", cx.factored, "factor each coefficient");
  jobs["chain"].sub->add_option("--word", chain_word, "affine word of the alcove path");
  jobs["stab"].sub->add_flag("--translate", stab_translate_flag, "expand stab_{A+lambda}(w) instead");
  jobs["hl"].sub->add_flag("--terms", hl_terms_flag, "list the chain terms");
  jobs["hl"].sub->add_option("--display", hl_display, "schur|x (type A)");
  jobs["csm"].sub->add_option("--parabolic", csm_parabolic, "simple roots of P");
  jobs["csm"].sub->add_option("--basis", csm_basis, "csm|sm");

  VerifyOptions vopt;
  std::string suite = "all", vformat = "text";
  std::vector<std::string> vtypes;
  auto* vsub = app.add_subcommand("verify", "run an invariant suite");
  vsub->add_option("--suite", suite, "dualities|oracle|methods|stable|hl|whittaker|csm|all");
  vsub->add_option("--type", vtypes, "root systems (repeat or comma-separate)");
  vsub->add_option("--max-weight", vopt.max_weight, "weight coordinates range over [-m, m]");
  vsub->add_option("--samples", vopt.samples, "sampled (w, lambda) pairs in rank >= 3");
  vsub->add_option("--seed", vopt.seed, "sampling seed");
  vsub->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
  vsub->add_option("--format", vformat, "text|json");

  std::vector<std::string> ptypes;
  std::string pformat = "text";
  auto* psub = app.add_subcommand("search-positivity", "scan minuscule Chevalley coefficients for mixed-sign y-coefficients");
  psub->add_option("--type", ptypes, "root systems (default A2,A3,A4,B2,B3,C3,D4)");
  psub->add_option("--format", pformat, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << CHEV_VERSION << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (vsub->parsed()) {
      if (suite != "all" && !contains(suite_names(), suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
      if (vformat != "text" && vformat != "json") throw std::invalid_argument("verify format must be text or json");
      vopt.types = split_types(vtypes);
      for (const auto& t : vopt.types) RootSystem::make(t);
      auto res = run_verify(suite, vopt);
      if (vformat == "json") {
        json doc = verify_json(res);
        doc["suite"] = suite;
        out << doc.dump(2) << "\n";
      } else {
        out << verify_text(res);
      }
      return all_passed(res) ? exit_ok : exit_failed;
    }
    if (psub->parsed()) {
      if (pformat != "text" && pformat != "json") throw std::invalid_argument("format must be text or json");
      auto types = split_types(ptypes);
      if (types.empty()) types = {"A2", "A3", "A4", "B2", "B3", "C3", "D4"};
      for (const auto& t : types) RootSystem::make(t);
      auto found = search_positivity(types);
      if (pformat == "json") {
        json doc{{"kind", "search-positivity"}, {"types", types}, {"negative", json::array()}};
        for (const auto& f : found)
          doc["negative"].push_back({{"type", f.type}, {"i", f.i}, {"w", f.w}, {"u", f.u}, {"coeff", f.coeff}});
        doc["count"] = found.size();
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& f : found)
          out << f.type << " lambda=w" << f.i << " w=" << f.w << " u=" << f.u << ": " << f.coeff << "\n";
        out << found.size() << " coefficients with mixed-sign y-coefficients in " << joined(types) << "\n";
      }
      return exit_ok;
    }

    for (auto& [name, o] : jobs) {
      if (!o.sub->parsed()) continue;
      JobSpec spec;
      spec.command = name;
      spec.method = command_methods(name).front();
      if (!o.job_file.empty()) {
        std::ifstream in(o.job_file);
        if (!in) throw std::runtime_error("cannot read job file " + o.job_file);
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("job file is not valid JSON");
        spec = JobSpec::from_json(j);
        if (spec.command != name) throw std::invalid_argument("job file is for '" + spec.command + "'");
      }
      auto given = [&](const char* flag) { return o.sub->get_option(flag)->count() > 0 || o.job_file.empty(); };
      if (given("--type")) spec.type = o.type;
      auto R = RootSystem::make(spec.type);
      if (o.sub->get_option("--lambda")->count() > 0) spec.lambda = parse_weight(o.lambda, R->rank()).to_vector();
      else if (o.job_file.empty()) throw std::invalid_argument("--lambda is required");
      if (given("--w")) spec.w = o.w;
      if (o.sub->get_option("--method")->count() > 0) spec.method = o.method;
      if (given("--sign")) {
        if (o.sign != "+" && o.sign != "-") throw std::invalid_argument("sign must be + or -");
        spec.sign = o.sign == "+" ? 1 : -1;
      }
      if (given("--format")) spec.format = o.format;
      if (given("--cache-dir")) spec.cache_dir = o.cache_dir;
      spec.validate();
      if (o.emit_job) {
        out << spec.to_json().dump(2) << "\n";
        return exit_ok;
      }
      Job job = prepare(spec);
      if (name == "chevalley") return cmd_chevalley(job, cx, out);
      if (name == "hecke-coeffs") return cmd_hecke(job, out);
      if (name == "chain") return cmd_chain(job, chain_word, out);
      if (name == "oracle") return cmd_oracle(job, out);
      if (name == "stab") return cmd_stab(job, stab_translate_flag, out);
      if (name == "whittaker") return cmd_whittaker(job, out);
      if (name == "hl") return cmd_hl(job, hl_terms_flag, hl_display, out);
      if (name == "csm") return cmd_csm(job, csm_parabolic, csm_basis, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}

}  // namespace chev
