#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "chev/cache.hpp"
#include "chev/cli.hpp"
#include "chev/verify.hpp"

using namespace chev;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// runs the installed binary through the shell; stdout only
Run binary(const std::string& args) {
  std::string cmd = std::string(CHEVCALC_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("chevcalc_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int validate(const std::vector<fs::path>& files) {
  std::string cmd = "python3 " + std::string(CHEV_VALIDATOR) + " " + CHEV_SCHEMA_PATH;
  for (const auto& f : files) cmd += " " + f.string();
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("job specs round trip through JSON") {
  JobSpec a;
  a.lambda = {2, 1};
  CHECK(JobSpec::from_json(a.to_json()) == a);
  JobSpec b{"csm", "A3", {0, 1, 0}, "s1*s2", "oracle", -1, "json", "/tmp/x"};
  CHECK(JobSpec::from_json(b.to_json()) == b);
  JobSpec c{"hl", "G2", {1, 1}, "all", "chain_new", 1, "text", ""};
  CHECK(JobSpec::from_json(nlohmann::json::parse(c.to_json().dump())) == c);

  auto bad = [&](auto edit) {
    auto j = b.to_json();
    edit(j);
    CHECK_THROWS_AS(JobSpec::from_json(j), std::invalid_argument);
  };
  bad([](auto& j) { j["method"] = "walk"; });
  bad([](auto& j) { j["lambda"] = {1, 0}; });
  bad([](auto& j) { j["sign"] = 0; });
  bad([](auto& j) { j["w"] = "s1*x"; });
  bad([](auto& j) { j["type"] = "Q7"; });
  bad([](auto& j) { j["format"] = "yaml"; });
  bad([](auto& j) { j["extra"] = 1; });
  bad([](auto& j) { j["lambda"] = "1,0"; });
  CHECK_THROWS_AS(JobSpec::from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST_CASE("LaTeX table of the worked A2 example") {
  auto r = cli({"chevalley", "--type", "A2", "--lambda", "2,1", "--w", "s2*s1", "--sign", "+", "--method", "chain",
                "--format", "latex"});
  REQUIRE(r.code == 0);
  // terms as printed in the worked example, grouped by Schubert cell
  std::string want =
      "\\mathcal{L}_{2\\varpi_1+\\varpi_2}\\otimes MC_{-q}(X(s_2s_1)^\\circ)\n"
      "&= e^{\\varpi_1-3\\varpi_2} MC_{-q}(X(s_2s_1)^\\circ)\\\\\n"
      "&+ (q - 1)(e^{-2\\varpi_1+3\\varpi_2}+e^{-\\varpi_1+\\varpi_2}+e^{-\\varpi_2}) MC_{-q}(X(s_1)^\\circ)\\\\\n"
      "&+ (q - 1)(e^{2\\varpi_1-2\\varpi_2}+e^{3\\varpi_1-\\varpi_2}) MC_{-q}(X(s_2)^\\circ)\\\\\n"
      "&+ (q - 1)^{2}(e^{2\\varpi_2}+e^{\\varpi_1}+e^{2\\varpi_1+\\varpi_2}) MC_{-q}(X(id)^\\circ)\\\\\n";
  CHECK(r.out == want);
  auto m = cli({"chevalley", "--type", "A2", "--lambda", "2,1", "--w", "s2*s1", "--sign", "-", "--format", "latex"});
  REQUIRE(m.code == 0);
  CHECK(m.out.find("&- (q - 1)(e^{-\\varpi_1+3\\varpi_2}+e^{\\varpi_2}+e^{\\varpi_1-\\varpi_2}) MC_{-q}(X(s_1)^\\circ)") !=
        std::string::npos);
  CHECK(m.out.find("&+ (q - 1)^{2}(e^{-2\\varpi_1+2\\varpi_2}+e^{-\\varpi_1}+e^{-\\varpi_1+3\\varpi_2}+e^{\\varpi_2}+"
                   "e^{\\varpi_1-\\varpi_2}) MC_{-q}(X(id)^\\circ)") != std::string::npos);
  // same table from the operator formula and the oracle
  for (const char* meth : {"operator", "walk", "hecke", "oracle"}) {
    auto o = cli({"chevalley", "--type", "A2", "--lambda", "2,1", "--w", "s2*s1", "--method", meth, "--format", "latex"});
    CHECK(o.out == want);
  }
}

TEST_CASE("Hall-Littlewood rendering") {
  auto r = cli({"hl", "--type", "A2", "--lambda", "0,2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "s22 - t*s211\n");
  for (const char* m : {"closed", "chain_lenart", "chain_new"})
    CHECK(cli({"hl", "--type", "A2", "--lambda", "1,0", "--method", m, "--display", "x"}).out == "x1 + x2 + x3\n");
  auto t = cli({"hl", "--type", "A2", "--lambda", "1,0", "--method", "chain_lenart", "--terms"});
  CHECK(t.code == 0);
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 1 + 7);
  CHECK(cli({"hl", "--type", "A2", "--lambda", "1,0", "--terms"}).code == 2);
  CHECK(cli({"hl", "--type", "A2", "--lambda", "-1,0"}).code == 2);
}

TEST_CASE("verify subcommand and exit codes") {
  auto r = cli({"verify", "--suite", "oracle", "--type", "A2", "--max-weight", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 25/25 cases") != std::string::npos);
  auto j = cli({"verify", "--suite", "csm", "--type", "A2", "--max-weight", "1", "--jobs", "3", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["pass"] == true);
  CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(cli({"verify", "--jobs", "0"}).code == 2);
  CHECK(cli({"verify", "--type", "Z9"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2", "--lambda", "1,2,3"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2", "--lambda", "1,a"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2", "--lambda", "1,0", "--sign", "0"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2", "--lambda", "1,0", "--method", "closed"}).code == 2);
  CHECK(cli({"chevalley", "--type", "A2", "--lambda", "1,0", "--w", "s3"}).code == 2);
  CHECK(cli({"whittaker", "--type", "A2", "--lambda", "1,0"}).code == 2);
  CHECK(cli({"csm", "--type", "A2", "--lambda", "1,1", "--parabolic", "2", "--w", "id"}).code == 2);
  CHECK(cli({"--version"}).code == 0);
}

TEST_CASE("failing cases are reported") {
  std::vector<VerifyCase> cases;
  for (int k = 0; k < 20; ++k)
    cases.push_back({"unit", "case " + std::to_string(k), [k] {
                       if (k == 7) return std::string("mismatch");
                       if (k == 11) throw std::domain_error("boom");
                       return std::string();
                     }});
  auto res = run_cases(cases, 4);
  REQUIRE(res.size() == 20);
  for (int k = 0; k < 20; ++k) {
    CHECK(res[k].name == "case " + std::to_string(k));
    CHECK(res[k].pass == (k != 7 && k != 11));
  }
  CHECK(res[7].detail == "mismatch");
  CHECK(res[11].detail == "exception: boom");
  CHECK_FALSE(all_passed(res));
  CHECK(verify_text(res).find("FAIL 18/20 cases") != std::string::npos);
}

TEST_CASE("positivity scan in small rank") {
  CHECK(search_positivity({"A2", "A3", "B2"}).empty());
  auto r = cli({"search-positivity", "--type", "A2,B2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"chevalley", "--type", "B2", "--lambda", "1,-1", "--format", "json"};
  CHECK(cli(args).out == cli(args).out);
  auto a = cli({"verify", "--suite", "methods", "--type", "A3", "--samples", "6", "--jobs", "4"});
  auto b = cli({"verify", "--suite", "methods", "--type", "A3", "--samples", "6", "--jobs", "1"});
  CHECK(a.out == b.out);
}

TEST_CASE("cache round trip, versions, corruption and concurrency") {
  fs::path d = scratch("cache");
  ResultCache cache(d);
  CacheKey k{"chevalley", "A2", 2, Weight{2, 1}, "s2*s1", "chain"};
  CHECK_FALSE(cache.get(k).has_value());
  nlohmann::json v{{"x", 1}};
  cache.put(k, v);
  CHECK(cache.get(k) == v);

  CacheKey stale = k;
  stale.version = "0.0.0";
  CHECK(stale.digest() != k.digest());
  CHECK_FALSE(cache.get(stale).has_value());

  // corrupted entries are misses and get replaced
  { std::ofstream(cache.path_for(k)) << "{not json"; }
  CHECK_FALSE(cache.get(k).has_value());
  bool hit = true;
  CHECK(cache.get_or_compute(k, [] { return nlohmann::json{{"x", 2}}; }, &hit) == nlohmann::json{{"x", 2}});
  CHECK_FALSE(hit);
  CHECK(cache.get_or_compute(k, [] { return nlohmann::json{{"x", 3}}; }, &hit) == nlohmann::json{{"x", 2}});
  CHECK(hit);
  // an entry stored under another key is not trusted
  { std::ofstream(cache.path_for(stale)) << nlohmann::json{{"key", k.to_json()}, {"value", 5}}.dump(); }
  CHECK_FALSE(cache.get(stale).has_value());

  // concurrent writers of the same value leave one identical entry
  CacheKey c{"chevalley", "B2", 2, Weight{1, 1}, "id", "chain"};
  std::vector<std::thread> ts;
  for (int t = 0; t < 8; ++t) ts.emplace_back([&] { for (int r = 0; r < 20; ++r) cache.put(c, v); });
  for (auto& t : ts) t.join();
  CHECK(cache.get(c) == v);
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(d)) {
    CHECK(e.path().extension() == ".json");
    ++files;
  }
  CHECK(files == 3);

  // IO errors surface
  fs::path f = d / "plain_file";
  { std::ofstream(f) << "x"; }
  CHECK_THROWS_AS(ResultCache(f / "sub"), std::runtime_error);
  ResultCache gone(scratch("gone"));
  fs::remove_all(gone.dir());
  CHECK_THROWS_AS(gone.put(k, v), std::runtime_error);
}

TEST_CASE("cached Chevalley tables") {
  fs::path d = scratch("tables");
  ResultCache cache(d);
  auto A2 = RootSystem::make("A2");
  Elt w = A2->parse_elt("s2*s1");
  bool hit = true;
  auto t1 = cached_chevalley(&cache, A2, w, Weight{2, 1}, Method::chain, &hit);
  CHECK_FALSE(hit);
  auto t2 = cached_chevalley(&cache, A2, w, Weight{2, 1}, Method::chain, &hit);
  CHECK(hit);
  CHECK(t1.entries == t2.entries);
  CHECK(t1.entries == chevalley(A2, w, Weight{2, 1}).entries);
  // a parseable entry of the wrong shape is recomputed
  CacheKey k{"chevalley", "A2", 2, Weight{2, 1}, "s2*s1", "chain"};
  cache.put(k, nlohmann::json{{"nonsense", true}});
  auto t3 = cached_chevalley(&cache, A2, w, Weight{2, 1}, Method::chain, &hit);
  CHECK_FALSE(hit);
  CHECK(t3.entries == t1.entries);
  CHECK(cached_chevalley(&cache, A2, w, Weight{2, 1}, Method::chain, &hit).entries == t1.entries);
  CHECK(hit);

  std::vector<std::string> args{"chevalley", "--type", "A2", "--lambda", "1,-2", "--format", "json"};
  auto plain = cli(args);
  args.push_back("--cache-dir");
  args.push_back(d.string());
  auto cold = cli(args), warm = cli(args);
  CHECK(cold.code == 0);
  CHECK(nlohmann::json::parse(plain.out)["tables"] == nlohmann::json::parse(warm.out)["tables"]);
  CHECK(cold.out == warm.out);
}

TEST_CASE("binary: JSON documents validate against the shipped schema") {
  fs::path d = scratch("json");
  std::vector<std::string> cmds = {
      "chevalley --type A2 --lambda 2,1 --format json",
      "chevalley --type A2 --lambda 1,0 --parabolic 2 --w s2*s1 --format json",
      "hecke-coeffs --type A2 --lambda 2,1 --sign - --w s2*s1 --format json",
      "chain --type A2 --lambda 2,-2 --word 1,0,2,1 --format json",
      "oracle --type A2 --lambda 1,0 --format json",
      "oracle --type A2 --lambda 0,0 --method smc --w s1 --format json",
      "stab --type A2 --lambda 2,1 --w s2 --translate --format json",
      "whittaker --type B2 --lambda -1,0 --format json",
      "hl --type A2 --lambda 0,2 --method chain_lenart --terms --format json",
      "hl --type G2 --lambda 1,0 --format json",
      "csm --type A3 --lambda 0,1,0 --parabolic 1,3 --basis sm --format json",
      "verify --suite dualities --type A2 --format json",
      "search-positivity --type A3 --format json"};
  std::vector<fs::path> files;
  for (size_t k = 0; k < cmds.size(); ++k) {
    auto r = binary(cmds[k]);
    CHECK_MESSAGE(r.code == 0, cmds[k]);
    CHECK(nlohmann::json::accept(r.out));
    files.push_back(d / ("doc" + std::to_string(k) + ".json"));
    std::ofstream(files.back()) << r.out;
  }
  CHECK(validate(files) == 0);
  // the schema rejects a malformed document
  auto doc = nlohmann::json::parse(binary(cmds[0]).out);
  doc["tables"][0]["entries"][0]["coeff"] = "e^{w1}";
  fs::path broken = d / "broken.json";
  std::ofstream(broken) << doc.dump();
  CHECK(validate({broken}) == 1);
}

TEST_CASE("binary: exit codes and job files") {
  CHECK(binary("chevalley --type A2 --lambda 1").code == 2);
  CHECK(binary("verify --suite oracle --type A2 --max-weight 2").code == 0);
  auto hl = binary("hl --type A2 --lambda 0,2 --format text");
  CHECK(hl.code == 0);
  CHECK(hl.out == "s22 - t*s211\n");

  fs::path d = scratch("jobs");
  auto emitted = binary("chevalley --type B2 --lambda 1,-1 --w s1*s2 --sign - --method walk --format json --emit-job");
  REQUIRE(emitted.code == 0);
  auto spec = JobSpec::from_json(nlohmann::json::parse(emitted.out));
  CHECK(spec.type == "B2");
  CHECK(spec.sign == -1);
  CHECK(spec.method == "walk");
  fs::path job = d / "job.json";
  std::ofstream(job) << emitted.out;
  auto via_file = binary("chevalley --job " + job.string());
  auto direct = binary("chevalley --type B2 --lambda 1,-1 --w s1*s2 --sign - --method walk --format json");
  CHECK(via_file.code == 0);
  CHECK(via_file.out == direct.out);
  // explicit flags override the file
  auto over = binary("chevalley --job " + job.string() + " --format text");
  CHECK(over.out.find("L_{-w1+w2} (x) MC(s1*s2)") == 0);
  CHECK(binary("hl --job " + job.string()).code == 2);
  std::ofstream(d / "bad.json") << "{\"command\": \"chevalley\", \"lambda\": [1]}";
  CHECK(binary("chevalley --job " + (d / "bad.json").string()).code == 2);
}
