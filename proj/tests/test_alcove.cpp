#include "doctest.h"

#include "chev/alcove.hpp"

using namespace chev;

namespace {

std::vector<std::string> beta_names(const RootSystem& R, const LambdaChain& c) {
  std::vector<std::string> out;
  for (int b : c.betas) out.push_back(root_str(R, b));
  return out;
}

std::vector<std::string> hyper_names(const RootSystem& R, const LambdaChain& c, bool shifted) {
  std::vector<std::string> out;
  for (int j = 0; j < c.length(); ++j)
    out.push_back(hyperplane_str(R, shifted ? c.shifted_hyperplane(R, j) : c.hyperplane(R, j)));
  return out;
}

}  // namespace

TEST_CASE("affine reflections") {
  auto A2 = RootSystem::make("A2");
  Hyperplane h0{A2->simple_root(0), 0};
  Weight mu{3, -1};
  CHECK(affine_reflect(*A2, h0, mu) == A2->reflect(A2->simple_root(0), mu));
  Hyperplane ht{A2->theta(), 1};
  CHECK(affine_reflect(*A2, ht, A2->zero()) == A2->root(A2->theta()));
  CHECK(affine_reflect(*A2, ht, Weight{2, 1}) == Weight{0, -1});
  CHECK(A2->act(A2->parse_elt("s2*s1"), Weight{0, -1}) == Weight{-1, 1});
}

TEST_CASE("v_{-lambda} walks") {
  auto A2 = RootSystem::make("A2");
  auto w = v_minus_lambda(*A2, Weight{2, 1});
  CHECK(w.size() == 6);
  CHECK(chain_from_word(*A2, Weight{2, 1}, w).reduced);
  CHECK(v_minus_lambda(*A2, Weight{2, -2}).size() == 4);
  CHECK(v_minus_lambda(*A2, Weight{0, 0}).empty());
  auto c = chain_from_word(*A2, Weight{2, 1}, {2, 1, 2, 0, 1, 2});
  CHECK(c.reduced);
  CHECK_THROWS_AS(chain_from_word(*A2, Weight{2, 1}, {1, 2, 0}), std::invalid_argument);
}

TEST_CASE("worked A2 chain for 2w1+w2") {
  auto A2 = RootSystem::make("A2");
  auto c = chain_from_word(*A2, Weight{2, 1}, {2, 1, 2, 0, 1, 2});
  CHECK(beta_names(*A2, c) == std::vector<std::string>{"a2", "a1+a2", "a1", "a1+a2", "a1", "a1+a2"});
  // h_j written as H_{beta_j, -d_j}
  CHECK(c.levels == std::vector<int64_t>{0, 0, 0, 1, 1, 2});
  CHECK(hyper_names(*A2, c, false) == std::vector<std::string>{"H(a2,0)", "H(a1+a2,0)", "H(a1,0)", "H(a1+a2,-1)",
                                                               "H(a1,-1)", "H(a1+a2,-2)"});
  auto r = reverse_chain(*A2, c);
  CHECK(hyper_names(*A2, r, true).size() == 6);
  std::vector<std::string> hp;
  for (int j = 0; j < 6; ++j) {
    // h'_j = H_{beta_{l+1-j}, <lambda, beta^vee> - d}
    hp.push_back(hyperplane_str(*A2, c.shifted_hyperplane(*A2, 5 - j)));
  }
  CHECK(hp == std::vector<std::string>{"H(a1+a2,1)", "H(a1,1)", "H(a1+a2,2)", "H(a1,2)", "H(a1+a2,3)", "H(a2,1)"});
  // the reversed chain's hyperplanes are exactly the h'_j
  for (int j = 0; j < 6; ++j) CHECK(r.hyperplane(*A2, j) == c.shifted_hyperplane(*A2, 5 - j));
}

TEST_CASE("chain for 2w1-2w2 from the word s1 s0 s2 s1") {
  auto A2 = RootSystem::make("A2");
  auto c = chain_from_word(*A2, Weight{2, -2}, {1, 0, 2, 1});
  CHECK(c.reduced);
  CHECK(beta_names(*A2, c) == std::vector<std::string>{"a1", "-a2", "a1", "-a2"});
  CHECK(c.levels == std::vector<int64_t>{0, 1, 1, 2});
  auto nr = chain_from_word(*A2, Weight{2, -2}, {0, 1, 0, 1, 2, 1});
  CHECK_FALSE(nr.reduced);
  CHECK(beta_names(*A2, nr) == std::vector<std::string>{"-a1-a2", "-a2", "a1", "a1+a2", "a1", "-a2"});
  CHECK(nr.levels == std::vector<int64_t>{1, 1, 0, -1, 1, 2});
}

TEST_CASE("A4 w2 chain") {
  auto A4 = RootSystem::make("A4");
  auto c = chain_from_word(*A4, Weight{0, 1, 0, 0}, {2, 3, 4, 1, 2, 3});
  CHECK(beta_names(*A4, c) ==
        std::vector<std::string>{"a2", "a2+a3", "a2+a3+a4", "a1+a2", "a1+a2+a3", "a1+a2+a3+a4"});
  auto lex = chain_lex(*A4, Weight{0, 1, 0, 0});
  CHECK(lex.length() == 6);
  auto rr = reverse_chain(*A4, reverse_chain(*A4, c));
  CHECK(rr.betas == c.betas);
  CHECK(rr.levels == c.levels);
  CHECK(reverse_chain(*A4, chain_lex(*A4, A4->zero())).length() == 0);
}

TEST_CASE("lex chains are reduced alcove paths") {
  for (const char* lab : {"A2", "B2", "G2", "A3", "C3"}) {
    auto R = RootSystem::make(lab);
    std::vector<Weight> lams;
    for (int i = 1; i <= R->rank(); ++i) {
      lams.push_back(R->fundamental(i));
      lams.push_back(-R->fundamental(i));
    }
    lams.push_back(R->rho());
    Weight mixed = R->zero();
    mixed[0] = 2;
    mixed[R->rank() - 1] = -1;
    lams.push_back(mixed);
    for (const auto& lam : lams) {
      auto c = chain_lex(*R, lam);
      CHECK(c.length() == alcove_distance(*R, lam));
      CHECK(chain_reaches(*R, c));
      auto c2 = chain_from_word(*R, lam, c.word);
      CHECK(c2.betas == c.betas);
      CHECK(c2.levels == c.levels);
      auto g = chain_from_word(*R, lam, v_minus_lambda(*R, lam));
      CHECK(g.reduced);
      CHECK(chain_reaches(*R, g));
      auto rv = reverse_chain(*R, c);
      CHECK(chain_reaches(*R, rv));
    }
  }
}

TEST_CASE("chain reflections on the worked example") {
  auto A2 = RootSystem::make("A2");
  auto c = chain_from_word(*A2, Weight{2, 1}, {2, 1, 2, 0, 1, 2});
  auto e = chain_reflections(*A2, c, {});
  CHECK(e.r_J == A2->id());
  CHECK(e.n_J == 0);
  auto cr = chain_reflections(*A2, c, {1, 2});
  Weight x = cr.rhat_lt.apply(*A2, Weight{-2, -1});
  CHECK(x == Weight{3, -2});
  CHECK(A2->act(A2->parse_elt("s2*s1"), x) == Weight{-2, -1});
  auto c56 = chain_reflections(*A2, c, {4, 5});
  CHECK(A2->act(A2->parse_elt("s2*s1"), c56.rtilde_gt.apply(*A2, Weight{2, 1})) == Weight{1, 0});
}

TEST_CASE("-rhat(-lambda) = r_J rtilde(lambda) for every subset") {
  for (const char* lab : {"A2", "B2", "G2"}) {
    auto R = RootSystem::make(lab);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        Weight lam{a, b};
        auto c = chain_lex(*R, lam);
        const int l = c.length();
        if (l > 8) continue;
        for (int mask = 0; mask < (1 << l); ++mask) {
          std::vector<int> J;
          for (int j = 0; j < l; ++j)
            if (mask >> j & 1) J.push_back(j);
          auto cr = chain_reflections(*R, c, J);
          CHECK(-cr.rhat_lt.apply(*R, -lam) == R->act(cr.r_J, cr.rtilde_gt.apply(*R, lam)));
        }
      }
  }
}
