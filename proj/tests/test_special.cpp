#include "doctest.h"

#include <algorithm>
#include <random>
#include <tuple>

#include "chev/oracle.hpp"
#include "chev/special.hpp"

using namespace chev;

namespace {

CharPoly E(const Weight& mu, const Scalar& s = Scalar(1)) { return CharPoly::exp(mu, s); }
CharPoly C(int r, const Scalar& s) { return CharPoly::constant(r, s); }

CharPoly weyl_character(const RootSystem& R, const Weight& mu) {
  CharPoly num(R.rank()), den(R.rank());
  for (Elt w : R.elements()) {
    Scalar sg(R.length(w) % 2 ? -1 : 1);
    num += E(R.act(w, mu + R.rho()), sg);
    den += E(R.act(w, R.rho()), sg);
  }
  return num.div_exact_or_throw(den);
}

CharPoly random_poly(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  CharPoly p(r);
  for (int k = 0; k < 3; ++k) {
    Weight mu(r);
    for (int i = 0; i < r; ++i) mu[i] = c(rng);
    p += E(mu, Scalar::mono(2 * (k % 2), c(rng)));
  }
  return p;
}

CharPoly lambda_y_id(const RootSystem& R) {
  CharPoly p = C(R.rank(), Scalar(1));
  for (int b = 0; b < R.num_positive(); ++b) p *= one_plus(Mono{R.root(b), 2}, -1, R.rank());
  return p;
}

Scalar t_pow(int k) { return Scalar::q_pow(k); }
Scalar omt(int k) { return one_minus_q().pow(k); }

Weight x(std::initializer_list<int> e) { return Weight(e); }

// (w, J 1-based, u, coefficient in t, exponent in x)
using Row = std::tuple<std::string, std::vector<int>, std::string, Scalar, Weight>;

std::vector<Row> rows_of(const SystemPtr& A2, const std::vector<HLTerm>& terms, int degree) {
  std::vector<Row> out;
  for (const auto& t : terms) {
    CharPoly g = to_gl(*A2, t.term, degree);
    auto bw = g.by_weight();
    REQUIRE(bw.size() == 1);
    auto [mu, c] = *bw.begin();
    std::vector<int> J;
    for (int j : t.J) J.push_back(j + 1);
    out.emplace_back(A2->elt_str(t.w), J, A2->elt_str(t.u), c, mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Row> sorted(std::vector<Row> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("scalar Demazure-Lusztig operators") {
  std::mt19937_64 rng(11);
  for (const char* lab : {"A2", "B2", "G2"}) {
    auto R = RootSystem::make(lab);
    const int r = R->rank();
    const std::vector<int> braid = R->word(R->w0());
    for (auto v : {DLVariant::tilde_T, DLVariant::tilde_T_vee}) {
      for (int k = 0; k < 4; ++k) {
        CharPoly f = random_poly(r, rng);
        for (int i = 1; i <= r; ++i) {
          CharPoly Tf = dl_scalar(*R, v, i, f);
          CHECK((dl_scalar(*R, v, i, Tf) + Tf * one_plus_y() + f * Scalar::y()).is_zero());
        }
        // both reduced words of w0 give the same operator
        CharPoly a = f, b = f;
        for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
          a = dl_scalar(*R, v, *it, a);
          b = dl_scalar(*R, v, 3 - *it, b);
        }
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("the two operators are conjugate") {
  std::mt19937_64 rng(3);
  auto A2 = RootSystem::make("A2");
  const Weight rho = A2->rho();
  for (int k = 0; k < 4; ++k) {
    CharPoly f = random_poly(2, rng);
    for (Elt w : A2->elements()) {
      CharPoly lhs = dl_scalar_word(*A2, DLVariant::tilde_T, w, f);
      // apply tilde_T_vee with y -> 1/y: conjugate the input and output by v -> 1/v
      CharPoly g = (f * E(-rho)).v_inverse();
      CharPoly rhs = dl_scalar_word(*A2, DLVariant::tilde_T_vee, w, g).v_inverse() * E(rho) *
                     Scalar::y_pow(A2->length(w));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Euler characteristics of motivic Chern classes") {
  for (const char* lab : {"A2", "B2"}) {
    auto R = RootSystem::make(lab);
    const KOracle& K = oracle_for(R);
    for (int a = -2; a <= 1; ++a)
      for (int b = -1; b <= 2; ++b) {
        Weight lam = R->fundamental(1) * a + R->fundamental(2) * b;
        for (Elt w : R->elements()) {
          CHECK(euler_char(line_bundle(R, lam) * K.mc(w)) == dl_scalar_word(*R, DLVariant::tilde_T_vee, w, E(lam)));
          CHECK(whittaker_oracle(R, lam, w) == dl_scalar_word(*R, DLVariant::tilde_T, w, E(lam)));
        }
      }
  }
}

TEST_CASE("Iwahori-Whittaker functions three ways") {
  for (const char* lab : {"A2", "B2", "G2"}) {
    auto R = RootSystem::make(lab);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 1; ++b) {
        Weight lam = -(R->fundamental(1) * a + R->fundamental(2) * b);
        for (Elt w : R->elements()) {
          CharPoly W = whittaker(R, lam, w);
          CHECK(W == whittaker_chevalley(R, lam, w));
          if (R->label() != "G2") CHECK(W == whittaker_oracle(R, lam, w));
        }
      }
  }
  auto A2 = RootSystem::make("A2");
  CHECK_THROWS_AS(whittaker(A2, Weight{1, -1}, A2->id()), std::invalid_argument);
  CHECK_THROWS_AS(whittaker_chevalley(A2, Weight{0, 1}, A2->id()), std::invalid_argument);
}

TEST_CASE("Whittaker function at rho") {
  for (const char* lab : {"A2", "B2"}) {
    auto R = RootSystem::make(lab);
    for (Elt w : R->elements()) {
      Scalar sg(R->length(w) % 2 ? -1 : 1);
      CHECK(whittaker_oracle(R, R->rho(), w) == E(R->rho(), sg));
      CHECK(dl_scalar_word(*R, DLVariant::tilde_T, w, E(R->rho())) == E(R->rho(), sg));
    }
  }
}

TEST_CASE("Casselman-Shalika sums") {
  for (const char* lab : {"A2", "B2", "G2"}) {
    auto R = RootSystem::make(lab);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        Weight lam = -(R->fundamental(1) * a + R->fundamental(2) * b);
        CharPoly sum(R->rank()), twisted(R->rank());
        for (Elt w : R->elements()) {
          CharPoly W = whittaker(R, lam, w);
          sum += W;
          twisted += W * Scalar::y_pow(-R->length(w));
        }
        CHECK(sum == lambda_y_id(*R) * weyl_character(*R, R->act(R->w0(), lam)));
        CHECK(twisted == big_R(R, lam - R->rho()).v_inverse() * E(R->rho()));
      }
  }
}

TEST_CASE("R_lambda and H_lambda") {
  for (const char* lab : {"A2", "B2"}) {
    auto R = RootSystem::make(lab);
    Scalar poin;
    for (Elt w : R->elements()) poin += Scalar::neg_y_pow(R->length(w));
    CHECK(big_R(R, R->zero()) == C(R->rank(), poin));
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        Weight lam{a, b};
        CHECK(big_R(R, lam) == big_R_operator(R, lam));
        if (a * b < 0) {
          CHECK_THROWS_AS(big_H(R, lam), std::invalid_argument);
          continue;
        }
        CharPoly H = big_H(R, lam, HRoute::localization);
        CHECK(H == big_H(R, lam, HRoute::chevalley));
        CHECK(H == big_H(R, lam, HRoute::quotient));
      }
  }
  // P^2 directly: fixed points x_i, tangent characters x_i / x_j
  auto A2 = RootSystem::make("A2");
  CharFrac direct = CharFrac(CharPoly(3));
  for (int i = 0; i < 3; ++i) {
    Weight xi(3);
    xi[i] = 1;
    CharFrac term = CharFrac(E(xi));
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      Weight r(3);
      r[i] = 1;
      r[j] = -1;
      term = term * CharFrac::ratio(one_plus(Mono{r, 2}, -1, 3), one_plus(Mono{r, 0}, -1, 3));
    }
    direct += term;
  }
  CHECK(to_gl(*A2, big_H(A2, Weight{1, 0}), 1) == direct.poly_or_throw("P^2 sum"));
}

TEST_CASE("Hall-Littlewood polynomials agree across methods") {
  for (const char* lab : {"A2", "A3", "B2", "G2"}) {
    auto R = RootSystem::make(lab);
    std::vector<Weight> lams = {R->fundamental(1), R->fundamental(2), R->rho(), R->fundamental(1) * 2};
    if (R->rank() == 3) lams.push_back(R->fundamental(3) + R->fundamental(1));
    for (const auto& lam : lams) {
      CharPoly hl = hall_littlewood(R, lam, HLMethod::closed);
      CHECK(hl == hall_littlewood(R, lam, HLMethod::chain_lenart));
      CHECK(hl == hall_littlewood(R, lam, HLMethod::chain_new));
      CHECK(hl == hall_littlewood_from_H(R, lam, 1));
      CHECK(hl == hall_littlewood_from_H(R, lam, 2));
      // t = 0
      CharPoly at0 = hl.map_scalars([](const Scalar& s) { return Scalar(s.coeff(0)); });
      CHECK(at0 == weyl_character(*R, lam));
    }
  }
  auto A2 = RootSystem::make("A2");
  CHECK_THROWS_AS(hall_littlewood(A2, Weight{-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hl_terms(A2, Weight{1, -1}, HLMethod::chain_new), std::invalid_argument);
}

TEST_CASE("Hall-Littlewood term tables for GL3, lambda = w1") {
  auto A2 = RootSystem::make("A2");
  Weight lam{1, 0};
  LambdaChain c = chain_default(*A2, -lam);
  REQUIRE(c.length() == 2);
  CHECK(A2->root(c.betas[0]) == -Weight{1, 1});  // -(a1 + a2) in fundamental coordinates
  CHECK(A2->root(c.betas[1]) == -Weight{2, -1});  // -a1
  std::vector<Row> lenart = {
      {"id", {}, "id", t_pow(0), x({1, 0, 0})},
      {"s1", {}, "s1", t_pow(1), x({0, 1, 0})},
      {"s1", {2}, "id", omt(1), x({0, 1, 0})},
      {"s2*s1", {}, "s2*s1", t_pow(2), x({0, 0, 1})},
      {"s2*s1", {1}, "s1", t_pow(1) * omt(1), x({0, 0, 1})},
      {"s2*s1", {2}, "s2", t_pow(1) * omt(1), x({0, 0, 1})},
      {"s2*s1", {1, 2}, "id", omt(2), x({0, 0, 1})},
  };
  std::vector<Row> fresh = {
      {"id", {}, "id", t_pow(2), x({1, 0, 0})},
      {"s1", {}, "s1", t_pow(1), x({0, 1, 0})},
      {"s1", {2}, "id", t_pow(1) * omt(1), x({1, 0, 0})},
      {"s2*s1", {}, "s2*s1", t_pow(0), x({0, 0, 1})},
      {"s2*s1", {1}, "s1", omt(1), x({0, 1, 0})},
      {"s2*s1", {2}, "s2", omt(1), x({1, 0, 0})},
  };
  CHECK(rows_of(A2, hl_terms(A2, lam, HLMethod::chain_lenart), 1) == sorted(lenart));
  CHECK(rows_of(A2, hl_terms(A2, lam, HLMethod::chain_new), 1) == sorted(fresh));
  CharPoly x123 = E(x({1, 0, 0})) + E(x({0, 1, 0})) + E(x({0, 0, 1}));
  for (auto m : {HLMethod::closed, HLMethod::chain_lenart, HLMethod::chain_new})
    CHECK(to_gl(*A2, hall_littlewood(A2, lam, m), 1) == x123);
}

TEST_CASE("Hall-Littlewood term tables for GL3, lambda = 2 w2") {
  auto A2 = RootSystem::make("A2");
  Weight lam{0, 2};
  LambdaChain c = chain_default(*A2, -lam);
  REQUIRE(c.length() == 4);
  const Weight a12 = Weight{1, 1}, a2 = Weight{-1, 2};
  CHECK(A2->root(c.betas[0]) == -a12);
  CHECK(A2->root(c.betas[1]) == -a2);
  CHECK(A2->root(c.betas[2]) == -a12);
  CHECK(A2->root(c.betas[3]) == -a2);
  // the row (s2, {}, u) is listed with u = s1; an empty J forces u = w
  std::vector<Row> lenart = {
      {"id", {}, "id", t_pow(0), x({2, 2, 0})},
      {"s2", {}, "s2", t_pow(1), x({2, 0, 2})},
      {"s2", {2}, "id", omt(1), x({2, 1, 1})},
      {"s2", {4}, "id", omt(1), x({2, 0, 2})},
      {"s1*s2", {}, "s1*s2", t_pow(2), x({0, 2, 2})},
      {"s1*s2", {1}, "s2", t_pow(1) * omt(1), x({1, 1, 2})},
      {"s1*s2", {2}, "s1", t_pow(1) * omt(1), x({1, 2, 1})},
      {"s1*s2", {3}, "s2", t_pow(1) * omt(1), x({0, 2, 2})},
      {"s1*s2", {4}, "s1", t_pow(1) * omt(1), x({0, 2, 2})},
      {"s1*s2", {1, 2}, "id", omt(2), x({1, 2, 1})},
      {"s1*s2", {1, 4}, "id", omt(2), x({1, 1, 2})},
      {"s1*s2", {3, 4}, "id", omt(2), x({0, 2, 2})},
  };
  std::vector<Row> fresh = {
      {"id", {}, "id", t_pow(2), x({2, 2, 0})},
      {"s2", {}, "s2", t_pow(1), x({2, 0, 2})},
      {"s2", {2}, "id", t_pow(1) * omt(1), x({2, 1, 1})},
      {"s2", {4}, "id", t_pow(1) * omt(1), x({2, 2, 0})},
      {"s1*s2", {}, "s1*s2", t_pow(0), x({0, 2, 2})},
      {"s1*s2", {1}, "s2", omt(1), x({1, 1, 2})},
      {"s1*s2", {2}, "s1", omt(1), x({1, 2, 1})},
      {"s1*s2", {3}, "s2", omt(1), x({2, 0, 2})},
      {"s1*s2", {4}, "s1", omt(1), x({2, 2, 0})},
      {"s1*s2", {2, 3}, "id", omt(2), x({2, 1, 1})},
  };
  CHECK(rows_of(A2, hl_terms(A2, lam, HLMethod::chain_lenart), 4) == sorted(lenart));
  CHECK(rows_of(A2, hl_terms(A2, lam, HLMethod::chain_new), 4) == sorted(fresh));

  CharPoly s22 = E(x({2, 2, 0})) + E(x({2, 0, 2})) + E(x({0, 2, 2})) + E(x({2, 1, 1})) + E(x({1, 2, 1})) +
                 E(x({1, 1, 2}));
  CharPoly s211 = E(x({2, 1, 1})) + E(x({1, 2, 1})) + E(x({1, 1, 2}));
  CHECK(schur_gl(3, {2, 2}) == s22);
  CHECK(schur_gl(3, {2, 1, 1}) == s211);
  for (auto m : {HLMethod::closed, HLMethod::chain_lenart, HLMethod::chain_new}) {
    CharPoly g = to_gl(*A2, hall_littlewood(A2, lam, m), 4);
    CHECK(g == s22 - s211 * Scalar::q());
    auto e = schur_expand(g);
    CHECK(schur_text(e) == "s22 - t*s211");
  }
}

TEST_CASE("GL coordinates and Schur functions") {
  auto A3 = RootSystem::make("A3");
  CHECK(to_gl(*A3, E(Weight{0, 1, 0}), 2) == E(x({1, 1, 0, 0})));
  CHECK(to_gl(*A3, E(Weight{0, 0, -1}), 1) == E(x({0, 0, 0, 1})));
  CHECK(weight_degree(*A3, Weight{1, 0, 2}) == 7);
  CHECK_THROWS_AS(to_gl(*A3, E(Weight{1, 0, 0}), 2), std::invalid_argument);
  auto B2 = RootSystem::make("B2");
  CHECK_THROWS_AS(to_gl(*B2, E(Weight{1, 0}), 1), std::invalid_argument);
  // Schur functions are Weyl characters
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int d = 0; d <= 1; ++d) {
        Weight lam{a, b, d};
        CHECK(to_gl(*A3, weyl_character(*A3, lam), weight_degree(*A3, lam)) ==
              schur_gl(4, {a + b + d, b + d, d}));
      }
  CHECK(schur_gl(2, {1, -1}) == E(x({1, -1})) + C(2, Scalar(1)) + E(x({-1, 1})));
  CHECK(gl_text(E(x({2, 0, 1}), one_minus_q())) == "(-t + 1)*x1^2*x3");
  CHECK_THROWS_AS(schur_expand(E(x({0, 1}))), std::invalid_argument);
}
