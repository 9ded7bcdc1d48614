#include "doctest.h"

#include <random>

#include "chev/charpoly.hpp"
#include "chev/hecke.hpp"

using namespace chev;

namespace {

Scalar q() { return Scalar::q(); }
Scalar qi(int k) { return Scalar::q_pow(k); }

using Table = std::map<std::pair<std::string, Weight>, Scalar>;

Table named(const RootSystem& R, const Coeffs& c) {
  Table t;
  for (const auto& [k, s] : c) t[{R.elt_str(k.w), k.mu}] = s;
  return t;
}

}  // namespace

TEST_CASE("quadratic and braid relations") {
  for (const char* lab : {"A2", "B2", "G2", "A3"}) {
    auto R = RootSystem::make(lab);
    for (int i = 1; i <= R->rank(); ++i) {
      auto T = HeckeElement::T_simple(R, i);
      auto one = HeckeElement::T(R, R->id());
      CHECK(((T + one) * (T - one * q())).is_zero());
      CHECK(T * HeckeElement::T_simple_inv(R, i) == one);
      CHECK(HeckeElement::T_simple_inv(R, i) * T == one);
      for (int j = i + 1; j <= R->rank(); ++j) {
        int m = 2;
        int c = R->cartan(i - 1, j - 1) * R->cartan(j - 1, i - 1);
        if (c == 1) m = 3;
        if (c == 2) m = 4;
        if (c == 3) m = 6;
        HeckeElement a = one, b = one;
        for (int k = 0; k < m; ++k) {
          a = a * HeckeElement::T_simple(R, k % 2 ? j : i);
          b = b * HeckeElement::T_simple(R, k % 2 ? i : j);
        }
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("X part is commutative and the Bernstein quotient divides") {
  auto R = RootSystem::make("B2");
  auto X = [&](Weight m) { return HeckeElement::X(R, m); };
  CHECK(X(Weight{1, -1}) * X(Weight{2, 3}) == X(Weight{3, 2}));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int i = 1; i <= 2; ++i) {
        Weight mu{a, b};
        Weight al = R->root(R->simple_root(i - 1));
        Weight smu = R->reflect(R->simple_root(i - 1), mu);
        CharPoly quot(2);
        for (auto [nu, s] : bernstein_quotient(*R, i, mu)) quot += CharPoly::exp(nu, Scalar(s));
        CharPoly lhs = CharPoly::exp(smu) - CharPoly::exp(mu);
        CharPoly den = CharPoly::constant(2, Scalar(1)) - CharPoly::exp(-al);
        CHECK(quot * den == lhs);
        // T_s X^mu - X^{s mu} T_s = (1 - q) quot
        auto Ts = HeckeElement::T_simple(R, i);
        auto diff = Ts * X(mu) - X(smu) * Ts;
        HeckeElement rhs(R);
        for (auto [nu, s] : bernstein_quotient(*R, i, mu)) rhs += X(nu) * (one_minus_q() * Scalar(s));
        CHECK(diff == rhs);
      }
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(7);
  auto R = RootSystem::make("A2");
  for (int k = 0; k < 20; ++k) {
    auto a = random_hecke(R, rng, 2, 1), b = random_hecke(R, rng, 2, 1), c = random_hecke(R, rng, 2, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("theta involution") {
  std::mt19937_64 rng(11);
  for (const char* lab : {"A2", "B2"}) {
    auto R = RootSystem::make(lab);
    for (Elt w : R->elements()) {
      auto lhs = HeckeElement::E(R, w).theta();
      int l = R->length(w);
      auto rhs = HeckeElement::T(R, w, Scalar::q_pow(-l) * Scalar(l % 2 ? -1 : 1));
      CHECK(lhs == rhs);
      CHECK(HeckeElement::E(R, w) == HeckeElement::T_inv(R, R->inverse(w)));
    }
    CHECK(HeckeElement::X(R, Weight{1, 2}).theta() == HeckeElement::X(R, Weight{-1, -2}));
    for (int k = 0; k < 15; ++k) {
      auto a = random_hecke(R, rng, 3, 2), b = random_hecke(R, rng, 2, 1);
      CHECK(a.theta().theta() == a);
      CHECK((a * b).theta() == a.theta() * b.theta());
    }
  }
}

TEST_CASE("A1 example") {
  auto A1 = RootSystem::make("A1");
  Elt s = A1->parse_elt("s1");
  Weight om{1};
  auto lhs = HeckeElement::T_simple_inv(A1, 1) * HeckeElement::X(A1, om);
  auto rhs = HeckeElement::X(A1, -om) * HeckeElement::T_simple_inv(A1, 1) -
             HeckeElement::X(A1, -om, qi(-1) * one_minus_q());
  CHECK(lhs == rhs);
  for (auto route : {DirectRoute::inverse, DirectRoute::theta}) {
    auto c = transition_direct(A1, s, om, route);
    CHECK(c.size() == 2);
    CHECK(c[HKey{s, -om}] == Scalar(1));
    CHECK(c[HKey{A1->id(), -om}] == -(qi(-1) * one_minus_q()));
  }
  auto c0 = transition_direct(A1, A1->id(), om);
  CHECK(c0.size() == 1);
  CHECK(c0[HKey{A1->id(), om}] == Scalar(1));
}

TEST_CASE("worked A2 tables for w = s2s1, lambda = 2w1+w2") {
  auto A2 = RootSystem::make("A2");
  Elt w = A2->parse_elt("s2*s1");
  Weight lam{2, 1};
  auto chain = chain_from_word(*A2, lam, {2, 1, 2, 0, 1, 2});

  Table plus;
  Scalar a = q_minus_one() * qi(-1), b = q_minus_one().pow(2) * qi(-2);
  plus[{"s2*s1", Weight{1, -3}}] = Scalar(1);
  for (Weight m : {Weight{-1, 1}, Weight{0, -1}, Weight{1, -3}}) plus[{"s1", m}] = a;
  for (Weight m : {Weight{2, -2}, Weight{1, -3}}) plus[{"s2", m}] = a;
  for (Weight m : {Weight{1, 0}, Weight{-1, 1}, Weight{2, -2}, Weight{0, -1}, Weight{1, -3}}) plus[{"id", m}] = b;
  CHECK(plus.size() == 11);

  Table minus;
  Scalar a2 = one_minus_q() * qi(-1), b2 = one_minus_q().pow(2) * qi(-2);
  minus[{"s2*s1", Weight{-1, 3}}] = Scalar(1);
  for (Weight m : {Weight{0, 1}, Weight{1, -1}, Weight{2, -3}}) minus[{"s1", m}] = a2;
  for (Weight m : {Weight{-2, 2}, Weight{-3, 1}}) minus[{"s2", m}] = a2;
  for (Weight m : {Weight{-2, -1}, Weight{0, -2}, Weight{-1, 0}}) minus[{"id", m}] = b2;
  CHECK(minus.size() == 9);

  CHECK(named(*A2, transition_chain(*A2, w, chain, 1)) == plus);
  CHECK(named(*A2, transition_chain(*A2, w, chain, -1)) == minus);
  CHECK(named(*A2, transition_direct(A2, w, lam)) == plus);
  CHECK(named(*A2, transition_direct(A2, w, lam, DirectRoute::theta)) == plus);
  CHECK(named(*A2, transition_direct(A2, w, -lam)) == minus);

  // the J sets of the worked example, 1-based in the tables
  auto js = [&](int sign) {
    std::map<std::string, std::set<std::vector<int>>> out;
    for (const auto& t : transition_terms(*A2, w, chain, sign)) {
      std::vector<int> J;
      for (int j : t.J) J.push_back(j + 1);
      out[A2->elt_str(t.u)].insert(J);
    }
    return out;
  };
  auto p = js(1);
  CHECK(p["s1"] == std::set<std::vector<int>>{{6}, {4}, {2}});
  CHECK(p["s2"] == std::set<std::vector<int>>{{5}, {3}});
  CHECK(p["id"] == std::set<std::vector<int>>{{5, 6}, {3, 6}, {1, 5}, {3, 4}, {1, 3}});
  auto m = js(-1);
  CHECK(m["s1"] == std::set<std::vector<int>>{{6}, {4}, {2}});
  CHECK(m["s2"] == std::set<std::vector<int>>{{5}, {3}});
  CHECK(m["id"] == std::set<std::vector<int>>{{2, 3}, {2, 5}, {4, 5}});
}

TEST_CASE("chain formulas agree with the direct expansion on the A2 grid") {
  auto A2 = RootSystem::make("A2");
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) {
      Weight lam{x, y};
      auto c = chain_default(*A2, lam);
      for (Elt w : A2->elements()) {
        auto plus = transition_chain(*A2, w, c, 1);
        auto minus = transition_chain(*A2, w, c, -1);
        CHECK(plus == transition_direct(A2, w, lam));
        CHECK(plus == transition_direct(A2, w, lam, DirectRoute::theta));
        CHECK(minus == transition_direct(A2, w, -lam));
        for (const auto& [k, s] : plus) {
          int d = A2->length(w) - A2->length(k.w);
          Scalar t = s * Scalar::q_pow(d);
          CHECK(t.lo() >= 0);
        }
      }
    }
}

TEST_CASE("sampled B2 and A3 agreement and chain independence") {
  std::mt19937_64 rng(3);
  for (const char* lab : {"B2", "A3", "G2"}) {
    auto R = RootSystem::make(lab);
    std::uniform_int_distribution<int> co(-1, 1);
    std::uniform_int_distribution<size_t> el(0, R->order() - 1);
    for (int k = 0; k < 8; ++k) {
      Weight lam = R->zero();
      for (int i = 0; i < R->rank(); ++i) lam[i] = co(rng);
      Elt w = static_cast<Elt>(el(rng));
      auto c1 = chain_default(*R, lam);
      auto c2 = chain_from_word(*R, lam, v_minus_lambda(*R, lam));
      auto d = transition_direct(R, w, lam);
      CHECK(transition_chain(*R, w, c1, 1) == d);
      CHECK(transition_chain(*R, w, c2, 1) == d);
      CHECK(transition_chain(*R, w, c1, -1) == transition_direct(R, w, -lam));
    }
  }
}

TEST_CASE("non-reduced chain gives the same coefficients") {
  auto A2 = RootSystem::make("A2");
  Weight lam{2, -2};
  auto nr = chain_from_word(*A2, lam, {0, 1, 0, 1, 2, 1});
  REQUIRE_FALSE(nr.reduced);
  for (Elt w : A2->elements()) {
    CHECK(transition_chain(*A2, w, nr, 1) == transition_direct(A2, w, lam));
    CHECK(transition_chain(*A2, w, nr, -1) == transition_direct(A2, w, -lam));
  }
}

TEST_CASE("zero weight") {
  auto A2 = RootSystem::make("A2");
  auto c = chain_default(*A2, A2->zero());
  for (Elt w : A2->elements()) {
    auto t = transition_chain(*A2, w, c, 1);
    CHECK(t.size() == 1);
    CHECK(t[HKey{w, A2->zero()}] == Scalar(1));
  }
}
