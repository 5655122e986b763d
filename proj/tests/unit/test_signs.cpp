#include <doctest.h>

#include <functional>
#include <vector>

#include "oracles.hpp"
#include "workbench/error.hpp"
#include "workbench/signs.hpp"

using namespace wb::signs;

namespace {

using Mu = std::vector<int>;

void for_each_tuple(int d, int lo, int hi, const std::function<void(const Mu&)>& fn) {
  Mu mu(d, lo);
  while (true) {
    fn(mu);
    int i = d - 1;
    while (i >= 0 && mu[i] == hi) mu[i--] = lo;
    if (i < 0) return;
    ++mu[i];
  }
}

void for_each_partition(int d, const std::function<void(const Mu&)>& fn) {
  Mu cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) return fn(cur);
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(d);
}

}  // namespace

TEST_CASE("elementary sign exponents") {
  CHECK(dagger(Mu{1, 1}) == Parity::odd);
  CHECK(dagger(Mu{0, 0, 0}) == Parity::even);
  CHECK(dagger(Mu{2, 3, 1}) == Parity::odd);

  CHECK(ddagger(Mu{1, 2}, 0) == Parity::even);
  CHECK(ddagger(Mu{1, 1, 1}, 2) == Parity::even);
  CHECK(ddagger(Mu{2}, 1) == Parity::odd);
  CHECK_THROWS_AS(ddagger(Mu{1}, 2), wb::Error);

  CHECK(spade(Mu{0, 0}, 2) == Parity::even);
  CHECK(spade(Mu{1}, 1) == Parity::even);
  CHECK(spade(Mu{1, 1}, 2) == Parity::odd);

  CHECK(club(Mu{1, 2, 3}, Mu{1, 2}, 1) == Parity::even);
  CHECK(club(Mu{1, 1, 1}, Mu{2, 1}, 2) == Parity::even);
  CHECK(club(Mu{1, 0, 1, 1}, Mu{1, 2, 1}, 3) == Parity::odd);
  CHECK_THROWS_AS(club(Mu{1, 1}, Mu{1, 2}, 1), wb::Error);
}

TEST_CASE("spade is dagger shifted by the arity") {
  for (int d = 1; d <= 4; ++d) {
    for_each_tuple(d, -2, 3, [&](const Mu& mu) {
      for (int k = 0; k < 3; ++k) CHECK(spade(mu, k) == (dagger(mu) ^ parity(k)));
    });
  }
}

TEST_CASE("sign exponents depend on degrees only mod 2") {
  for (int d = 1; d <= 4; ++d) {
    for_each_tuple(d, -1, 2, [&](const Mu& mu) {
      Mu shifted = mu;
      for (int& x : shifted) x += 2;
      CHECK(dagger(mu) == dagger(shifted));
      for (int n = 0; n <= d; ++n) CHECK(ddagger(mu, n) == ddagger(shifted, n));
      for (int m = 1; m <= d; ++m) {
        for (int n = 0; n + m <= d; ++n) {
          CHECK(square_m(mu, d, n, m) == square_m(shifted, d, n, m));
          CHECK(square_f(mu, d, n, m) == square_f(shifted, d, n, m));
        }
      }
      for_each_partition(d, [&](const Mu& p) { CHECK(square_fprime(mu, p) == square_fprime(shifted, p)); });
    });
  }
}

TEST_CASE("degree-free parts of the Koszul exponents") {
  const Mu zero(4, 0);
  CHECK(square_m(zero, 4, 1, 2) == parity(2 * (4 - 2 - 1)));
  CHECK(square_f(zero, 4, 1, 3) == parity(3 * (4 - 3)));
  CHECK(triangle(4, 1, 2) == parity(2 * 3 + 2 + 1));
  CHECK(square_m(Mu{0, 1, 0, 1}, 4, 0, 2) == parity(2 * 1 + 2 * 1));
  CHECK(square_fprime(Mu{0, 0, 0}, Mu{1, 2}) == Parity::odd);
  CHECK(triangle_partition(3, Mu{1, 2}) == Parity::even);
  CHECK_THROWS_AS(square_fprime(Mu{0, 0}, Mu{1, 2}), wb::Error);
  CHECK_THROWS_AS(square_fprime(Mu{0, 0}, Mu{0, 2}), wb::Error);
}

TEST_CASE("identity sides agree with the independent re-implementation") {
  for (int d = 1; d <= 4; ++d) {
    for_each_tuple(d, -1, 2, [&](const Mu& mu) {
      for (int m = 1; m <= d; ++m) {
        for (int n = 0; n + m <= d; ++n) {
          const auto em = evaluate_identity(Identity::m_composition, mu, n, m, {});
          const auto om = wb::oracle::m_identity(mu, n, m);
          CHECK(em.lhs == om.lhs);
          CHECK(em.rhs == om.rhs);
          const auto ef = evaluate_identity(Identity::f_composition, mu, n, m, {});
          const auto of = wb::oracle::f_identity(mu, n, m);
          CHECK(ef.lhs == of.lhs);
          CHECK(ef.rhs == of.rhs);
        }
      }
      for_each_partition(d, [&](const Mu& p) {
        const auto e = evaluate_identity(Identity::fprime_composition, mu, 0, 0, p);
        const auto o = wb::oracle::fprime_identity(mu, p);
        CHECK(e.lhs == o.lhs);
        CHECK(e.rhs == o.rhs);
      });
    });
  }
}

TEST_CASE("hand-computed identity instances") {
  const auto m = evaluate_identity(Identity::m_composition, Mu{0, 0}, 0, 2, {});
  CHECK(m.lhs == 0);
  CHECK(m.rhs == 0);

  const auto f = evaluate_identity(Identity::f_composition, Mu{1, 0}, 1, 1, {});
  CHECK(f.glued == Mu{-1});
  CHECK(f.terms.at("square_f") == 1);
  CHECK(f.terms.at("triangle") == 1);
  CHECK(f.terms.at("dagger_u1") == 0);
  CHECK(f.terms.at("spade_u0") == 1);
  CHECK(f.lhs == 1);
  CHECK(f.rhs == 1);

  const auto fp = evaluate_identity(Identity::fprime_composition, Mu{1, 1}, 0, 0, Mu{2});
  CHECK(fp.glued == Mu{3});
  CHECK(fp.lhs == 1);
  CHECK(fp.rhs == 1);

  const auto bad = evaluate_identity(Identity::fprime_composition, Mu{0, 0, 0}, 0, 0, Mu{1, 2});
  CHECK(bad.terms.at("square_fprime") == 1);
  CHECK(bad.terms.at("triangle") == 0);
  CHECK(bad.terms.at("dagger_u0") == 0);
  CHECK(bad.terms.at("spade_sum") == 1);
  CHECK(bad.lhs == 0);
  CHECK(bad.rhs == 1);
}

TEST_CASE("exhaustive identity verification") {
  CHECK(verify_identity(Identity::m_composition, {0, 1}, 4).pass());
  const auto m = verify_identity(Identity::m_composition, {0, 3}, 5);
  CHECK(m.pass());
  CHECK(m.cases > 0);
  CHECK(verify_identity(Identity::f_composition, {0, 3}, 5).pass());

  const auto fp = verify_identity(Identity::fprime_composition, {0, 3}, 5);
  REQUIRE(fp.counterexample);
  CHECK(fp.counterexample->d == 3);
  CHECK(fp.counterexample->partition == Mu{1, 2});
  CHECK(fp.counterexample->mu == Mu{0, 0, 0});
  const auto o = wb::oracle::fprime_identity(fp.counterexample->mu, fp.counterexample->partition);
  CHECK(o.lhs != o.rhs);
  CHECK(fp.counterexample->lhs == o.lhs);
}

TEST_CASE("dropping a summand produces a counterexample") {
  const auto r = verify_identity(Identity::m_composition, {0, 1}, 3, Corruption::drop_triangle);
  REQUIRE(r.counterexample);
  const auto& c = *r.counterexample;
  CHECK(c.lhs != c.rhs);
  const auto again = evaluate_identity(Identity::m_composition, c.mu, c.n, c.m, {}, Corruption::drop_triangle);
  CHECK(again.lhs == c.lhs);
  CHECK(verify_identity(Identity::m_composition, {0, 1}, 3, Corruption::drop_square).counterexample.has_value());
}

TEST_CASE("identity names round trip") {
  for (auto id : {Identity::m_composition, Identity::f_composition, Identity::fprime_composition}) {
    CHECK(parse_identity(identity_name(id)) == id);
  }
  CHECK_FALSE(parse_identity("bogus").has_value());
}
