#include <random>

#include "doctest.h"
#include "parhiggs/weightgen.hpp"

using namespace parhiggs;

TEST_CASE("admissible range for the degree parameter a") {
  auto r = a_range(1, 2, 5);
  CHECK(r.interval.lo == rat(2));
  CHECK(r.interval.hi == rat(11, 3));
  CHECK(r.integers == std::vector<long>{2, 3});

  for (std::size_t s : {3, 5, 7, 9}) {
    auto r11 = a_range(1, 1, s);
    CHECK(r11.interval.lo == r11.interval.hi);
    CHECK(r11.interval.lo == rat(static_cast<long>(s) + 1, 2));
    if (s % 2 == 1)
      CHECK(r11.integers == std::vector<long>{static_cast<long>((s + 1) / 2)});
    else
      CHECK(r11.integers.empty());
  }

  auto r22 = a_range(2, 2, 5);
  CHECK(r22.interval.lo == rat(7, 4));
  CHECK(r22.interval.hi == rat(17, 4));
  CHECK(r22.integers == std::vector<long>{2, 3, 4});
}

TEST_CASE("constant construction reproduces the reference component") {
  ConstructionInput inp{1, 2, 5, 2, std::vector<Rat>(5, rat(1, 10))};
  auto res = construct_constant(inp);
  REQUIRE(res.feasible);
  CHECK(res.k == std::vector<long>(5, 1));
  CHECK(res.d == 3);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(res.mw.alpha[j] == std::vector<Rat>{rat(4, 15)});
    CHECK(res.mw.beta[j] == std::vector<Rat>(2, rat(11, 30)));
  }
  auto c = certificate(res.mw, res.d);
  CHECK(c.pass());
  CHECK(c.epsilon == rat(1, 2));
  CHECK(c.j_interval.lo == rat(7, 3));
  CHECK(c.j_interval.hi == rat(23, 6));
}

TEST_CASE("constant construction for the symmetric rank-one case") {
  ConstructionInput inp{1, 1, 5, 3, std::vector<Rat>(5, rat(1, 10))};
  auto res = construct_constant(inp);
  REQUIRE(res.feasible);
  CHECK(res.d == 1);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(res.mw.alpha[j] == std::vector<Rat>{rat(9, 20)});
    CHECK(res.mw.beta[j] == std::vector<Rat>{rat(11, 20)});
  }
  CHECK(certificate(res.mw, res.d).pass());
}

TEST_CASE("constant construction infeasibility and range errors") {
  ConstructionInput big{1, 2, 5, 2, std::vector<Rat>(5, rat(1, 4))};
  auto res = construct_constant(big);
  CHECK_FALSE(res.feasible);
  CHECK(res.reason.find("upper bound 1") != std::string::npos);

  ConstructionInput out{1, 2, 5, 4, std::vector<Rat>(5, rat(1, 10))};
  CHECK_THROWS_AS(construct_constant(out), std::invalid_argument);
  ConstructionInput neg{1, 2, 5, 2, std::vector<Rat>(5, rat(-1, 10))};
  CHECK_FALSE(construct_constant(neg).feasible);
}

TEST_CASE("default spread profile is deterministic and feasible") {
  auto prof = default_epsilon_profile(1, 2, 5, 2);
  CHECK(prof == std::vector<Rat>(5, rat(1, 10)));

  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      for (std::size_t s = 3; s <= 7; ++s)
        for (long a : a_range(p, q, s).integers) {
          auto profile = default_epsilon_profile(p, q, s, a);
          ConstructionInput inp{p, q, s, a, profile};
          auto res = construct_constant(inp);
          REQUIRE_MESSAGE(res.feasible, res.reason);
          CHECK(validate(res.mw).empty());
          auto c = certificate(res.mw, res.d);
          CHECK(c.pass());
          CHECK(res.d == (static_cast<long>(q) - static_cast<long>(p)) * a +
                             static_cast<long>(p));
          // Per-puncture integrality p*alpha + q*beta = k^j.
          for (std::size_t j = 0; j < s; ++j) {
            Rat lvl = Rat(static_cast<long>(p)) * res.mw.alpha[j][0] +
                      Rat(static_cast<long>(q)) * res.mw.beta[j][0];
            CHECK(lvl == Rat(res.k[j]));
          }
        }
}

TEST_CASE("symmetric self-dual construction") {
  auto res = construct_sp(2, 5, std::vector<Rat>(5, rat(1, 10)));
  REQUIRE(res.feasible);
  CHECK(res.d == 2);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(res.mw.alpha[j] == std::vector<Rat>(2, rat(9, 20)));
    CHECK(res.mw.beta[j] == std::vector<Rat>(2, rat(11, 20)));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(res.mw.beta[j][i] == 1 - res.mw.alpha[j][1 - i]);
  }
  CHECK(res.mw.alpha_norm() + res.mw.beta_norm() == rat(2 * 5));
  CHECK(certificate(res.mw, res.d).pass());

  CHECK_THROWS_AS(construct_sp(2, 4, std::vector<Rat>(4, rat(1, 10))), std::invalid_argument);

  auto bad = construct_sp(3, 5, std::vector<Rat>(5, rat(1, 4)));
  CHECK_FALSE(bad.feasible);  // total 5/4 above 1; lower bound for p=3 is 1/2

  auto good3 = construct_sp(3, 5, std::vector<Rat>(5, rat(3, 20)));  // total 3/4 in (1/2,1)
  REQUIRE(good3.feasible);
  CHECK(good3.d == 3);
  CHECK(certificate(good3.mw, good3.d).pass());
  auto low3 = construct_sp(3, 5, std::vector<Rat>(5, rat(1, 12)));  // total 5/12 <= 1/2
  CHECK_FALSE(low3.feasible);
}

TEST_CASE("feather perturbation keeps membership and certificates") {
  ConstructionInput inp{1, 2, 5, 2, std::vector<Rat>(5, rat(1, 10))};
  auto base = construct_constant(inp);
  REQUIRE(base.feasible);

  FeatherPerturbation f;
  f.eta.assign(5, {rat(-2)});
  f.zeta.assign(5, {rat(-1), rat(3)});
  CHECK(validate_perturbation(f, 1, 2, 5).empty());

  CHECK(perturb(base.mw, f, rat(0)) == base.mw);

  Rat t = rat(1, 100);
  auto moved = perturb(base.mw, f, t);
  CHECK(validate(moved).empty());
  CHECK(certificate(moved, base.d).pass());
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(moved.alpha[j][0] == rat(4, 15) - 2 * t);
    CHECK(moved.beta[j][0] == rat(11, 30) - t);
    CHECK(moved.beta[j][1] == rat(11, 30) + 3 * t);
    Rat total = moved.alpha[j][0] + moved.beta[j][0] + moved.beta[j][1];
    CHECK(total == 1);  // zero-sum profile preserves per-puncture sums
  }

  // Large enough scale destroys the alpha/beta separation.
  FeatherPerturbation push;
  push.eta.assign(5, {rat(1)});
  push.zeta.assign(5, {rat(-3), rat(2)});
  CHECK_THROWS_AS(perturb(base.mw, push, rat(1, 10)), std::invalid_argument);

  FeatherPerturbation bad;
  bad.eta.assign(5, {rat(1)});
  bad.zeta.assign(5, {rat(2), rat(-3)});  // not increasing
  CHECK_FALSE(validate_perturbation(bad, 1, 2, 5).empty());
  CHECK_THROWS_AS(perturb(base.mw, bad, rat(1, 100)), std::invalid_argument);
}
