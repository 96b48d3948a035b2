#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gq42/gf4.hpp"

using namespace gq42;

TEST_CASE("gf4 addition is characteristic 2 with omega^2 = omega + 1") {
  CHECK(Gf4::omega() + Gf4::omega() == Gf4::zero());
  CHECK(Gf4::omega() + Gf4::one() == Gf4::omega2());
  for (int x = 0; x < 4; ++x) {
    CHECK(Gf4::zero() + Gf4(x) == Gf4(x));
    CHECK(Gf4(x) + Gf4(x) == Gf4::zero());
  }
}

TEST_CASE("gf4 multiplication table") {
  CHECK(Gf4::omega() * Gf4::omega() == Gf4::omega2());
  CHECK(Gf4::omega() * Gf4::omega2() == Gf4::one());
  for (int x = 0; x < 4; ++x) {
    CHECK(Gf4::one() * Gf4(x) == Gf4(x));
    CHECK(Gf4::zero() * Gf4(x) == Gf4::zero());
  }
}

TEST_CASE("gf4 field axioms, exhaustively") {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(Gf4(a) + Gf4(b) == Gf4(b) + Gf4(a));
      CHECK(Gf4(a) * Gf4(b) == Gf4(b) * Gf4(a));
      for (int c = 0; c < 4; ++c) {
        CHECK((Gf4(a) + Gf4(b)) + Gf4(c) == Gf4(a) + (Gf4(b) + Gf4(c)));
        CHECK((Gf4(a) * Gf4(b)) * Gf4(c) == Gf4(a) * (Gf4(b) * Gf4(c)));
        CHECK(Gf4(a) * (Gf4(b) + Gf4(c)) == Gf4(a) * Gf4(b) + Gf4(a) * Gf4(c));
      }
    }
  }
  for (int a = 1; a < 4; ++a) {
    CHECK(Gf4(a) * inverse(Gf4(a)) == Gf4::one());
    int inverses = 0;
    for (int b = 1; b < 4; ++b) {
      if (Gf4(a) * Gf4(b) == Gf4::one()) ++inverses;
    }
    CHECK(inverses == 1);
  }
}

TEST_CASE("conjugation is the Frobenius involution") {
  CHECK(conj(Gf4::omega()) == Gf4::omega2());
  CHECK(conj(Gf4::omega2()) == Gf4::omega());
  CHECK(conj(Gf4::one()) == Gf4::one());
  for (int a = 0; a < 4; ++a) {
    CHECK(conj(conj(Gf4(a))) == Gf4(a));
    bool fixed = conj(Gf4(a)) == Gf4(a);
    CHECK(fixed == (a <= 1));
  }
}

TEST_CASE("normalize") {
  Vec4 v{Gf4(0), Gf4::omega(), Gf4::omega(), Gf4(0)};
  Vec4 want{Gf4(0), Gf4::one(), Gf4::one(), Gf4(0)};
  CHECK(normalize(v) == want);

  Vec4 e0{Gf4::one(), Gf4(0), Gf4(0), Gf4(0)};
  CHECK(normalize(e0) == e0);

  Vec4 zero{};
  CHECK_THROWS_AS(normalize(zero), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and constant on scalar orbits") {
  std::set<std::uint8_t> reps;
  for (int p = 1; p < 256; ++p) {
    Vec4 v = unpack(static_cast<std::uint8_t>(p));
    Vec4 n = normalize(v);
    CHECK(normalize(n) == n);
    for (int lam = 1; lam < 4; ++lam) {
      CHECK(normalize(scale(Gf4(lam), v)) == n);
    }
    reps.insert(pack(n));
  }
  CHECK(reps.size() == 85);
}

TEST_CASE("rank and solving helpers") {
  Vec4 e0{Gf4(1), Gf4(0), Gf4(0), Gf4(0)};
  Vec4 e1{Gf4(0), Gf4(1), Gf4(0), Gf4(0)};
  Vec4 e2{Gf4(0), Gf4(0), Gf4(1), Gf4(0)};
  Vec4 e3{Gf4(0), Gf4(0), Gf4(0), Gf4(1)};
  std::vector<Vec4> basis{e0, e1, e2, e3};
  CHECK(rank_of(basis) == 4);

  std::vector<Vec4> dep{e0, e1, add(e0, e1)};
  CHECK(rank_of(dep) == 2);

  Vec4 rhs{Gf4::omega(), Gf4::omega2(), Gf4(1), Gf4(0)};
  Vec4 coeff{};
  REQUIRE(solve_in_basis({e0, e1, e2, e3}, rhs, coeff));
  CHECK(coeff == rhs);

  std::array<Vec4, 3> rows{e0, e1, e2};
  Vec4 d = nullspace_of_rank3(rows);
  CHECK(normalize(d) == e3);
}
