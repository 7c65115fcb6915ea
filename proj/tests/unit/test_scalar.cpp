#include <gmpxx.h>

#include <random>

#include "bicoalg/scalar.hpp"
#include "doctest.h"

using bicoalg::Field;
using bicoalg::Scalar;

namespace {

mpq_class oracle(const Scalar& s) { return mpq_class(s.str()); }

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(-1000000007, 1000000007);
  for (int i = 0; i < 400; ++i) {
    const std::int64_t a = pick(rng), b = pick(rng) | 1, c = pick(rng), d = pick(rng) | 1;
    const Scalar x = Scalar::fraction(a, b), y = Scalar::fraction(c, d);
    mpq_class qx(a, b), qy(c, d);
    qx.canonicalize();
    qy.canonicalize();
    CHECK(oracle(x + y) == qx + qy);
    CHECK(oracle(x - y) == qx - qy);
    CHECK(oracle(x * y) == qx * qy);
    if (!y.is_zero()) CHECK(oracle(x / y) == qx / qy);
  }
}

TEST_CASE("overflow promotes and results demote") {
  Scalar big = Scalar(INT64_MAX);
  big = big * big;
  CHECK(oracle(big) == mpq_class(INT64_MAX) * mpq_class(INT64_MAX));
  const Scalar back = big / Scalar(INT64_MAX);
  CHECK(back == Scalar(INT64_MAX));
  CHECK(back.str() == std::to_string(INT64_MAX));
}

TEST_CASE("residue inverses match brute-force search") {
  for (std::uint64_t p : {2u, 3u, 7u, 101u}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t inv = 0;
      while ((a * inv) % p != 1) ++inv;
      CHECK(Scalar::residue(static_cast<std::int64_t>(a), p).inverse() == Scalar::residue(static_cast<std::int64_t>(inv), p));
    }
  }
}

TEST_CASE("rationals reduce into F_p") {
  const Field f = Field::prime(7);
  CHECK(Scalar::fraction(1, 3).in_field(f) == Scalar::residue(5, 7));
  CHECK(Scalar(-1).in_field(f) == Scalar::residue(6, 7));
  CHECK((Scalar::residue(3, 7) + Scalar(5)) == Scalar::residue(1, 7));
}

TEST_CASE("parsing") {
  CHECK(Scalar::parse("-6/4", Field::rationals()) == Scalar::fraction(-3, 2));
  CHECK(Scalar::parse("12", Field::prime(5)) == Scalar::residue(2, 5));
  CHECK_THROWS(Scalar::parse("1/0", Field::rationals()));
  CHECK_THROWS(Scalar::fraction(1, 0));
  CHECK_THROWS(Scalar(0).inverse());
}
