#include "ovalbound/bounds.hpp"
#include "ovalbound/errors.hpp"

#include <doctest.h>

using namespace ovalbound;

TEST_CASE("closed-form bound values") {
  CHECK(s_bound(7).value == 9);
  CHECK(s_bound(1).value == 0);
  CHECK(vz_bound(15).value == 38); // h(15)=5: 36 + 200/100
  CHECK(vz_bound(7).value == 4);
  CHECK(vz_bound(9).value == 9);
  CHECK(zvonilov_bound(7).value == 6);
  CHECK(hyperboloid_bound(1, 1).value == 1);
  CHECK(hyperboloid_bound(3, 5).value == 8);
  CHECK(ellipsoid_bound(1).value == 1);
  CHECK(ellipsoid_bound(5).value == 13);
  CHECK(nonorientable_vz_bound(5, -10).value == 4); // 5 - 6 + 5
  CHECK(harnack_orientable_bound(7).value == 16);
  CHECK(harnack_nonorientable_bound(-10).value == 13);
}

TEST_CASE("generic dispatcher routes by kind") {
  BoundParams p;
  p.m = 7;
  p.a = 1;
  p.b = 1;
  p.chi = -10;
  CHECK(evaluate_bound(BoundKind::S, p).value == 9);
  CHECK(evaluate_bound(BoundKind::VZ, p).value == 4);
  CHECK(evaluate_bound(BoundKind::Zvonilov, p).value == 6);
  CHECK(evaluate_bound(BoundKind::Hyperboloid, p).value == 1);
  CHECK(evaluate_bound(BoundKind::Ellipsoid, p).value == 25);
  CHECK(evaluate_bound(BoundKind::HarnackOrientable, p).value == 16);
  CHECK(evaluate_bound(BoundKind::HarnackNonOrientable, p).value == 13);
  CHECK(evaluate_bound(BoundKind::NonOrientableVZ, p).value == 0); // 5 - 12 + 7
  CHECK(evaluate_bound(BoundKind::NonOrientableVZ, p).kind == BoundKind::NonOrientableVZ);
  for (BoundValue v : {s_bound(7), vz_bound(7), zvonilov_bound(7)}) CHECK(v.value >= 0);
}

TEST_CASE("bound domain errors") {
  CHECK_THROWS_AS(s_bound(4), ParityError);
  CHECK_THROWS_AS(vz_bound(1), OutOfDomain);
  CHECK_THROWS_AS(hyperboloid_bound(2, 3), ParityError);
  CHECK_THROWS_AS(ellipsoid_bound(2), ParityError);
  CHECK_THROWS_AS(nonorientable_vz_bound(5, -9), ParityError);
  CHECK_THROWS_AS(harnack_nonorientable_bound(2), OutOfDomain);
}

TEST_CASE("vz - s closed form") {
  CHECK(vz_minus_s(7) == -5);
  CHECK(vz_minus_s(9) == -7);
  // the closed form equals the difference of the two bounds, odd m <= 2001
  for (int m = 3; m <= 2001; m += 2)
    CHECK(vz_minus_s(m) == vz_bound(m).value - s_bound(m).value);
}

TEST_CASE("s is an integer for odd degrees") {
  for (int m = 1; m <= 999; m += 2) CHECK(denominator(s_bound(m).value) == 1);
}

TEST_CASE("prime powers make vz smaller than s") {
  for (BigInt m : {BigInt(3), BigInt(5), BigInt(7), BigInt(9), BigInt(27), BigInt(121),
                   BigInt(125), BigInt(343)}) {
    CHECK(vz_bound(m).value == Rational((m - 3) * (m - 3), 4));
    CHECK(vz_bound(m).value < s_bound(m).value);
  }
}

TEST_CASE("mp certificates") {
  MpCertificate c0 = mp_sequence(0);
  CHECK(c0.m == 552123);
  CHECK(c0.nu5 >= 1);
  CHECK(c0.nu7 >= 1);
  CHECK(c0.h == 169);
  CHECK(c0.vz_gap > 0);
  CHECK(c0.vz_gap == Rational(BigInt(3267) * 3267 - 4 * 552123 + 7, 4));

  MpCertificate c1 = mp_sequence(1);
  CHECK(c1.m == BigInt(1287) * pow(BigInt(429), 13));
  CHECK(c1.m % 2 == 1);
  CHECK(c1.nu5 >= 1);
  CHECK(c1.nu7 >= 1);
  CHECK(c1.h == pow(BigInt(13), 14));
  CHECK(c1.vz_gap > 0);

  // 35 | m_p + 2 for the first few p
  for (unsigned p = 0; p <= 3; ++p) {
    MpCertificate c = mp_sequence(p);
    CHECK((c.m + 2) % 35 == 0);
    CHECK(c.m % 2 == 1);
  }
}
