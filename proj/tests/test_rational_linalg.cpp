#include <doctest.h>

#include "cuspcheck/errors.hpp"
#include "cuspcheck/linalg.hpp"
#include "cuspcheck/rational.hpp"

using namespace cuspcheck;

TEST_CASE("parse_rational accepts integers and fractions in lowest terms") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(parse_rational("-0/5") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed text and zero denominators") {
  for (const char* bad : {"1/0", "", "abc", "1/", "/2", "1.5", "1//2", "--1", "0x10", " 5/10", "6/-8"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("to_string renders canonical forms") {
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-2, 6)) == "-1/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Integer(-7)) == "-7");
}

TEST_CASE("to_decimal rounds half away from zero") {
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(Rational(12), 2) == "12.00");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(5, 2), 0) == "3");
}

TEST_CASE("gcd and primitivity") {
  CHECK(is_primitive(IntegerVector{Integer(-1), Integer(-1)}));
  CHECK_FALSE(is_primitive(IntegerVector{Integer(2), Integer(2)}));
  CHECK_FALSE(is_primitive(IntegerVector{Integer(0), Integer(0)}));
  CHECK(is_primitive(IntegerVector{Integer(0), Integer(-1)}));
  CHECK(gcd_of(IntegerVector{Integer(6), Integer(-9), Integer(15)}) == 3);
}

TEST_CASE("determinants agree with the permutation expansion") {
  IntegerMatrix m{{Integer(2), Integer(-1), Integer(0)}, {Integer(1), Integer(3), Integer(4)}, {Integer(0), Integer(5), Integer(-2)}};
  // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 4*0) + 0 = 2*(-26) - 2 = -54
  CHECK(determinant(m) == -54);
  CHECK(determinant(to_rational(m)) == Rational(-54));
  IntegerMatrix needs_pivot{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  CHECK(determinant(needs_pivot) == -1);
  IntegerMatrix singular{{Integer(1), Integer(2)}, {Integer(2), Integer(4)}};
  CHECK(determinant(singular) == 0);
}

TEST_CASE("solve is exact and detects singular systems") {
  RationalMatrix m{{Rational(1, 2), Rational(1, 6), Rational(1, 6)},
                   {Rational(1, 6), Rational(1, 12), Rational(1, 24)},
                   {Rational(1, 6), Rational(1, 24), Rational(1, 12)}};
  const RationalVector rhs{Rational(2), Rational(1, 2), Rational(1, 2)};
  const auto x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(m * *x == rhs);
  CHECK(*x == RationalVector{Rational(12), Rational(-12), Rational(-12)});

  RationalMatrix singular{{Rational(1), Rational(2)}, {Rational(1, 2), Rational(1)}};
  CHECK_FALSE(solve(singular, RationalVector{Rational(1), Rational(0)}).has_value());
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("inverse and integer inverse") {
  RationalMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == RationalMatrix::identity(2));
  IntegerMatrix shear{{Integer(1), Integer(1)}, {Integer(0), Integer(1)}};
  const auto si = integer_inverse(shear);
  REQUIRE(si.has_value());
  CHECK(*si == IntegerMatrix{{Integer(1), Integer(-1)}, {Integer(0), Integer(1)}});
  IntegerMatrix two{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}};
  CHECK_FALSE(integer_inverse(two).has_value());
}

TEST_CASE("rank, null space and column-space membership") {
  RationalMatrix m{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}, {Rational(0), Rational(1), Rational(1)}};
  CHECK(rank(m) == 2);
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  CHECK(m * ns[0] == RationalVector(3, Rational(0)));
  CHECK(ns[0] != RationalVector(3, Rational(0)));

  RationalMatrix t{{Rational(1)}, {Rational(1)}};
  CHECK(in_column_space(t, RationalVector{Rational(2), Rational(2)}));
  CHECK_FALSE(in_column_space(t, RationalVector{Rational(1), Rational(0)}));
  CHECK(in_column_space(RationalMatrix(2, 0), RationalVector{Rational(0), Rational(0)}));
  CHECK_FALSE(in_column_space(RationalMatrix(2, 0), RationalVector{Rational(0), Rational(1)}));
}

TEST_CASE("orthogonal residual removes the projection") {
  RationalMatrix t{{Rational(1)}, {Rational(1)}};
  CHECK(orthogonal_residual(t, RationalVector{Rational(1), Rational(0)}) ==
        RationalVector{Rational(1, 2), Rational(-1, 2)});
  CHECK(orthogonal_residual(RationalMatrix(2, 0), RationalVector{Rational(3), Rational(4)}) ==
        RationalVector{Rational(3), Rational(4)});
  // Dependent columns are tolerated.
  RationalMatrix dep{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK(orthogonal_residual(dep, RationalVector{Rational(5), Rational(1), Rational(0)}) ==
        RationalVector{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(is_positive_definite(RationalMatrix{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}));
}
