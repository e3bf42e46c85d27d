#include <doctest.h>

#include "ncg/errors.h"
#include "ncg/rational.h"

using namespace ncg;

TEST_CASE("parse and print canonical fractions") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/8") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("3.5") == Rational(7, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational(" 12/4 ") == Rational(3));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("malformed fractions are parse errors") {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.", ".5", "/3", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("round trip through strings") {
  for (const Rational& r : {Rational(0), Rational(1, 100), Rational(-7, 3), Rational(1000000, 1)}) {
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("infinity absorbs addition and sits above every finite value") {
  const ExtRational inf = ExtRational::infinity();
  CHECK(inf.is_infinite());
  CHECK((inf + ExtRational(3)).is_infinite());
  CHECK(ExtRational(1000000) < inf);
  CHECK(inf == ExtRational::infinity());
  CHECK_FALSE(inf < inf);
  CHECK(to_string(inf) == "inf");
  CHECK(parse_ext_rational("inf").is_infinite());
  CHECK(parse_ext_rational("5/2") == ExtRational(Rational(5, 2)));
  CHECK_THROWS(inf.value());
}

TEST_CASE("difference of extended values") {
  CHECK(difference(ExtRational(5), ExtRational(Rational(1, 2))) == ExtRational(Rational(9, 2)));
  CHECK(difference(ExtRational::infinity(), ExtRational(3)).is_infinite());
  CHECK_THROWS(difference(ExtRational(3), ExtRational::infinity()));
}
