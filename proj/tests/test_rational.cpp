#include <catch2/catch_amalgamated.hpp>

#include "boxhelly/clustering.hpp"
#include "boxhelly/rational.hpp"
#include "boxhelly/rng.hpp"

using namespace boxhelly;

TEST_CASE("parsing accepts p/q, integers and finite decimals") {
  CHECK(parse_rational("1.25") == make_rational(5, 4));
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-0.75") == make_rational(-3, 4));
  CHECK(parse_rational("2.5") == make_rational(5, 2));
  CHECK(parse_rational("-.5") == make_rational(-1, 2));
  CHECK(parse_rational("3.") == make_rational(3));
  CHECK(parse_rational("5/4") == make_rational(5, 4));
  CHECK(parse_rational("-10/8") == make_rational(-5, 4));
  CHECK(parse_rational("+7") == make_rational(7));
  CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parsing rejects non-finite and malformed literals") {
  for (const char* bad : {"", "1e5", "abc", "1.2.3", "1/0", "nan", "inf", "--2", "1/-2",
                          "0x10", ".", "5 /4"})
    CHECK_THROWS_AS(parse_rational(bad), parse_error);
}

TEST_CASE("serialization is canonical p/q") {
  CHECK(rat_to_string(parse_rational("1.25")) == "5/4");
  CHECK(rat_to_string(make_rational(2)) == "2/1");
  CHECK(rat_to_string(make_rational(10, 8)) == "5/4");
  CHECK(rat_to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(rat_to_string(Rational(0)) == "0/1");
}

TEST_CASE("parse and print round-trip on random rationals") {
  Rng rng(411);
  for (int i = 0; i < 500; ++i) {
    long long num = static_cast<long long>(rng.below(2001)) - 1000;
    long long den = 1 + static_cast<long long>(rng.below(40));
    Rational r = make_rational(num, den);
    CHECK(parse_rational(rat_to_string(r)) == r);
  }
}

TEST_CASE("ceil and floor of rationals") {
  CHECK(ceil_rational(make_rational(7, 2)) == 4);
  CHECK(ceil_rational(make_rational(-7, 2)) == -3);
  CHECK(ceil_rational(make_rational(6)) == 6);
  CHECK(floor_rational(make_rational(7, 2)) == 3);
  CHECK(floor_rational(make_rational(-7, 2)) == -4);
}

TEST_CASE("ln upper bound overshoots by at most 1e-6") {
  CHECK(detail::ln_upper(Rational(1)) == 0);
  // ln 10 = 2.302585092994046...
  Rational ln10 = detail::ln_upper(Rational(10));
  CHECK(ln10 >= make_rational(2302585092994046LL, 1000000000000000LL));
  CHECK(ln10 <= make_rational(2302586092994047LL, 1000000000000000LL));
  // ln 2 = 0.693147180559945...
  Rational ln2 = detail::ln_upper(Rational(2));
  CHECK(ln2 >= make_rational(693147180559945LL, 1000000000000000LL));
  CHECK(ln2 <= make_rational(693148180559946LL, 1000000000000000LL));
  // huge argument exercises the halving reduction; ln 2^20 = 20 ln 2
  Rational big = detail::ln_upper(Rational(1048576));
  CHECK(big >= 20 * ln2 - make_rational(1, 1000000));
  CHECK(big <= 20 * ln2 + make_rational(1, 1000000));
}

TEST_CASE("planned trial count matches the ceiled formula") {
  // gamma 1/2, delta 1/10: ceil(2 * ln 10) = ceil(4.605...) = 5
  CHECK(planned_trials(make_rational(1, 2), make_rational(1, 10)) == 5);
  // gamma 1, delta 1: zero trials
  CHECK(planned_trials(Rational(1), Rational(1)) == 0);
  // gamma 1/10, delta 1/10: ceil(10 ln 10) = 24
  CHECK(planned_trials(make_rational(1, 10), make_rational(1, 10)) == 24);
}
