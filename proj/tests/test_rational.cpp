// Copyright 2026 The wynerdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "wyner/errors.hpp"
#include "wyner/rational.hpp"

using wyner::Rational;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  const Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1) - Rational(1, 6) == Rational(5, 6));
  CHECK((Rational(1) + Rational(2, 3)) / Rational(2) == Rational(5, 6));
  CHECK(Rational(5, 2) * Rational(4) == Rational(10));
  CHECK(Rational(9, 10) * Rational(0) == Rational(0));
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(5, 6) < Rational(9, 10));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(13, 14) > Rational(9, 10));
  CHECK(Rational(2, 4) <= Rational(1, 2));
}

TEST_CASE("text form round-trips") {
  CHECK(Rational(5, 6).str() == "5/6");
  CHECK(Rational(10).str() == "10");
  CHECK(Rational(-7, 3).str() == "-7/3");
  for (const Rational r : {Rational(5, 6), Rational(10), Rational(-7, 3), Rational(0)}) {
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
}

TEST_CASE("malformed text is an input error") {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1", "1 "}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)Rational::parse(bad), wyner::InputError);
  }
}
