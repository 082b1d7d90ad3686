#include <doctest.h>

#include "hopf/scalar.hpp"

using namespace hopf;

TEST_CASE("field parse and print round trip") {
  CHECK(Field::rationals().to_string() == "Q");
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("Fp:5").characteristic() == 5);
  CHECK(Field::parse("Fp:5").to_string() == "Fp:5");
  CHECK(Field::rationals().is_rational());
  CHECK_FALSE(Field::parse("Fp:7").is_rational());
}

TEST_CASE("field rejects composites and junk") {
  CHECK_THROWS_AS(Field::prime(4), ValueError);
  CHECK_THROWS_AS(Field::prime(1), ValueError);
  CHECK_THROWS_AS(Field::prime(0), ValueError);
  CHECK_THROWS_AS(Field::parse("Fp:9"), ValueError);
  CHECK_THROWS_AS(Field::parse("R"), ValueError);
  CHECK_THROWS_AS(Field::parse("Fp:"), ValueError);
  CHECK_THROWS_AS(Field::parse("fp:5"), ValueError);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::parse("Fp:1000003"));
}

TEST_CASE("rational arithmetic is canonical") {
  const Field q = Field::rationals();
  Scalar half = Scalar::rational(1, 2);
  Scalar third = Scalar::rational(2, 6);
  CHECK(third.to_string() == "1/3");
  CHECK((half + third).to_string() == "5/6");
  CHECK((half - half).is_zero());
  CHECK((half * Scalar::of(q, 2)).is_one());
  CHECK((half / third).to_string() == "3/2");
  CHECK((-half).to_string() == "-1/2");
  CHECK(half.inverse().to_string() == "2");
  CHECK(Scalar::rational(-4, -6).to_string() == "2/3");
  CHECK(Scalar::rational(3, -6).to_string() == "-1/2");
  CHECK(Scalar::parse(q, "-12/8").to_string() == "-3/2");
  CHECK(Scalar::parse(q, "0/17").is_zero());
}

TEST_CASE("prime field residues stay reduced") {
  const Field f5 = Field::prime(5);
  Scalar two = Scalar::of(f5, 2);
  Scalar four = Scalar::of(f5, -1);
  CHECK(four.to_string() == "4");
  CHECK((two + four).is_one());
  CHECK((two * four).to_string() == "3");
  CHECK(two.pow(4).is_one());
  CHECK(two.inverse().to_string() == "3");
  CHECK(Scalar::parse(f5, "12").to_string() == "2");
  CHECK(Scalar::parse(f5, "-3").to_string() == "2");
  CHECK((two - two).is_zero());
}

TEST_CASE("division by zero and bad literals are value errors") {
  const Field q = Field::rationals();
  const Field f5 = Field::prime(5);
  CHECK_THROWS_AS(Scalar::rational(1, 0), ValueError);
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ValueError);
  CHECK_THROWS_AS((void)(Scalar::one(q) / Scalar::zero(q)), ValueError);
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), ValueError);
  CHECK_THROWS_AS(Scalar::parse(q, "a"), ValueError);
  CHECK_THROWS_AS(Scalar::parse(q, "1.5"), ValueError);
  CHECK_THROWS_AS(Scalar::parse(q, ""), ValueError);
  CHECK_THROWS_AS(Scalar::parse(q, "1/"), ValueError);
  CHECK_THROWS_AS(Scalar::parse(f5, "1/2"), ValueError);
}

TEST_CASE("mixing fields is a field error") {
  const Scalar a = Scalar::one(Field::rationals());
  const Scalar b = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS((void)(a + b), FieldError);
  CHECK_THROWS_AS((void)(a * b), FieldError);
  CHECK_THROWS_AS((void)(a / b), FieldError);
  const Scalar c = Scalar::one(Field::prime(7));
  CHECK_THROWS_AS((void)(b - c), FieldError);
}

TEST_CASE("pow matches repeated multiplication") {
  const Field q = Field::rationals();
  Scalar x = Scalar::rational(-2, 3);
  Scalar acc = Scalar::one(q);
  for (std::uint64_t e = 0; e <= 7; ++e) {
    CHECK(x.pow(e) == acc);
    acc *= x;
  }
}
