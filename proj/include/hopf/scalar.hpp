#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf {

/* Error taxonomy: FieldError for mixed-field arithmetic, ShapeError for
 * dimension mismatches, ValueError for bad input values (parse errors,
 * division by zero, invalid tables).  Axiom failures are never exceptions;
 * they travel in AxiomReport. */
struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground field descriptor: the rationals, or F_p for an explicit prime p.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  // "Q" or "Fp:<p>"; parse accepts exactly these spellings.
  static Field parse(const std::string& text);
  std::string to_string() const;

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;  // 0 means Q
};

/* Exact field element.  Rational values are canonical mpq fractions;
 * F_p values are residues in [0, p) stored in the numerator.  Arithmetic
 * between different fields throws FieldError. */
class Scalar {
 public:
  Scalar() : field_(), v_(0) {}  // rational zero

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar of(const Field& f, long value) { return Scalar(f, value); }
  static Scalar rational(long num, long den);

  // Canonical text forms: "n" or "n/d" over Q, a residue integer over F_p.
  // Parsing accepts any integer (reduced mod p) and non-canonical fractions.
  static Scalar parse(const Field& f, const std::string& text);
  std::string to_string() const;

  const Field& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  Scalar(const Field& f, long value);
  Scalar(const Field& f, mpq_class v) : field_(f), v_(std::move(v)) {}
  void reduce();
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class v_;
};

}  // namespace hopf
