#include "hopf/scalar.hpp"

#include <cctype>

namespace hopf {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw ValueError("field modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::string tail = text.substr(3);
    if (!is_integer_literal(tail) || tail[0] == '-' || tail[0] == '+')
      throw ValueError("bad field spec '" + text + "'");
    return prime(std::stoull(tail));
  }
  throw ValueError("bad field spec '" + text + "' (expected Q or Fp:<prime>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long value) : field_(f), v_(value) { reduce(); }

void Scalar::reduce() {
  if (field_.is_rational()) return;
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldError("mixed scalars: " + field_.to_string() + " vs " +
                     o.field_.to_string());
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ValueError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text))
      throw ValueError("bad coefficient '" + text + "'");
    Scalar s(f, mpq_class(mpz_class(text)));
    s.reduce();
    return s;
  }
  if (!f.is_rational())
    throw ValueError("fraction '" + text + "' in a prime field");
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw ValueError("bad coefficient '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw ValueError("zero denominator in '" + text + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Scalar(f, std::move(q));
}

std::string Scalar::to_string() const { return v_.get_str(); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(field_, mpq_class(v_ + o.v_));
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(field_, mpq_class(v_ - o.v_));
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(field_, mpq_class(v_ * o.v_));
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(field_, mpq_class(-v_));
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValueError("division by zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / v_));
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw ValueError("no inverse mod " + std::to_string(field_.characteristic()));
  return Scalar(field_, mpq_class(inv));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return v_ == o.v_;
}

}  // namespace hopf
