#include "hopfpi/scalar.hpp"

namespace hopfpi {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Digits with no leading zero; "0" itself is fine.
bool valid_unsigned_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s[0] != '0';
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "rational" : "F_" + std::to_string(p);
}

Scalar Scalar::from_int(long v, const Field& f) {
  Scalar s(mpq_class(v), f);
  s.reduce();
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  std::string num = text;
  std::string den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    if (!f.is_rational()) {
      throw InputError("prime-field scalar may not contain '/': " + text);
    }
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && num[0] == '-') {
    neg = true;
    num = num.substr(1);
  }
  if (!valid_unsigned_decimal(num) || (neg && num == "0")) {
    throw InputError("malformed scalar: " + text);
  }
  if (!den.empty() && (!valid_unsigned_decimal(den) || den == "0")) {
    throw InputError("malformed scalar denominator: " + text);
  }
  mpq_class v(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
  v.canonicalize();
  if (neg) v = -v;
  if (!f.is_rational()) {
    if (v < 0 || v >= mpq_class(static_cast<unsigned long>(f.p))) {
      throw InputError("prime-field scalar out of range [0, " +
                       std::to_string(f.p) + "): " + text);
    }
  }
  Scalar s(std::move(v), f);
  s.reduce();
  return s;
}

void Scalar::reduce() {
  if (field_.is_rational()) return;
  mpz_class m(static_cast<unsigned long>(field_.p));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t());
  v_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw InputError("scalars from different fields: " + field_.name() +
                     " vs " + o.field_.name());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r(v_ + o.v_, field_);
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r(v_ - o.v_, field_);
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r(v_ * o.v_, field_);
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (field_.is_rational()) return Scalar(1 / v_, field_);
  mpz_class m(static_cast<unsigned long>(field_.p));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InputError("residue not invertible modulo " + std::to_string(field_.p));
  }
  return Scalar(mpq_class(inv), field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(-v_, field_);
  r.reduce();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return v_ == o.v_;
}

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace hopfpi
