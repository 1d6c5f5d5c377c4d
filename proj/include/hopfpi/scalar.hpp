#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfpi {

// Malformed input: bad shapes, unparseable documents, mismatched fields,
// non-homomorphisms, exceeded enumeration bounds.  The CLI maps this to
// exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction was invoked outside its hypotheses (for example a step
// that needs an abelian grading group, or a cocommutative coalgebra).
// The CLI maps this to exit code 1 and prints the named hypothesis.
struct GateError : std::runtime_error {
  explicit GateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coefficient field of a document: the rationals (p == 0) or F_p.
struct Field {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);  // validates primality

  std::string name() const;
};

// Exact scalar in a fixed field.  Rational values are kept in lowest terms
// with positive denominator; prime-field values as residues in [0, p).
// Arithmetic between scalars of different fields throws InputError.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f) { return from_int(0, f); }
  static Scalar one(const Field& f) { return from_int(1, f); }
  static Scalar from_int(long v, const Field& f);
  // Strict text form: "n" or "n/d" with d > 0 for rationals (value is
  // canonicalized); a plain decimal residue in [0, p) for prime fields.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical form: "n" or "n/d" (lowest terms, d > 1) over Q, the residue
  // over F_p.  parse(to_string()) round-trips exactly.
  std::string to_string() const;

 private:
  Scalar(mpq_class v, Field f) : v_(std::move(v)), field_(f) {}
  void reduce();  // applies the modulus when field_.p > 0
  void check_same_field(const Scalar& o) const;

  mpq_class v_ = 0;
  Field field_;
};

}  // namespace hopfpi
