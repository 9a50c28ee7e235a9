#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "sduality/errors.hpp"

namespace sduality {

/// Exact rational number backed by GMP. Always canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw ValueError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ValueError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  /// Accepts "a" or "a/b" with optional leading '-'.
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text, 10)));
      mpz_class num(text.substr(0, slash), 10);
      mpz_class den(text.substr(slash + 1), 10);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ValueError("malformed rational literal: '" + text + "'");
    }
  }

  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(static_cast<mpq_class>(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(static_cast<mpq_class>(v_ * o.v_)); }
  Rational inverse() const {
    if (is_zero()) throw ValueError("division by zero");
    return Rational(static_cast<mpq_class>(1 / v_));
  }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Deterministic primality test for 32-bit candidates (trial division).
inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t q = 3; static_cast<std::uint64_t>(q) * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

/// Element of F_p for a prime p < 2^31. Residue kept in [0, p); products go
/// through 64-bit intermediates, hence the modulus cap.
class Fp {
 public:
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    r_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_, Raw{}); }
  Fp operator+(const Fp& o) const {
    check(o);
    std::uint32_t s = r_ + o.r_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, Raw{});
  }
  Fp operator-(const Fp& o) const {
    check(o);
    std::uint32_t s = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return Fp(s, p_, Raw{});
  }
  Fp operator*(const Fp& o) const {
    check(o);
    return Fp(static_cast<std::uint32_t>(
                  (static_cast<std::uint64_t>(r_) * o.r_) % p_),
              p_, Raw{});
  }
  Fp inverse() const {
    if (r_ == 0) throw ValueError("division by zero");
    // extended Euclid on (r, p)
    std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return Fp(static_cast<std::uint32_t>(x0), p_, Raw{});
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  bool operator==(const Fp& o) const { return p_ == o.p_ && r_ == o.r_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(r_); }

 private:
  struct Raw {};
  Fp(std::uint32_t r, std::uint32_t p, Raw) : r_(r), p_(p) {}

  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw ValueError("field mismatch: F_" + std::to_string(p_) + " vs F_" +
                       std::to_string(o.p_));
  }

  std::uint32_t r_;
  std::uint32_t p_;
};

class FieldElement;

/// Names a coefficient field: the rationals, or F_p with p prime, p < 2^31.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() { return FieldDescriptor(0); }

  static FieldDescriptor prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
      throw ValueError("prime modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
      throw ValueError("modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor(p);
  }

  /// "rational" or "fp:P".
  static FieldDescriptor parse(const std::string& name) {
    if (name == "rational") return rationals();
    if (name.rfind("fp:", 0) == 0) {
      const std::string digits = name.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ValueError("malformed field name: '" + name + "'");
      unsigned long p = 0;
      try {
        p = std::stoul(digits);
      } catch (const std::exception&) {
        throw ValueError("malformed field name: '" + name + "'");
      }
      if (p > 0xffffffffull) throw ValueError("prime modulus out of range: '" + name + "'");
      return prime_field(static_cast<std::uint32_t>(p));
    }
    throw ValueError("unknown field: '" + name + "' (expected \"rational\" or \"fp:P\")");
  }

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  std::string name() const {
    return is_rational() ? "rational" : "fp:" + std::to_string(p_);
  }

  bool operator==(const FieldDescriptor& o) const { return p_ == o.p_; }
  bool operator!=(const FieldDescriptor& o) const { return p_ != o.p_; }

  // defined after FieldElement
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  FieldElement element_from_string(const std::string& text) const;

 private:
  explicit FieldDescriptor(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// A scalar from one concrete field. Operands must come from the same field;
/// mixing kinds or moduli is an error, never a coercion.
class FieldElement {
 public:
  FieldElement() : v_(Rational()) {}
  FieldElement(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Fp f) : v_(f) {}                   // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_prime_field() const { return std::holds_alternative<Fp>(v_); }

  FieldDescriptor field() const {
    return is_rational() ? FieldDescriptor::rationals()
                         : FieldDescriptor::prime_field(std::get<Fp>(v_).modulus());
  }

  const Rational& rat() const {
    if (!is_rational()) throw ValueError("not a rational element");
    return std::get<Rational>(v_);
  }
  const Fp& fp() const {
    if (!is_prime_field()) throw ValueError("not a prime-field element");
    return std::get<Fp>(v_);
  }

  bool is_zero() const {
    return is_rational() ? std::get<Rational>(v_).is_zero() : std::get<Fp>(v_).is_zero();
  }
  bool is_one() const {
    return is_rational() ? std::get<Rational>(v_).is_one() : std::get<Fp>(v_).is_one();
  }

  FieldElement operator-() const {
    return is_rational() ? FieldElement(-std::get<Rational>(v_))
                         : FieldElement(-std::get<Fp>(v_));
  }
  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return is_rational() ? FieldElement(std::get<Rational>(v_) + std::get<Rational>(o.v_))
                         : FieldElement(std::get<Fp>(v_) + std::get<Fp>(o.v_));
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return is_rational() ? FieldElement(std::get<Rational>(v_) - std::get<Rational>(o.v_))
                         : FieldElement(std::get<Fp>(v_) - std::get<Fp>(o.v_));
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return is_rational() ? FieldElement(std::get<Rational>(v_) * std::get<Rational>(o.v_))
                         : FieldElement(std::get<Fp>(v_) * std::get<Fp>(o.v_));
  }
  FieldElement inverse() const {
    return is_rational() ? FieldElement(std::get<Rational>(v_).inverse())
                         : FieldElement(std::get<Fp>(v_).inverse());
  }
  FieldElement operator/(const FieldElement& o) const {
    check(o);
    return *this * o.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const {
    if (is_rational() != o.is_rational()) return false;
    return is_rational() ? std::get<Rational>(v_) == std::get<Rational>(o.v_)
                         : std::get<Fp>(v_) == std::get<Fp>(o.v_);
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical text form: "a/b" or "a" for rationals, the residue for F_p.
  std::string str() const {
    return is_rational() ? std::get<Rational>(v_).str() : std::get<Fp>(v_).str();
  }

  double to_double() const {
    if (!is_rational()) throw ValueError("no canonical real embedding of F_p");
    return std::get<Rational>(v_).to_double();
  }

 private:
  void check(const FieldElement& o) const {
    if (is_rational() != o.is_rational())
      throw ValueError("field mismatch: rational vs prime field");
    if (is_prime_field() && std::get<Fp>(v_).modulus() != std::get<Fp>(o.v_).modulus())
      throw ValueError("field mismatch: F_" + std::to_string(std::get<Fp>(v_).modulus()) +
                       " vs F_" + std::to_string(std::get<Fp>(o.v_).modulus()));
  }

  std::variant<Rational, Fp> v_;
};

inline FieldElement FieldDescriptor::zero() const { return from_int(0); }
inline FieldElement FieldDescriptor::one() const { return from_int(1); }

inline FieldElement FieldDescriptor::from_int(std::int64_t n) const {
  if (is_rational()) return FieldElement(Rational(static_cast<long>(n)));
  return FieldElement(Fp(n, p_));
}

inline FieldElement FieldDescriptor::element_from_string(const std::string& text) const {
  if (is_rational()) return FieldElement(Rational::parse(text));
  // Accept "a" and "a/b" over F_p as well; canonical output is always a residue.
  auto to_fp = [this](const std::string& s) {
    try {
      mpz_class z(s, 10);
      mpz_class r = z % p_;
      return Fp(r.get_si(), p_);
    } catch (const std::invalid_argument&) {
      throw ValueError("malformed prime-field literal: '" + s + "'");
    }
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return FieldElement(to_fp(text));
  return FieldElement(to_fp(text.substr(0, slash)) / to_fp(text.substr(slash + 1)));
}

}  // namespace sduality
