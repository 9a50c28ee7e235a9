#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sduality/errors.hpp"
#include "sduality/field.hpp"
#include "sduality/monomial.hpp"

namespace sduality {

/// Exact multivariate polynomial: terms kept strictly descending in the
/// ambient monomial order, never a zero coefficient. The coefficient field
/// travels with the polynomial so that the zero polynomial still knows where
/// it lives.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    FieldElement coeff;

    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
  };

  Polynomial(FieldDescriptor field, MonomialOrder order)
      : field_(field), order_(order) {}

  static Polynomial zero(FieldDescriptor field, MonomialOrder order) {
    return Polynomial(field, order);
  }

  static Polynomial constant(FieldDescriptor field, MonomialOrder order,
                             FieldElement c) {
    Polynomial p(field, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(order.nvars()), std::move(c)});
    return p;
  }

  static Polynomial variable(FieldDescriptor field, MonomialOrder order, std::size_t i) {
    Polynomial p(field, order);
    p.terms_.push_back({Monomial::variable(order.nvars(), i), field.one()});
    return p;
  }

  static Polynomial term(FieldDescriptor field, MonomialOrder order, Monomial m,
                         FieldElement c) {
    Polynomial p(field, order);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Sorts, combines and drops zeros.
  static Polynomial from_terms(FieldDescriptor field, MonomialOrder order,
                               std::vector<Term> terms) {
    Polynomial p(field, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  FieldDescriptor field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const {
    if (terms_.empty()) throw ValueError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading().mono; }
  const FieldElement& leading_coefficient() const { return leading().coeff; }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_)
      d = std::max(d, static_cast<std::int64_t>(t.mono.degree()));
    return d;
  }

  FieldElement coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_) {
      int c = order_.compare(t.mono, m);
      if (c == 0) return t.coeff;
      if (c < 0) break;  // terms descending: everything after is smaller
    }
    return field_.zero();
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Polynomial operator-() const {
    Polynomial out(field_, order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial out(field_, order_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        out.terms_.push_back(o.terms_[j++]);
      } else {
        FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial out(field_, order_);
    if (terms_.empty() || o.terms_.empty()) return out;
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    out.terms_ = std::move(prod);
    out.normalize();
    return out;
  }

  Polynomial scaled(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(field_, order_);
    Polynomial out(field_, order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
  }

  /// (coeff * mono) * this, no re-sort needed (term orders are multiplicative).
  Polynomial times_term(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(field_, order_);
    Polynomial out(field_, order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial result = constant(field_, order_, field_.one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      base = (e >>= 1) ? base * base : base;
    }
    return result;
  }

  FieldElement eval(std::span<const FieldElement> point) const {
    if (point.size() != nvars())
      throw ValueError("evaluation point has wrong arity: expected " +
                       std::to_string(nvars()) + ", got " + std::to_string(point.size()));
    // power tables per variable
    std::vector<std::uint32_t> max_e(nvars(), 0);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars(); ++i)
        max_e[i] = std::max(max_e[i], t.mono.exponent(i));
    std::vector<std::vector<FieldElement>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      powers[i].reserve(max_e[i] + 1);
      powers[i].push_back(field_.one());
      for (std::uint32_t k = 1; k <= max_e[i]; ++k)
        powers[i].push_back(powers[i].back() * point[i]);
    }
    FieldElement acc = field_.zero();
    for (const auto& t : terms_) {
      FieldElement v = t.coeff;
      for (std::size_t i = 0; i < nvars(); ++i) {
        const std::uint32_t e = t.mono.exponent(i);
        if (e) v *= powers[i][e];
      }
      acc += v;
    }
    return acc;
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= nvars()) throw ValueError("derivative variable index out of range");
    Polynomial out(field_, order_);
    for (const auto& t : terms_) {
      const std::uint32_t e = t.mono.exponent(var);
      if (e == 0) continue;
      FieldElement c = t.coeff * field_.from_int(e);
      if (c.is_zero()) continue;  // characteristic divides the exponent
      auto exps = t.mono.exponents();
      exps[var] -= 1;
      out.terms_.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    out.normalize();
    return out;
  }

  /// Quotient this / divisor when the division is exact; throws otherwise.
  Polynomial exact_divide(const Polynomial& divisor) const {
    check_ring(divisor);
    if (divisor.is_zero()) throw ValueError("division by the zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(field_, order_);
    const FieldElement lc_inv = divisor.leading_coefficient().inverse();
    while (!rem.is_zero()) {
      const Term& lt = rem.leading();
      if (!divisor.leading_monomial().divides(lt.mono))
        throw ValueError("polynomial division is not exact");
      const Monomial m = divisor.leading_monomial().divide_into(lt.mono);
      const FieldElement c = lt.coeff * lc_inv;
      quot.terms_.push_back({m, c});
      rem -= divisor.times_term(m, c);
    }
    // quotient terms were produced in strictly descending order already
    return quot;
  }

  /// Leading coefficient scaled to 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  /// Over the rationals: primitive integer coefficients with positive leading
  /// coefficient (controls coefficient growth between reduction steps).
  /// Over F_p: monic.
  Polynomial content_normalized() const {
    if (is_zero()) return *this;
    if (field_.is_prime_field()) return monic();
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : terms_) {
      const Rational& r = t.coeff.rat();
      mpz_class den = r.denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
      den_lcm = den_lcm / g * den;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.numerator().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    if (leading_coefficient().rat().sign() < 0) scale = -scale;
    return scaled(FieldElement(scale));
  }

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && order_ == o.order_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text form; parse(str()) round-trips.
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Term& t = terms_[k];
      bool negative = t.coeff.is_rational() && t.coeff.rat().sign() < 0;
      FieldElement mag = negative ? -t.coeff : t.coeff;
      if (k == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += t.mono.str(names);
      } else {
        out += mag.str() + "*" + t.mono.str(names);
      }
    }
    return out;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (field_ != o.field_)
      throw ValueError("polynomial field mismatch: " + field_.name() + " vs " +
                       o.field_.name());
    if (order_ != o.order_)
      throw ValueError("polynomial ring mismatch (variable count or order)");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return order_.greater(a.mono, b.mono);
    });
    std::vector<Term> combined;
    combined.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!combined.empty() && combined.back().mono == t.mono) {
        combined.back().coeff += t.coeff;
        if (combined.back().coeff.is_zero()) combined.pop_back();
      } else if (!t.coeff.is_zero()) {
        combined.push_back(std::move(t));
      }
    }
    terms_ = std::move(combined);
  }

  FieldDescriptor field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// The doubled ring k[X_1..X_n, Y_1..Y_n]. Convention, fixed project-wide:
// variables 0..n-1 are X_1..X_n (first tensor factor), variables n..2n-1 are
// Y_1..Y_n (second factor).
// ---------------------------------------------------------------------------

inline MonomialOrder doubled_order(const MonomialOrder& order) {
  return MonomialOrder(order.kind(), 2 * order.nvars());
}

/// f(x) viewed as f(X) in the doubled ring.
inline Polynomial embed_first(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.mono.exponent(i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(f.field(), doubled_order(f.order()), std::move(terms));
}

/// f(x) viewed as f(Y).
inline Polynomial embed_second(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[n + i] = t.mono.exponent(i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(f.field(), doubled_order(f.order()), std::move(terms));
}

/// f(Y_1, .., Y_k, X_{k+1}, .., X_n): the first k variables go to the second
/// factor; used by the telescoping lift.
inline Polynomial embed_mixed(const Polynomial& f, std::size_t k) {
  const std::size_t n = f.nvars();
  if (k > n) throw ValueError("embed_mixed: split point out of range");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < k)
        e[n + i] = t.mono.exponent(i);
      else
        e[i] = t.mono.exponent(i);
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(f.field(), doubled_order(f.order()), std::move(terms));
}

/// Substitute Y_i := X_i, landing back in k[x_1..x_n].
inline Polynomial restrict_diagonal(const Polynomial& p) {
  if (p.nvars() % 2 != 0)
    throw ValueError("restrict_diagonal expects a doubled-ring polynomial");
  const std::size_t n = p.nvars() / 2;
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = t.mono.exponent(i) + t.mono.exponent(n + i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(p.field(), MonomialOrder(p.order().kind(), n),
                                std::move(terms));
}

/// X_i - Y_i as a doubled-ring polynomial (i is 0-based).
inline Polynomial diagonal_generator(FieldDescriptor field, const MonomialOrder& dord,
                                     std::size_t i) {
  const std::size_t n = dord.nvars() / 2;
  Polynomial xi = Polynomial::variable(field, dord, i);
  Polynomial yi = Polynomial::variable(field, dord, n + i);
  return xi - yi;
}

/// Exact quotient p / (X_i - Y_i) by synthetic division in X_i. The
/// precondition is that p vanishes under X_i := Y_i; a nonzero remainder
/// reports exactly that.
inline Polynomial divide_exact_linear(const Polynomial& p, std::size_t i) {
  if (p.nvars() % 2 != 0)
    throw ValueError("divide_exact_linear expects a doubled-ring polynomial");
  const std::size_t n = p.nvars() / 2;
  if (i >= n) throw ValueError("divide_exact_linear: variable index out of range");

  const MonomialOrder dord = p.order();
  const FieldDescriptor field = p.field();

  // split p into slices by the X_i exponent, with that exponent removed
  std::uint32_t max_e = 0;
  for (const auto& t : p.terms()) max_e = std::max(max_e, t.mono.exponent(i));
  std::vector<std::vector<Polynomial::Term>> slices(max_e + 1);
  for (const auto& t : p.terms()) {
    auto e = t.mono.exponents();
    const std::uint32_t k = e[i];
    e[i] = 0;
    slices[k].push_back({Monomial(std::move(e)), t.coeff});
  }

  const Polynomial yi = Polynomial::variable(field, dord, n + i);

  // synthetic division: carry_k = c_k + Y_i * carry_{k+1}, quotient collects
  // carry_k * X_i^{k-1}; carry_0 is the remainder p|_{X_i=Y_i}.
  Polynomial carry(field, dord);
  Polynomial quotient(field, dord);
  for (std::size_t k = slices.size(); k-- > 0;) {
    Polynomial ck = Polynomial::from_terms(field, dord, std::move(slices[k]));
    carry = ck + yi * carry;
    if (k > 0) {
      quotient += carry.times_term(Monomial::variable(2 * n, i, static_cast<std::uint32_t>(k - 1)), field.one());
    }
  }
  if (!carry.is_zero())
    throw ValueError("divide_exact_linear: polynomial does not vanish on X_" +
                     std::to_string(i + 1) + " = Y_" + std::to_string(i + 1));
  return quotient;
}

}  // namespace sduality
