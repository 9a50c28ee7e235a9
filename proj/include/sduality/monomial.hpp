#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sduality/errors.hpp"

namespace sduality {

/// Power product x_1^{e_1} ... x_n^{e_n}, stored as a dense exponent vector
/// with the total degree cached.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : e_(std::move(exponents)),
        deg_(std::accumulate(e_.begin(), e_.end(), std::uint64_t{0})) {}

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint64_t degree() const { return deg_; }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    check(o);
    std::vector<std::uint32_t> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / *this, requires divisibility.
  Monomial divide_into(const Monomial& o) const {
    check(o);
    std::vector<std::uint32_t> e(o.e_);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e_[i] > e[i]) throw ValueError("monomial division is not exact");
      e[i] -= e_[i];
    }
    return Monomial(std::move(e));
  }

  Monomial lcm(const Monomial& o) const {
    check(o);
    std::vector<std::uint32_t> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], o.e_[i]);
    return Monomial(std::move(e));
  }

  /// True when the monomial is a positive power of the single variable i.
  bool is_pure_power_of(std::size_t i) const {
    if (deg_ == 0) return false;
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (j != i && e_[j] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Container ordering only (plain lexicographic on exponents); the
  /// algebraic term orders live in MonomialOrder.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::string str(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names.at(i);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
  }

 private:
  void check(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ValueError("monomial arity mismatch");
  }

  std::vector<std::uint32_t> e_;
  std::uint64_t deg_;
};

enum class OrderKind { grevlex, lex };

inline std::string order_name(OrderKind k) {
  return k == OrderKind::grevlex ? "grevlex" : "lex";
}

inline OrderKind parse_order(const std::string& name) {
  if (name == "grevlex") return OrderKind::grevlex;
  if (name == "lex") return OrderKind::lex;
  throw ValueError("unknown monomial order: '" + name + "'");
}

/// Term order on monomials of a fixed arity. Both variants are
/// multiplicative well-orders with 1 minimal.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }

  /// negative / zero / positive as a <,=,> b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_)
      throw ValueError("monomial arity does not match order");
    if (kind_ == OrderKind::lex) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (a.exponent(i) != b.exponent(i))
          return a.exponent(i) < b.exponent(i) ? -1 : 1;
      }
      return 0;
    }
    // grevlex: total degree first, then the last differing exponent decides
    // reversed.
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (a.exponent(i) != b.exponent(i))
        return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && nvars_ == o.nvars_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

 private:
  OrderKind kind_;
  std::size_t nvars_;
};

}  // namespace sduality
