#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sduality/errors.hpp"
#include "sduality/polynomial.hpp"

namespace sduality {

/// Rebuild p's term list under a different order (same variables, same field).
inline Polynomial reordered(const Polynomial& p, const MonomialOrder& order) {
  if (p.order() == order) return p;
  if (p.nvars() != order.nvars())
    throw ValueError("cannot reorder polynomial: variable count differs");
  return Polynomial::from_terms(p.field(), order, p.terms());
}

/// Reduced Groebner basis: monic generators, auto-reduced, sorted ascending
/// by leading monomial. Unique for (ideal, order), so basis comparison
/// decides ideal equality.
class GroebnerBasis {
 public:
  GroebnerBasis(FieldDescriptor field, MonomialOrder order,
                std::vector<Polynomial> generators, std::vector<Polynomial> input)
      : field_(field),
        order_(order),
        generators_(std::move(generators)),
        input_(std::move(input)) {
    leading_.reserve(generators_.size());
    for (const auto& g : generators_) leading_.push_back(g.leading_monomial());
  }

  FieldDescriptor field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& input() const { return input_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }

  bool is_unit_ideal() const {
    return generators_.size() == 1 && generators_[0].is_constant() &&
           !generators_[0].is_zero();
  }

 private:
  FieldDescriptor field_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> input_;
  std::vector<Monomial> leading_;
};

namespace detail {

/// Full normal form of p against a list of divisors: no monomial of the
/// result is divisible by any divisor's leading monomial. Divisors are tried
/// first-to-last, which keeps the map deterministic.
inline Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial rem(p.field(), p.order());
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto& lt = work.leading();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mono)) {
        const Monomial m = g.leading_monomial().divide_into(lt.mono);
        const FieldElement c = lt.coeff / g.leading_coefficient();
        work -= g.times_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem += Polynomial::term(p.field(), p.order(), lt.mono, lt.coeff);
      work -= Polynomial::term(p.field(), p.order(), lt.mono, lt.coeff);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Monomial mf = f.leading_monomial().divide_into(l);
  const Monomial mg = g.leading_monomial().divide_into(l);
  return f.times_term(mf, f.leading_coefficient().inverse()) -
         g.times_term(mg, g.leading_coefficient().inverse());
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the two classical pair criteria. Deterministic: same input
/// order, same run.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                const MonomialOrder& order) {
  if (gens.empty()) throw ValueError("buchberger: empty generator list");
  const FieldDescriptor field = gens[0].field();
  for (const auto& g : gens) {
    if (g.field() != field) throw ValueError("buchberger: mixed coefficient fields");
    if (g.nvars() != order.nvars())
      throw ValueError("buchberger: generator variable count does not match order");
  }

  std::vector<Polynomial> input;
  input.reserve(gens.size());
  for (const auto& g : gens) input.push_back(reordered(g, order));

  std::vector<Polynomial> basis;
  for (const auto& g : input)
    if (!g.is_zero()) basis.push_back(g.content_normalized());

  if (basis.empty()) return GroebnerBasis(field, order, {}, input);  // zero ideal

  // pending pair queue keyed by (lcm in the order, i, j)
  struct PairKey {
    Monomial lcm;
    std::size_t i, j;
  };
  auto cmp = [&order](const PairKey& a, const PairKey& b) {
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(cmp)> queue(cmp);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pair = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    queue.insert({basis[i].leading_monomial().lcm(basis[j].leading_monomial()), i, j});
    pending.insert({i, j});
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return pending.count({i, j}) != 0;
  };

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& li = basis[pk.i].leading_monomial();
    const Monomial& lj = basis[pk.j].leading_monomial();

    // product criterion: coprime leading monomials reduce to zero
    if (pk.lcm.degree() == li.degree() + lj.degree()) continue;

    // chain criterion: some third element divides the lcm and both side
    // pairs are already treated
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (basis[k].leading_monomial().divides(pk.lcm) && !is_pending(pk.i, k) &&
          !is_pending(pk.j, k))
        chained = true;
    }
    if (chained) continue;

    Polynomial r = detail::reduce_full(detail::s_polynomial(basis[pk.i], basis[pk.j]), basis);
    if (r.is_zero()) continue;
    r = r.content_normalized();
    basis.push_back(std::move(r));
    const std::size_t idx = basis.size() - 1;
    for (std::size_t k = 0; k < idx; ++k) push_pair(k, idx);
  }

  // minimalize: ascending leading monomials, drop anything whose lead is a
  // multiple of a kept lead
  std::vector<std::size_t> by_lead(basis.size());
  for (std::size_t i = 0; i < by_lead.size(); ++i) by_lead[i] = i;
  std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
    const int c = order.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Polynomial> minimal;
  for (const std::size_t idx : by_lead) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(basis[idx].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // tail-reduce each element against the others and normalize to monic
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = detail::reduce_full(minimal[i], others).monic();
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });

  return GroebnerBasis(field, order, std::move(minimal), std::move(input));
}

/// The unique remainder of p modulo the basis: a linear, idempotent
/// projection whose image is spanned by the standard monomials.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  Polynomial q = reordered(p, gb.order());
  if (q.field() != gb.field()) throw ValueError("normal_form: field mismatch");
  return detail::reduce_full(q, gb.generators());
}

/// True iff the quotient by the ideal is a finite-dimensional vector space:
/// every variable must show a pure power among the leading monomials.
inline bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;  // zero ring
  if (gb.generators().empty()) return false;
  for (std::size_t i = 0; i < gb.nvars(); ++i) {
    bool found = false;
    for (const auto& lm : gb.leading_monomials())
      if (lm.is_pure_power_of(i)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Monomials outside the leading-term ideal, ascending in the order. Their
/// residues form a vector-space basis of the quotient.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb))
    throw HypothesisError("standard_monomials: ideal is not zero-dimensional");
  if (gb.is_unit_ideal()) return {};

  const std::size_t n = gb.nvars();
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t best = 0;
    bool have = false;
    for (const auto& lm : gb.leading_monomials())
      if (lm.is_pure_power_of(i)) {
        const std::uint32_t e = lm.exponent(i);
        if (!have || e < best) {
          best = e;
          have = true;
        }
      }
    bound[i] = best;  // every standard monomial has exponent < best in variable i
  }

  std::vector<Monomial> result;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    Monomial m(e);
    bool standard = true;
    for (const auto& lm : gb.leading_monomials())
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    if (standard) result.push_back(std::move(m));
    // odometer over the box [0, bound)
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }

  std::sort(result.begin(), result.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().less(a, b);
  });
  return result;
}

}  // namespace sduality
