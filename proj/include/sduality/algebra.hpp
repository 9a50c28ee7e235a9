#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sduality/errors.hpp"
#include "sduality/groebner.hpp"
#include "sduality/matrix.hpp"
#include "sduality/polynomial.hpp"

namespace sduality {

class QuotientAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// Element of B in coordinates over the standard-monomial basis.
struct AlgebraElement {
  AlgebraPtr algebra;
  FVector coords;

  bool is_zero() const {
    return linalg::is_zero(coords);
  }
  bool operator==(const AlgebraElement& o) const {
    return algebra == o.algebra && coords == o.coords;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
};

/// Element of B (x) B as the d x d coefficient matrix over b_i (x) b_j.
struct TensorElement {
  AlgebraPtr algebra;
  FMatrix coeff;  // coeff(i,j) multiplies b_i (x) b_j

  bool is_zero() const {
    for (const auto& c : coeff.data())
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const TensorElement& o) const {
    return algebra == o.algebra && coeff == o.coeff;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  /// Row-major flattening; index (i,j) -> i*d + j.
  FVector vec() const { return coeff.data(); }
};

/// A-linear functional on B: the row (phi(b_1), ..., phi(b_d)).
struct LinearFunctional {
  AlgebraPtr algebra;
  FVector values;

  bool operator==(const LinearFunctional& o) const {
    return algebra == o.algebra && values == o.values;
  }
};

/// The finite algebra B = k[x_1..x_n]/(f_1..f_n): Groebner data, the
/// standard-monomial basis, and precomputed multiplication matrices. After
/// construction everything downstream is exact linear algebra; no further
/// Groebner reduction happens.
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
 public:
  static AlgebraPtr build(std::vector<std::string> variables,
                          std::vector<Polynomial> presentation, FieldDescriptor field,
                          OrderKind order_kind = OrderKind::grevlex) {
    return std::make_shared<const QuotientAlgebra>(
        std::move(variables), std::move(presentation), field, order_kind);
  }

  QuotientAlgebra(std::vector<std::string> variables, std::vector<Polynomial> presentation,
                  FieldDescriptor field, OrderKind order_kind)
      : vars_(std::move(variables)),
        field_(field),
        order_(order_kind, vars_.size()),
        presentation_(std::move(presentation)),
        gb_(make_groebner()) {
    if (!is_zero_dimensional(gb_))
      throw HypothesisError(
          "not finite: the ideal is not zero-dimensional, the quotient is an "
          "infinite-dimensional vector space");
    basis_ = standard_monomials(gb_);
    if (basis_.empty())
      throw HypothesisError("not finite: the ideal is the unit ideal, the quotient is the zero ring");
    dim_ = basis_.size();
    for (std::size_t i = 0; i < dim_; ++i) basis_index_.emplace(basis_[i], i);
    build_variable_matrices();
    build_basis_matrices();
    verify_structure();
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  FieldDescriptor field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& presentation() const { return presentation_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return dim_; }

  /// Matrix of multiplication by x_i on the basis.
  const FMatrix& variable_matrix(std::size_t i) const { return var_mats_.at(i); }
  /// Matrix of multiplication by the basis monomial b_i.
  const FMatrix& basis_matrix(std::size_t i) const { return basis_mats_.at(i); }

  AlgebraPtr self() const { return shared_from_this(); }

  AlgebraElement element(FVector coords) const {
    if (coords.size() != dim_) throw ValueError("coordinate vector has wrong length");
    return {self(), std::move(coords)};
  }
  AlgebraElement zero_element() const { return {self(), FVector(dim_, field_.zero())}; }
  AlgebraElement one_element() const {
    FVector c(dim_, field_.zero());
    c[0] = field_.one();
    return {self(), std::move(c)};
  }

  /// Coordinates of the residue of a monomial: M^alpha applied to 1.
  FVector monomial_coordinates(const Monomial& m) const {
    if (m.nvars() != nvars()) throw ValueError("monomial arity mismatch");
    FVector v(dim_, field_.zero());
    v[0] = field_.one();
    for (std::size_t i = 0; i < nvars(); ++i)
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) v = var_mats_[i].apply(v);
    return v;
  }

  /// The projection pi: k[x] ->> B in coordinates.
  AlgebraElement project(const Polynomial& p) const {
    if (p.field() != field_) throw ValueError("project: field mismatch");
    if (p.nvars() != nvars()) throw ValueError("project: variable count mismatch");
    FVector acc(dim_, field_.zero());
    std::map<Monomial, FVector> memo;
    for (const auto& t : p.terms()) {
      auto it = memo.find(t.mono);
      if (it == memo.end()) it = memo.emplace(t.mono, monomial_coordinates(t.mono)).first;
      for (std::size_t k = 0; k < dim_; ++k)
        if (!it->second[k].is_zero()) acc[k] += t.coeff * it->second[k];
    }
    return {self(), std::move(acc)};
  }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    require_mine(a);
    require_mine(b);
    FVector acc(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a.coords[i].is_zero()) continue;
      FVector partial = basis_mats_[i].apply(b.coords);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!partial[k].is_zero()) acc[k] += a.coords[i] * partial[k];
    }
    return {self(), std::move(acc)};
  }

  /// Matrix of multiplication by an arbitrary element.
  FMatrix multiplication_matrix(const AlgebraElement& e) const {
    require_mine(e);
    FMatrix m(dim_, dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e.coords[i].is_zero()) continue;
      const FMatrix& bm = basis_mats_[i];
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
          if (!bm(r, c).is_zero()) m(r, c) += e.coords[i] * bm(r, c);
    }
    return m;
  }

  /// Polynomial representative on the standard monomials.
  Polynomial representative(const AlgebraElement& e) const {
    require_mine(e);
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!e.coords[i].is_zero()) terms.push_back({basis_[i], e.coords[i]});
    return Polynomial::from_terms(field_, order_, std::move(terms));
  }

  TensorElement tensor_element(FMatrix coeff) const {
    if (coeff.rows() != dim_ || coeff.cols() != dim_)
      throw ValueError("tensor coefficient matrix has wrong shape");
    return {self(), std::move(coeff)};
  }
  TensorElement tensor_zero() const {
    return {self(), FMatrix(dim_, dim_, field_.zero())};
  }
  TensorElement tensor_from_vec(const FVector& v) const {
    if (v.size() != dim_ * dim_) throw ValueError("tensor vector has wrong length");
    FMatrix c(dim_, dim_, field_.zero());
    c.data() = v;
    return {self(), std::move(c)};
  }

  /// (pi (x) pi): a doubled-ring polynomial lands in B (x) B. Reduction is
  /// factor-wise; the X part and the Y part of each term project separately.
  TensorElement tensor_project(const Polynomial& p) const {
    if (p.field() != field_) throw ValueError("tensor_project: field mismatch");
    if (p.nvars() != 2 * nvars())
      throw ValueError("tensor_project expects a polynomial in the doubled ring");
    const std::size_t n = nvars();
    FMatrix acc(dim_, dim_, field_.zero());
    std::map<Monomial, FVector> memo;
    auto coords_of = [&](const Monomial& m) -> const FVector& {
      auto it = memo.find(m);
      if (it == memo.end()) it = memo.emplace(m, monomial_coordinates(m)).first;
      return it->second;
    };
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> ex(n), ey(n);
      for (std::size_t i = 0; i < n; ++i) {
        ex[i] = t.mono.exponent(i);
        ey[i] = t.mono.exponent(n + i);
      }
      const FVector& cx = coords_of(Monomial(std::move(ex)));
      const FVector& cy = coords_of(Monomial(std::move(ey)));
      for (std::size_t i = 0; i < dim_; ++i) {
        if (cx[i].is_zero()) continue;
        const FieldElement a = t.coeff * cx[i];
        for (std::size_t j = 0; j < dim_; ++j)
          if (!cy[j].is_zero()) acc(i, j) += a * cy[j];
      }
    }
    return {self(), std::move(acc)};
  }

  /// The multiplication map m: B (x) B -> B.
  AlgebraElement collapse(const TensorElement& t) const {
    require_mine(t);
    FVector acc(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      FVector row = t.coeff.row(i);
      if (linalg::is_zero(row)) continue;
      FVector part = basis_mats_[i].apply(row);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!part[k].is_zero()) acc[k] += part[k];
    }
    return {self(), std::move(acc)};
  }

  /// Basis of I = ker(m) as a subspace of B (x) B; its dimension is d^2 - d
  /// because m is onto.
  std::vector<TensorElement> diagonal_ideal_basis() const {
    FMatrix k(dim_, dim_ * dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t r = 0; r < dim_; ++r)
          k(r, i * dim_ + j) = basis_mats_[i](r, j);
    std::vector<FVector> ker = linalg::kernel_basis(k, field_);
    std::vector<TensorElement> out;
    out.reserve(ker.size());
    for (auto& v : ker) out.push_back(tensor_from_vec(v));
    return out;
  }

  // -- tensor arithmetic ----------------------------------------------------

  TensorElement tensor_add(const TensorElement& a, const TensorElement& b) const {
    require_mine(a);
    require_mine(b);
    return {self(), a.coeff + b.coeff};
  }
  TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) const {
    require_mine(a);
    require_mine(b);
    return {self(), a.coeff - b.coeff};
  }

  /// (b_k (x) b_l) * t
  TensorElement tensor_basis_multiple(std::size_t k, std::size_t l,
                                      const TensorElement& t) const {
    require_mine(t);
    return {self(), basis_mats_[k] * t.coeff * basis_mats_[l].transpose()};
  }

  /// (x_k (x) 1 - 1 (x) x_k) * t
  TensorElement tensor_diagonal_multiple(std::size_t k, const TensorElement& t) const {
    require_mine(t);
    return {self(), var_mats_[k] * t.coeff - t.coeff * var_mats_[k].transpose()};
  }

  /// Full product in B (x) B.
  TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const {
    require_mine(a);
    require_mine(b);
    FMatrix acc(dim_, dim_, field_.zero());
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t l = 0; l < dim_; ++l) {
        if (b.coeff(k, l).is_zero()) continue;
        FMatrix part = basis_mats_[k] * a.coeff * basis_mats_[l].transpose();
        for (std::size_t r = 0; r < dim_; ++r)
          for (std::size_t c = 0; c < dim_; ++c)
            if (!part(r, c).is_zero()) acc(r, c) += b.coeff(k, l) * part(r, c);
      }
    return {self(), std::move(acc)};
  }

  void require_mine(const AlgebraElement& e) const {
    if (e.algebra.get() != this) throw ValueError("algebra mismatch");
  }
  void require_mine(const TensorElement& t) const {
    if (t.algebra.get() != this) throw ValueError("algebra mismatch");
  }
  void require_mine(const LinearFunctional& f) const {
    if (f.algebra.get() != this) throw ValueError("algebra mismatch");
  }

 private:
  GroebnerBasis make_groebner() {
    if (vars_.empty()) throw ValueError("no variables");
    if (presentation_.size() != vars_.size())
      throw HypothesisError("not square: " + std::to_string(presentation_.size()) +
                            " polynomials in " + std::to_string(vars_.size()) +
                            " variables; the presentation needs exactly one polynomial "
                            "per variable");
    for (const auto& f : presentation_) {
      if (f.field() != field_)
        throw ValueError("presentation polynomial field mismatch");
      if (f.nvars() != vars_.size())
        throw ValueError("presentation polynomial has wrong variable count");
    }
    return buchberger(presentation_, order_);
  }

  void build_variable_matrices() {
    var_mats_.reserve(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      FMatrix m(dim_, dim_, field_.zero());
      for (std::size_t j = 0; j < dim_; ++j) {
        const Monomial xb = basis_[j] * Monomial::variable(nvars(), i);
        const Polynomial nf =
            normal_form(Polynomial::term(field_, order_, xb, field_.one()), gb_);
        for (const auto& t : nf.terms()) {
          auto it = basis_index_.find(t.mono);
          if (it == basis_index_.end())
            throw Error("internal: normal form left the standard-monomial span");
          m(it->second, j) = t.coeff;
        }
      }
      var_mats_.push_back(std::move(m));
    }
  }

  void build_basis_matrices() {
    basis_mats_.assign(dim_, FMatrix());
    basis_mats_[0] = FMatrix::identity(dim_, field_.zero(), field_.one());
    // basis monomials are divisor-closed and sorted ascending, so stripping
    // one variable always lands on an earlier entry
    for (std::size_t m = 1; m < dim_; ++m) {
      std::size_t var = 0;
      while (basis_[m].exponent(var) == 0) ++var;
      auto e = basis_[m].exponents();
      e[var] -= 1;
      const auto it = basis_index_.find(Monomial(std::move(e)));
      if (it == basis_index_.end())
        throw Error("internal: standard monomials are not divisor-closed");
      basis_mats_[m] = var_mats_[var] * basis_mats_[it->second];
    }
  }

  /// Sanity of the presentation as matrices: the x_i-operators commute and
  /// every presentation polynomial evaluates to the zero operator.
  void verify_structure() const {
    for (std::size_t i = 0; i < nvars(); ++i)
      for (std::size_t j = i + 1; j < nvars(); ++j)
        if (var_mats_[i] * var_mats_[j] != var_mats_[j] * var_mats_[i])
          throw Error("internal: multiplication matrices do not commute");
    for (const auto& f : presentation_) {
      if (!eval_on_matrices(f).is_zero_matrix())
        throw Error("internal: presentation polynomial does not annihilate the quotient");
    }
  }

  struct ZeroCheck {
    FMatrix m;
    bool is_zero_matrix() const {
      for (const auto& c : m.data())
        if (!c.is_zero()) return false;
      return true;
    }
  };

  ZeroCheck eval_on_matrices(const Polynomial& f) const {
    FMatrix acc(dim_, dim_, field_.zero());
    for (const auto& t : f.terms()) {
      FMatrix prod = FMatrix::identity(dim_, field_.zero(), field_.one());
      for (std::size_t i = 0; i < nvars(); ++i)
        for (std::uint32_t k = 0; k < t.mono.exponent(i); ++k) prod = prod * var_mats_[i];
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
          if (!prod(r, c).is_zero()) acc(r, c) += t.coeff * prod(r, c);
    }
    return {std::move(acc)};
  }

  std::vector<std::string> vars_;
  FieldDescriptor field_;
  MonomialOrder order_;
  std::vector<Polynomial> presentation_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::size_t dim_ = 0;
  std::map<Monomial, std::size_t> basis_index_;
  std::vector<FMatrix> var_mats_;
  std::vector<FMatrix> basis_mats_;
};

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  a.algebra->require_mine(b);
  FVector c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return {a.algebra, std::move(c)};
}

inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  a.algebra->require_mine(b);
  FVector c = a.coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
  return {a.algebra, std::move(c)};
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra->multiply(a, b);
}

/// phi(e) as the dot product of the stored row with e's coordinates.
inline FieldElement apply(const LinearFunctional& phi, const AlgebraElement& e) {
  phi.algebra->require_mine(e);
  return linalg::dot(phi.values, e.coords, phi.algebra->field());
}

}  // namespace sduality
