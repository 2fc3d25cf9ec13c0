#ifndef KOSZUL_DUAL_HPP
#define KOSZUL_DUAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/matrix.hpp"
#include "koszul/presentation.hpp"

namespace koszul {

namespace detail {

// Clear denominators and common factors so a rational kernel column becomes a
// primitive integer relation with positive leading coefficient.
inline std::vector<std::pair<std::uint32_t, long long>> lift_column(
    const Rationals&, const SparseVec<Rationals>& col) {
  mpz_class den(1);
  for (const auto& [i, v] : col) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  mpz_class gcd(0);
  for (const auto& [i, v] : col) {
    mpz_class num = v.get_num() * (den / v.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd == 0) gcd = 1;
  if (!col.empty() && col.front().second < 0) gcd = -gcd;
  std::vector<std::pair<std::uint32_t, long long>> out;
  for (const auto& [i, v] : col) {
    mpz_class num = v.get_num() * (den / v.get_den()) / gcd;
    if (!num.fits_slong_p()) throw InvariantViolation("dual relation coefficient overflow");
    out.emplace_back(i, num.get_si());
  }
  return out;
}

// Symmetric lift of F_p representatives, so e.g. p-1 renders as -1.
inline std::vector<std::pair<std::uint32_t, long long>> lift_column(
    const PrimeField& k, const SparseVec<PrimeField>& col) {
  std::vector<std::pair<std::uint32_t, long long>> out;
  for (const auto& [i, v] : col) {
    long long x = static_cast<long long>(v);
    if (v > k.p() / 2) x -= static_cast<long long>(k.p());
    out.emplace_back(i, x);
  }
  return out;
}

}  // namespace detail

// The matrix whose rows span Q_2 inside the d^2-dimensional word basis.
template <class F>
SparseMat<F> relation_matrix_deg2(const QuadraticPresentation& pres, const F& field) {
  const std::uint32_t d = pres.d();
  auto rels = pres.expanded_relations();
  SparseMat<F> M(static_cast<std::uint32_t>(rels.size()), d * d, field);
  for (std::uint32_t i = 0; i < rels.size(); ++i) {
    SparseVec<F> r;
    for (const auto& [w, c] : rels[i].terms) {
      auto x = field.from_int(c);
      if (!field.is_zero(x)) r.emplace_back(tensor_index(w, d), std::move(x));
    }
    sort_and_collect(field, r);
    M.set_row(i, std::move(r));
  }
  return M;
}

// The presentation of A^! = T(V*)/Q^perp. Under the pairing
// <v1 (x) v2, v1* (x) v2*> = <v1,v1*><v2,v2*> the word bases of V (x) V and
// V* (x) V* are dual, so Q^perp is the kernel of the pairing matrix whose
// rows are the relation vectors of Q_2.
template <class F>
QuadraticPresentation dual_presentation(const QuadraticPresentation& pres,
                                        const F& field) {
  const std::uint32_t d = pres.d();
  SparseMat<F> K = kernel_basis(relation_matrix_deg2(pres, field));

  QuadraticPresentation out;
  out.field = field.spec();
  out.commutative = false;
  for (const auto& g : pres.generators) out.generators.push_back(g + "*");
  for (std::uint32_t j = 0; j < K.cols(); ++j) {
    NCPoly rel;
    for (const auto& [idx, c] : detail::lift_column(field, K.col(j)))
      rel.add_term(word_from_index(idx, d, 2), c);
    out.relations.push_back(std::move(rel));
  }
  out.normalize();
  return out;
}

// A^! together with the multiplication matrices of its generators, which the
// complex builders transpose into actions on the graded dual (A^!)*.
// The paper grades x_i^* negatively; internally degree i stands for (A^!)_{-i}.
template <class F>
class DualAlgebra {
 public:
  DualAlgebra(QuadraticPresentation dual_pres, std::uint32_t cap, F field)
      : carrier_(std::move(dual_pres), cap, field) {
    const std::uint32_t d = carrier_.d();
    left_.resize(d);
    right_.resize(d);
    for (std::uint32_t t = 0; t < d; ++t) {
      left_[t].reserve(cap);
      right_[t].reserve(cap);
      for (std::uint32_t i = 1; i <= cap; ++i) {
        left_[t].push_back(mult_matrix(t, i, /*left=*/true));
        right_[t].push_back(mult_matrix(t, i, /*left=*/false));
      }
    }
  }

  const GradedAlgebra<F>& carrier() const { return carrier_; }
  const QuadraticPresentation& presentation() const { return carrier_.presentation(); }
  const F& field() const { return carrier_.field(); }
  std::uint32_t d() const { return carrier_.d(); }
  std::uint32_t cap() const { return carrier_.cap(); }

  std::uint32_t dim(std::uint32_t i) const { return carrier_.dim(i); }

  // L_t^(i), R_t^(i): A^!_{i-1} -> A^!_i in normal bases.
  const SparseMat<F>& left_mult(std::uint32_t t, std::uint32_t i) const {
    check(t, i);
    return left_[t][i - 1];
  }
  const SparseMat<F>& right_mult(std::uint32_t t, std::uint32_t i) const {
    check(t, i);
    return right_[t][i - 1];
  }

  // Transposes: maps (A^!)*_i -> (A^!)*_{i-1}, shape dim_{i-1} x dim_i.
  SparseMat<F> left_on_dual(std::uint32_t t, std::uint32_t i) const {
    return left_mult(t, i).transpose();
  }
  SparseMat<F> right_on_dual(std::uint32_t t, std::uint32_t i) const {
    return right_mult(t, i).transpose();
  }

 private:
  void check(std::uint32_t t, std::uint32_t i) const {
    if (t >= carrier_.d()) throw InvariantViolation("generator index out of range");
    if (i < 1 || i > carrier_.cap()) throw DegreeCapExceeded(i, carrier_.cap());
  }

  SparseMat<F> mult_matrix(std::uint32_t t, std::uint32_t i, bool left) const {
    SparseMat<F> M(carrier_.dim(i), carrier_.dim(i - 1), carrier_.field());
    for (std::uint32_t v = 0; v < carrier_.dim(i - 1); ++v) {
      SparseVec<F> prod = left ? carrier_.multiply(1, t, i - 1, v)
                               : carrier_.multiply(i - 1, v, 1, t);
      for (const auto& [r, c] : prod) M.set(r, v, c);
    }
    return M;
  }

  GradedAlgebra<F> carrier_;
  std::vector<std::vector<SparseMat<F>>> left_, right_;  // [t][i-1]
};

template <class F>
DualAlgebra<F> quadratic_dual(const QuadraticPresentation& pres, std::uint32_t cap,
                              const F& field) {
  return DualAlgebra<F>(dual_presentation(pres, field), cap, field);
}

// (A^!)^! = A: Q^perp-perp and Q span the same subspace of V (x) V.
template <class F>
bool double_dual_check(const QuadraticPresentation& pres, const F& field) {
  QuadraticPresentation ddual = dual_presentation(dual_presentation(pres, field), field);
  // strip the double stars so word indices align
  auto lhs = rref(relation_matrix_deg2(pres, field)).first;
  auto rhs = rref(relation_matrix_deg2(ddual, field)).first;
  return lhs == rhs;
}

}  // namespace koszul

#endif  // KOSZUL_DUAL_HPP
