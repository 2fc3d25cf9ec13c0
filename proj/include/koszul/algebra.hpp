#ifndef KOSZUL_ALGEBRA_HPP
#define KOSZUL_ALGEBRA_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/presentation.hpp"
#include "koszul/words.hpp"

namespace koszul {

// The graded quotient A = T(V)/Q computed degree by degree up to a cap D.
// Per degree: the reduced echelon basis of the relation subspace
// R_n = sum over positions of V^l (x) Q_2 (x) V^r, the normal words (non-pivot
// word indices under lexicographic order), and reduction of arbitrary tensors
// to normal coordinates. The positive part m = A_{>0} shares these bases.
template <class F>
class GradedAlgebra {
 public:
  using Elt = typename F::Elt;

  GradedAlgebra(QuadraticPresentation pres, std::uint32_t cap, F field = F(),
                std::uint64_t word_cap = kWordSizeCap)
      : pres_(std::move(pres)), cap_(cap), field_(std::move(field)), word_cap_(word_cap) {
    pres_.normalize();
    if (pres_.d() < 1) throw InputError("algebra needs at least one generator");
    rels_ = pres_.expanded_relations();
    degrees_.reserve(cap_ + 1);
    for (std::uint32_t n = 0; n <= cap_; ++n) build_degree(n);
  }

  const QuadraticPresentation& presentation() const { return pres_; }
  const F& field() const { return field_; }
  std::uint32_t d() const { return pres_.d(); }
  std::uint32_t cap() const { return cap_; }

  // dim_k A_n (the Hilbert function).
  std::uint32_t dim(std::uint32_t n) const {
    check_degree(n);
    return static_cast<std::uint32_t>(degrees_[n].normal.size());
  }

  // Ascending word indices of the coset-representative basis of A_n.
  const std::vector<std::uint32_t>& normal_words(std::uint32_t n) const {
    check_degree(n);
    return degrees_[n].normal;
  }

  // Rank of a word in the normal basis, or -1 if the word is not normal.
  std::int32_t normal_rank(std::uint32_t n, std::uint32_t word_idx) const {
    check_degree(n);
    return degrees_[n].rank_of_word[word_idx];
  }

  std::uint32_t relation_rank(std::uint32_t n) const {
    check_degree(n);
    return static_cast<std::uint32_t>(degrees_[n].pivot_rows.size());
  }

  // Unique expression of a degree-n word modulo R_n in the normal basis.
  SparseVec<F> reduce_word(std::uint32_t n, std::uint32_t word_idx) const {
    check_degree(n);
    const DegreeData& D = degrees_[n];
    std::int32_t r = D.rank_of_word[word_idx];
    if (r >= 0) return {{static_cast<std::uint32_t>(r), field_.one()}};
    SparseVec<F> out;
    const SparseVec<F>& row = D.pivot_rows.at(word_idx);
    for (const auto& [c, v] : row)
      if (c != word_idx) out.emplace_back(D.rank_of_word[c], field_.neg(v));
    sort_and_collect(field_, out);
    return out;
  }

  SparseVec<F> reduce_poly(const NCPoly& p) const {
    SparseVec<F> out;
    for (const auto& [w, c] : p.terms) {
      SparseVec<F> part = reduce_word(p.degree, tensor_index(w, d()));
      row_scale(field_, part, field_.from_int(c));
      SparseVec<F> merged;
      merged.reserve(out.size() + part.size());
      for (auto& e : out) merged.push_back(std::move(e));
      for (auto& e : part) merged.push_back(std::move(e));
      sort_and_collect(field_, merged);
      out = std::move(merged);
    }
    return out;
  }

  // Structure constants: the product of the u-th normal word of A_m with the
  // v-th normal word of A_n, in normal coordinates of A_{m+n}.
  SparseVec<F> multiply(std::uint32_t m, std::uint32_t u, std::uint32_t n,
                        std::uint32_t v) const {
    check_degree(m + n);
    std::uint64_t uw = degrees_[m].normal[u];
    std::uint64_t vw = degrees_[n].normal[v];
    std::uint64_t idx = uw * word_count(d(), n, word_cap_) + vw;
    return reduce_word(m + n, static_cast<std::uint32_t>(idx));
  }

  // The dim(A_n) x d^n matrix expressing every degree-n word in the normal
  // basis. Materialized on demand; reduce_word is the fast path.
  SparseMat<F> reduction_matrix(std::uint32_t n) const {
    check_degree(n);
    std::uint64_t words = word_count(d(), n, word_cap_);
    SparseMat<F> M(dim(n), static_cast<std::uint32_t>(words), field_);
    for (std::uint32_t w = 0; w < words; ++w)
      for (const auto& [r, v] : reduce_word(n, w)) M.set(r, w, v);
    return M;
  }

  // Reduced echelon basis of R_n as a matrix (rows in pivot order).
  SparseMat<F> relation_rref(std::uint32_t n) const {
    check_degree(n);
    const DegreeData& D = degrees_[n];
    std::vector<std::uint32_t> piv;
    piv.reserve(D.pivot_rows.size());
    for (const auto& [c, _] : D.pivot_rows) piv.push_back(c);
    std::sort(piv.begin(), piv.end());
    SparseMat<F> M(static_cast<std::uint32_t>(piv.size()),
                   static_cast<std::uint32_t>(word_count(d(), n, word_cap_)), field_);
    for (std::uint32_t i = 0; i < piv.size(); ++i) M.set_row(i, D.pivot_rows.at(piv[i]));
    return M;
  }

  // The defining realization of R_n: all embeddings V^l (x) Q_2 (x) V^r over
  // every position l. Quadratic relation spans are built incrementally from
  // R_{n-1}; this direct form is the cross-check.
  static SparseMat<F> relation_span_direct(const QuadraticPresentation& pres,
                                           std::uint32_t n, const F& field,
                                           std::uint64_t word_cap = kWordSizeCap) {
    std::uint32_t d = pres.d();
    std::uint64_t words = word_count(d, n, word_cap);
    std::vector<SparseVec<F>> rows;
    if (n >= 2) {
      for (const NCPoly& q : pres.expanded_relations())
        for (std::uint32_t left = 0; left + 2 <= n; ++left)
          embed_relation(q, left, n, d, [&](const IntVec& iv) {
            SparseVec<F> r;
            r.reserve(iv.size());
            for (const auto& [c, a] : iv) {
              auto x = field.from_int(a);
              if (!field.is_zero(x)) r.emplace_back(c, std::move(x));
            }
            rows.push_back(std::move(r));
          }, word_cap);
    }
    SparseMat<F> M(static_cast<std::uint32_t>(rows.size()),
                   static_cast<std::uint32_t>(words), field);
    for (std::uint32_t i = 0; i < rows.size(); ++i) M.set_row(i, std::move(rows[i]));
    return M;
  }

 private:
  struct DegreeData {
    std::unordered_map<std::uint32_t, SparseVec<F>> pivot_rows;  // pivot word -> reduced row
    std::vector<std::uint32_t> normal;                           // ascending word indices
    std::vector<std::int32_t> rank_of_word;                      // -1 when not normal
  };

  void check_degree(std::uint32_t n) const {
    if (n > cap_) throw DegreeCapExceeded(n, cap_);
  }

  void build_degree(std::uint32_t n) {
    const std::uint32_t d = pres_.d();
    const std::uint64_t words = word_count(d, n, word_cap_);
    EchelonBuilder<F> ech(static_cast<std::uint32_t>(words), field_);

    if (n == 2) {
      for (const NCPoly& q : rels_) {
        SparseVec<F> r;
        for (const auto& [w, c] : q.terms) {
          auto x = field_.from_int(c);
          if (!field_.is_zero(x)) r.emplace_back(tensor_index(w, d), std::move(x));
        }
        sort_and_collect(field_, r);
        ech.add_row(std::move(r));
      }
    } else if (n >= 3) {
      // R_n = V * R_{n-1} + R_{n-1} * V
      const DegreeData& prev = degrees_[n - 1];
      std::vector<std::uint32_t> piv;
      piv.reserve(prev.pivot_rows.size());
      for (const auto& [c, _] : prev.pivot_rows) piv.push_back(c);
      std::sort(piv.begin(), piv.end());
      const std::uint64_t shift = word_count(d, n - 1, word_cap_);
      for (std::uint32_t p : piv) {
        const SparseVec<F>& row = prev.pivot_rows.at(p);
        for (std::uint32_t t = 0; t < d; ++t) {
          SparseVec<F> left;
          left.reserve(row.size());
          for (const auto& [c, v] : row)
            left.emplace_back(static_cast<std::uint32_t>(t * shift + c), v);
          ech.add_row(std::move(left));
          SparseVec<F> right;
          right.reserve(row.size());
          for (const auto& [c, v] : row)
            right.emplace_back(static_cast<std::uint32_t>(std::uint64_t(c) * d + t), v);
          ech.add_row(std::move(right));
        }
      }
    }

    ech.finalize_reduced();
    DegreeData D;
    D.rank_of_word.assign(words, -1);
    for (std::uint32_t w = 0; w < words; ++w)
      if (!ech.is_pivot(w)) {
        D.rank_of_word[w] = static_cast<std::int32_t>(D.normal.size());
        D.normal.push_back(w);
      }
    for (std::uint32_t p : ech.pivot_columns()) D.pivot_rows.emplace(p, *ech.row_for_pivot(p));
    degrees_.push_back(std::move(D));
  }

  QuadraticPresentation pres_;
  std::uint32_t cap_;
  F field_;
  std::uint64_t word_cap_;
  std::vector<NCPoly> rels_;
  std::vector<DegreeData> degrees_;
};

}  // namespace koszul

#endif  // KOSZUL_ALGEBRA_HPP
