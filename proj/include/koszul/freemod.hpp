#ifndef KOSZUL_FREEMOD_HPP
#define KOSZUL_FREEMOD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

// Where a free-module generator came from: the (A^!)* basis element and/or
// the A_j basis element it is tagged by. -1 when not applicable.
struct GenLabel {
  std::int32_t dual_idx = -1;
  std::int32_t alg_idx = -1;
};

// A graded free left A-module, described by its generator degrees.
struct GradedFreeModule {
  std::vector<std::uint32_t> gen_deg;
  std::vector<GenLabel> labels;

  std::uint32_t rank() const { return static_cast<std::uint32_t>(gen_deg.size()); }
};

// Basis layout of one internal-degree strand: the strand-q component has a
// block of dim A_{q - deg g} coordinates per generator g, in generator order.
template <class F>
struct StrandLayout {
  std::vector<std::uint32_t> offset;  // per generator; block may be empty
  std::uint32_t dim = 0;

  static StrandLayout make(const GradedFreeModule& M, const GradedAlgebra<F>& A,
                           std::uint32_t q) {
    StrandLayout L;
    L.offset.resize(M.rank());
    for (std::uint32_t g = 0; g < M.rank(); ++g) {
      L.offset[g] = L.dim;
      if (q >= M.gen_deg[g]) L.dim += A.dim(q - M.gen_deg[g]);
    }
    return L;
  }
};

template <class F>
std::uint32_t strand_dim(const GradedFreeModule& M, const GradedAlgebra<F>& A,
                         std::uint32_t q) {
  std::uint32_t dim = 0;
  for (std::uint32_t g = 0; g < M.rank(); ++g)
    if (q >= M.gen_deg[g]) dim += A.dim(q - M.gen_deg[g]);
  return dim;
}

// A degree-preserving map of graded free A-modules, stored by generator
// images: f(g_s) = sum_r alpha_{sr} g_r with alpha_{sr} homogeneous of degree
// deg(g_s) - deg(g_r), in normal coordinates. The strand-q matrix follows by
// left multiplication: f(w g_s) = sum_r (w alpha_{sr}) g_r.
template <class F>
struct ModuleMap {
  GradedFreeModule src, dst;

  struct Term {
    std::uint32_t dst_gen;
    SparseVec<F> coeff;  // over the normal basis of A_{deg src gen - deg dst gen}
  };
  std::vector<std::vector<Term>> img;  // per source generator

  SparseMat<F> strand(std::uint32_t q, const GradedAlgebra<F>& A) const {
    auto srcL = StrandLayout<F>::make(src, A, q);
    auto dstL = StrandLayout<F>::make(dst, A, q);
    SparseMat<F> M(dstL.dim, srcL.dim, A.field());
    const F& k = A.field();
    for (std::uint32_t s = 0; s < src.rank(); ++s) {
      if (q < src.gen_deg[s]) continue;
      const std::uint32_t wdeg = q - src.gen_deg[s];
      const std::uint32_t wdim = A.dim(wdeg);
      for (std::uint32_t w = 0; w < wdim; ++w) {
        const std::uint32_t colidx = srcL.offset[s] + w;
        for (const Term& t : img[s]) {
          const std::uint32_t adeg = src.gen_deg[s] - dst.gen_deg[t.dst_gen];
          for (const auto& [aw, ac] : t.coeff) {
            auto prod = A.multiply(wdeg, w, adeg, aw);
            for (const auto& [pr, pc] : prod) {
              std::uint32_t rowidx = dstL.offset[t.dst_gen] + pr;
              auto v = k.add(M.get(rowidx, colidx), k.mul(ac, pc));
              M.set(rowidx, colidx, std::move(v));
            }
          }
        }
      }
    }
    return M;
  }

  // All entries of alpha lie in positive degree: the mod-m reduction of the
  // map vanishes.
  bool is_minimal() const {
    for (std::uint32_t s = 0; s < src.rank(); ++s)
      for (const Term& t : img[s])
        if (src.gen_deg[s] == dst.gen_deg[t.dst_gen] && !t.coeff.empty()) return false;
    return true;
  }
};

// A sequence of graded free modules with degree-preserving differentials
// d_n : term n -> term n-1, plus a memoized strand-matrix cache. The cache is
// single-assignment: concurrent workers may compute a strand twice but always
// observe one consistent value.
template <class F>
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(const GradedAlgebra<F>* A, std::vector<GradedFreeModule> terms,
               std::vector<ModuleMap<F>> diffs)
      : A_(A), terms_(std::move(terms)), diffs_(std::move(diffs)) {}

  const GradedAlgebra<F>& algebra() const { return *A_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(terms_.size()); }
  const GradedFreeModule& term(std::uint32_t n) const { return terms_.at(n); }
  const ModuleMap<F>& diff(std::uint32_t n) const { return diffs_.at(n - 1); }

  std::uint32_t strand_dim(std::uint32_t n, std::uint32_t q) const {
    return n < terms_.size() ? koszul::strand_dim(terms_[n], *A_, q) : 0;
  }

  // d_n at internal degree q; zero-shaped matrices outside the stored range.
  const SparseMat<F>& strand_matrix(std::uint32_t n, std::uint32_t q) const {
    const std::uint64_t key = (std::uint64_t(n) << 32) | q;
    {
      std::lock_guard<std::mutex> lock(*mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    SparseMat<F> M;
    if (n >= 1 && n < terms_.size())
      M = diffs_[n - 1].strand(q, *A_);
    else
      M = SparseMat<F>(n == 0 ? 0 : strand_dim(n - 1, q), strand_dim(n, q), A_->field());
    std::lock_guard<std::mutex> lock(*mu_);
    return cache_.emplace(key, std::move(M)).first->second;
  }

  // dim ker(d_n)_q - rank (d_{n+1})_q; the homology dimension of the strand.
  // Signed so that a mismatched pseudo-complex (where d^2 != 0 and the image
  // escapes the kernel) still yields a reportable nonzero witness.
  std::int64_t strand_homology(std::uint32_t n, std::uint32_t q) const {
    std::int64_t dim = strand_dim(n, q);
    std::int64_t r_out = n >= 1 ? rank(strand_matrix(n, q)) : 0;
    std::int64_t r_in = n + 1 < terms_.size() ? rank(strand_matrix(n + 1, q)) : 0;
    return dim - r_out - r_in;
  }

  bool d_squared_zero(std::uint32_t n, std::uint32_t q) const {
    if (n < 2 || n >= terms_.size()) return true;
    return strand_matrix(n - 1, q).mul(strand_matrix(n, q)).is_zero();
  }

 private:
  const GradedAlgebra<F>* A_ = nullptr;
  std::vector<GradedFreeModule> terms_;
  std::vector<ModuleMap<F>> diffs_;
  // in a unique_ptr so the complex stays movable
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  mutable std::map<std::uint64_t, SparseMat<F>> cache_;
};

}  // namespace koszul

#endif  // KOSZUL_FREEMOD_HPP
