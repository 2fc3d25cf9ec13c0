#ifndef KOSZUL_LCOMPLEX_HPP
#define KOSZUL_LCOMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/bicomplex.hpp"

namespace koszul {

// L_{n,a} = ker(d'' : F_{n,a} -> F_{n-1,a+1}) = im(d'' : F_{n+1,a-1} -> F_{n,a}),
// a free module generated in degree n + a. The basis is the kernel basis of
// the generator-degree strand of d'', deterministic under the fixed pivot
// rule; the image description survives as a cross-check.
template <class F>
struct LModule {
  std::uint32_t n = 0, a = 1;
  std::uint32_t rank = 0;
  std::uint32_t gen_degree = 0;
  SparseMat<F> basis;          // (dim A^!_n * dim A_a) x rank, in F_{n,a} generator coordinates
  std::uint32_t image_rank = 0;
  bool im_eq_ker = false;
};

namespace detail {
template <class F>
std::uint32_t joint_cap(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual) {
  return std::min(A.cap(), dual.cap());
}
}  // namespace detail

template <class F>
LModule<F> l_module(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                    std::uint32_t n, std::uint32_t a,
                    BicomplexConvention conv = kStandardConvention) {
  if (a < 1) throw InvariantViolation("l_module needs a >= 1");
  const std::uint32_t D = detail::joint_cap(A, dual);
  LModule<F> L;
  L.n = n;
  L.a = a;
  L.gen_degree = n + a;

  // vanished power: m^a = 0 gives the zero module without the full cap demand
  if (a <= D && A.dim(a) == 0) {
    L.basis = SparseMat<F>(0, 0, A.field());
    L.im_eq_ker = true;
    return L;
  }
  if (n + a + 1 > D) throw DegreeCapExceeded(n + a + 1, D);

  EnvelopingFamily<F> fam(&A, &dual, conv);
  const std::uint32_t gens = dual.dim(n) * A.dim(a);
  if (n == 0) {
    // d'' out of homological degree 0 is zero: the kernel is everything
    L.basis = SparseMat<F>::identity(gens, A.field());
    L.rank = gens;
  } else {
    auto out = fam.dsecond(n, a).strand(n + a, A);  // generator strand
    L.basis = kernel_basis(out);
    L.rank = L.basis.cols();
  }
  auto in = fam.dsecond(n + 1, a - 1).strand(n + a, A);
  L.image_rank = rank(in);
  L.im_eq_ker = (L.image_rank == L.rank);
  return L;
}

namespace detail {

template <class F>
GradedFreeModule l_as_free_module(const LModule<F>& L) {
  GradedFreeModule M;
  M.gen_deg.assign(L.rank, L.gen_degree);
  M.labels.resize(L.rank);
  for (std::uint32_t r = 0; r < L.rank; ++r)
    M.labels[r] = {-1, static_cast<std::int32_t>(r)};
  return M;
}

}  // namespace detail

// The map d'_n : L_{n,a} -> L_{n-1,a} induced by the ambient vertical
// differential, expressed in the kernel bases. Every generator image is
// re-expressed through A_1 . (basis of L_{n-1,a}); the solve must succeed
// because d' maps kernels of d'' to kernels of d''.
template <class F>
ModuleMap<F> l_differential(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                            const LModule<F>& Lsrc, const LModule<F>& Ldst,
                            BicomplexConvention conv = kStandardConvention) {
  if (Lsrc.n != Ldst.n + 1 || Lsrc.a != Ldst.a)
    throw InvariantViolation("l_differential: inconsistent L-module pair");
  const std::uint32_t n = Lsrc.n, a = Lsrc.a, q0 = n + a;
  const std::uint32_t d = A.d();
  const F& k = A.field();

  ModuleMap<F> f;
  f.src = detail::l_as_free_module(Lsrc);
  f.dst = detail::l_as_free_module(Ldst);
  f.img.resize(Lsrc.rank);
  if (Lsrc.rank == 0) return f;

  EnvelopingFamily<F> fam(&A, &dual, conv);
  auto dp = fam.dprime(n, a).strand(q0, A);
  auto images = dp.mul(Lsrc.basis);  // ambient images of the kernel generators

  // columns (r, w): the element x_w . (basis vector r of L_{n-1,a}), laid out
  // in the strand-q0 coordinates of F_{n-1,a}
  SparseMat<F> embed(images.rows(), Ldst.rank * d, k);
  for (std::uint32_t r = 0; r < Ldst.rank; ++r)
    for (const auto& [g, v] : Ldst.basis.col(r))
      for (std::uint32_t w = 0; w < d; ++w) embed.set(g * d + w, r * d + w, v);

  auto sols = solve_many_in_span(embed, images);
  for (std::uint32_t s = 0; s < Lsrc.rank; ++s) {
    if (!sols[s].has_value())
      throw InvariantViolation(
          "d' image of an L-module generator left the span of A_1 . L_{n-1,a} "
          "(n = " + std::to_string(n) + ", a = " + std::to_string(a) + ")");
    std::vector<SparseVec<F>> coeff(Ldst.rank);
    for (const auto& [col, v] : *sols[s]) coeff[col / d].emplace_back(col % d, v);
    for (std::uint32_t r = 0; r < Ldst.rank; ++r)
      if (!coeff[r].empty()) f.img[s].push_back({r, std::move(coeff[r])});
  }
  return f;
}

// The augmentation eps_a : L_{0,a} -> m^a restricting the multiplication map
// r (x) v (x) s -> rvs. Encoded as a module map onto the rank-one free module
// A with the generator of index b sent to its normal basis element of A_a.
template <class F>
ModuleMap<F> augmentation(const GradedAlgebra<F>& A, const LModule<F>& L0) {
  if (L0.n != 0) throw InvariantViolation("augmentation needs the homological-0 module");
  ModuleMap<F> f;
  f.src = detail::l_as_free_module(L0);
  f.dst.gen_deg = {0};
  f.dst.labels = {{-1, -1}};
  f.img.resize(L0.rank);
  const F& k = A.field();
  for (std::uint32_t b = 0; b < L0.rank; ++b)
    f.img[b].push_back({0, SparseVec<F>{{b, k.one()}}});
  return f;
}

// dim (m^a)_q
template <class F>
std::uint32_t power_dim(const GradedAlgebra<F>& A, std::uint32_t a, std::uint32_t q) {
  return q >= a ? A.dim(q) : 0;
}

// Closed form of Cor. betti: beta_{n,n+a}(m^a) as the alternating sum of
// products of dual and algebra dimensions. Nonnegative whenever the Koszul
// Hilbert-series identity holds.
template <class F>
std::int64_t betti_formula(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                           std::uint32_t n, std::uint32_t a) {
  if (a < 1) throw InvariantViolation("betti_formula needs a >= 1");
  const std::uint32_t D = detail::joint_cap(A, dual);
  if (n + a > D) throw DegreeCapExceeded(n + a, D);
  std::int64_t sum = 0;
  for (std::uint32_t i = 1; i <= a; ++i) {
    std::int64_t term =
        static_cast<std::int64_t>(dual.dim(n + i)) * static_cast<std::int64_t>(A.dim(a - i));
    sum += (i % 2 == 1) ? term : -term;
  }
  return sum;
}

// The kernel-rank oracle: beta as the rank of the minimal resolution term,
// computed independently of the closed formula.
template <class F>
std::uint64_t betti_oracle(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                           std::uint32_t n, std::uint32_t a,
                           BicomplexConvention conv = kStandardConvention) {
  return l_module(A, dual, n, a, conv).rank;
}

// beta_{n,j}(A/m^a): 1 at n = j = 0, the shifted m^a formula for n >= 1.
template <class F>
std::int64_t betti_quotient(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                            std::uint32_t n, std::uint32_t a) {
  if (n == 0) return 1;
  return betti_formula(A, dual, n - 1, a);
}

// Truncated coefficient data of the graded Poincare series
// P(y,z) = -(-z)^{-a} H_{(A^!)*}(yz) H_{A/m^a}(-yz): betti[n] is the
// coefficient of y^{n+a} z^n.
struct SeriesPoly {
  std::uint32_t power = 1;
  std::uint32_t n_max = 0;
  std::vector<long long> dual_hilbert;      // dim (A^!)*_l, l <= n_max + a
  std::vector<long long> quotient_hilbert;  // dim (A/m^a)_j, j <= a-1
  std::vector<long long> betti;             // n = 0..n_max
};

template <class F>
SeriesPoly poincare_coeffs(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                           std::uint32_t a, std::uint32_t n_max) {
  if (a < 1) throw InvariantViolation("poincare_coeffs needs a >= 1");
  const std::uint32_t D = detail::joint_cap(A, dual);
  if (n_max + a > D) throw DegreeCapExceeded(n_max + a, D);
  SeriesPoly S;
  S.power = a;
  S.n_max = n_max;
  for (std::uint32_t l = 0; l <= n_max + a; ++l) S.dual_hilbert.push_back(dual.dim(l));
  for (std::uint32_t j = 0; j < a; ++j) S.quotient_hilbert.push_back(A.dim(j));
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    long long c = 0;
    // product coefficient at t^{n+a} of H_{(A^!)*}(t) * H_{A/m^a}(-t)
    for (std::uint32_t j = 0; j < a && j <= n + a; ++j) {
      long long term = S.dual_hilbert[n + a - j] * S.quotient_hilbert[j];
      c += (j % 2 == 0) ? term : -term;
    }
    // times -(-1)^{-a} = (-1)^{a+1}
    S.betti.push_back(a % 2 == 1 ? c : -c);
  }
  return S;
}

inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Equality of the direct alternating-sum Betti formula for the square-free
// algebra with the compact form obtained from the vanishing full sum.
inline bool squarefree_identity_check(std::uint32_t d, std::uint32_t a, std::uint32_t n) {
  if (a < 1 || a > d) throw InvariantViolation("squarefree identity needs 1 <= a <= d");
  long long lhs = 0;
  for (std::int64_t i = 1; i <= a; ++i)
    lhs += (i % 2 == 1 ? 1 : -1) * binomial_ll(n + i + d - 1, d - 1) * binomial_ll(d, a - i);
  long long rhs = 0;
  for (std::int64_t i = static_cast<std::int64_t>(a) - d; i <= 0; ++i)
    rhs += (i % 2 == 0 ? 1 : -1) * binomial_ll(n + i + d - 1, d - 1) * binomial_ll(d, a - i);
  return lhs == rhs;
}

// One verified fact inside a resolution report.
struct CheckItem {
  std::string name;
  bool pass = false;
  // witness of the first failure, when one exists
  std::int64_t n = -1, q = -1, got = 0, want = 0;
};

struct ResolveReport {
  std::uint32_t power = 1, n_max = 0, D = 0;
  bool zero_power = false;
  bool koszul_required = true;
  bool koszul_ok = false;
  std::optional<KoszulWitness> koszul_witness;
  std::vector<std::uint64_t> ranks;  // rank L_{n,a}, n = 0..n_max
  std::vector<CheckItem> checks;

  bool all_passed() const {
    if (koszul_required && !koszul_ok) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

template <class F>
struct Resolution {
  std::vector<LModule<F>> modules;
  ChainComplex<F> complex;   // terms 0..n_max with the induced d'
  ModuleMap<F> augment;      // eps_a, from term 0 onto A
  ResolveReport report;
};

// Assemble the minimal resolution of m^a up to homological degree n_max and
// verify every contract: d'^2 = 0 on stored strands, minimality, vanishing
// strand homology, a-linearity, im = ker for each module, surjectivity of the
// augmentation onto m^a, eps . d'_1 = 0, and H_0 = m^a. Failures are recorded
// as structured check items, never silently dropped.
template <class F>
Resolution<F> resolve(const GradedAlgebra<F>& A, const DualAlgebra<F>& dual,
                      std::uint32_t a, std::uint32_t n_max,
                      bool allow_non_koszul = false,
                      BicomplexConvention conv = kStandardConvention,
                      const KoszulCertificate* known_cert = nullptr) {
  if (a < 1) throw InvariantViolation("resolve needs a >= 1");
  const std::uint32_t D = detail::joint_cap(A, dual);
  Resolution<F> R;
  R.report.power = a;
  R.report.n_max = n_max;
  R.report.D = D;
  R.report.koszul_required = !allow_non_koszul;

  if (a > D) throw DegreeCapExceeded(a, D);
  if (A.dim(a) == 0) {
    // m^a = 0: the zero complex resolves it and every Betti number vanishes
    R.report.zero_power = true;
    R.report.koszul_ok = true;
    R.report.ranks.assign(n_max + 1, 0);
    CheckItem all{"betti_all_zero", true};
    for (std::uint32_t n = 0; n <= n_max; ++n)
      if (l_module(A, dual, n, a, conv).rank != 0) all.pass = false;
    R.report.checks.push_back(all);
    std::vector<GradedFreeModule> terms(n_max + 1);
    std::vector<ModuleMap<F>> diffs(n_max);
    for (auto& d : diffs) d.img.clear();
    R.complex = ChainComplex<F>(&A, std::move(terms), std::move(diffs));
    return R;
  }

  if (n_max + a + 1 > D) throw DegreeCapExceeded(n_max + a + 1, D);

  KoszulCertificate cert = (known_cert && known_cert->D == D)
                               ? *known_cert
                               : koszul_check(A, dual, D, conv);
  R.report.koszul_ok = cert.koszul;
  R.report.koszul_witness = cert.witness;
  if (!cert.koszul && !allow_non_koszul)
    throw NotKoszul("algebra failed Koszul certification up to degree " + std::to_string(D) +
                    "; rerun with the non-Koszul override for diagnostics");

  for (std::uint32_t n = 0; n <= n_max; ++n)
    R.modules.push_back(l_module(A, dual, n, a, conv));
  for (const auto& L : R.modules) R.report.ranks.push_back(L.rank);

  std::vector<GradedFreeModule> terms;
  for (const auto& L : R.modules) terms.push_back(detail::l_as_free_module(L));
  std::vector<ModuleMap<F>> diffs;
  for (std::uint32_t n = 1; n <= n_max; ++n)
    diffs.push_back(l_differential(A, dual, R.modules[n], R.modules[n - 1], conv));
  bool minimal = true;
  for (const auto& d : diffs) minimal &= d.is_minimal();
  R.complex = ChainComplex<F>(&A, std::move(terms), std::move(diffs));
  R.augment = augmentation(A, R.modules[0]);

  auto& checks = R.report.checks;

  CheckItem imker{"im_eq_ker", true};
  for (const auto& L : R.modules)
    if (!L.im_eq_ker) {
      imker.pass = false;
      imker.n = L.n;
      imker.got = L.image_rank;
      imker.want = L.rank;
      break;
    }
  checks.push_back(imker);

  CheckItem lin{"a_linear", true};
  for (std::uint32_t n = 0; n <= n_max && lin.pass; ++n)
    for (std::uint32_t q = 0; q < R.modules[n].gen_degree && lin.pass; ++q)
      if (R.complex.strand_dim(n, q) != 0) lin = {"a_linear", false, n, q, R.complex.strand_dim(n, q), 0};
  checks.push_back(lin);

  checks.push_back({"minimal", minimal});

  CheckItem d2{"dprime_squared_zero", true};
  CheckItem exact{"exact", true};
  CheckItem eps_rank{"augmentation_surjective", true};
  CheckItem eps_d1{"augmentation_composite_zero", true};
  CheckItem h0{"h0_is_power", true};

  struct Task {
    std::uint32_t kind, n, q;
  };
  std::vector<Task> tasks;
  for (std::uint32_t q = 0; q <= D; ++q) {
    for (std::uint32_t n = 2; n <= n_max; ++n) tasks.push_back({0, n, q});
    for (std::uint32_t n = 1; n + 1 <= n_max; ++n) tasks.push_back({1, n, q});
    tasks.push_back({2, 0, q});
    tasks.push_back({3, 0, q});
    tasks.push_back({4, 0, q});
  }
  std::vector<std::int64_t> bad(tasks.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t) {
    const auto [kind, n, q] = tasks[t];
    switch (kind) {
      case 0:
        bad[t] = R.complex.d_squared_zero(n, q) ? 0 : 1;
        break;
      case 1:
        bad[t] = R.complex.strand_homology(n, q);
        break;
      case 2: {
        auto eps = R.augment.strand(q, A);
        bad[t] = static_cast<std::int64_t>(rank(eps)) - power_dim(A, a, q);
        break;
      }
      case 3: {
        if (n_max < 1) break;
        auto eps = R.augment.strand(q, A);
        bad[t] = eps.mul(R.complex.strand_matrix(1, q)).is_zero() ? 0 : 1;
        break;
      }
      case 4: {
        std::int64_t coker = static_cast<std::int64_t>(R.complex.strand_dim(0, q)) -
                             rank(R.complex.strand_matrix(1, q));
        bad[t] = coker - power_dim(A, a, q);
        break;
      }
    }
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (bad[t] == 0) continue;
    const auto [kind, n, q] = tasks[t];
    CheckItem* item = kind == 0   ? &d2
                      : kind == 1 ? &exact
                      : kind == 2 ? &eps_rank
                      : kind == 3 ? &eps_d1
                                  : &h0;
    if (item->pass) {
      item->pass = false;
      item->n = n;
      item->q = q;
      item->got = bad[t];
    }
  }
  checks.push_back(d2);
  checks.push_back(exact);
  checks.push_back(eps_rank);
  checks.push_back(eps_d1);
  checks.push_back(h0);
  return R;
}

}  // namespace koszul

#endif  // KOSZUL_LCOMPLEX_HPP
