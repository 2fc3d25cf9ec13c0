#ifndef KOSZUL_MATRIX_HPP
#define KOSZUL_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// A sparse vector: entries sorted by index, no zeros stored.
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elt>>;

template <class F>
void sort_and_collect(const F& k, SparseVec<F>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second = k.add(out.back().second, e.second);
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const auto& e) { return k.is_zero(e.second); }),
            out.end());
  v = std::move(out);
}

// dst += c * src, merging sorted supports.
template <class F>
void row_axpy(const F& k, SparseVec<F>& dst, const typename F::Elt& c,
              const SparseVec<F>& src) {
  SparseVec<F> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      auto v = k.mul(c, src[j].second);
      if (!k.is_zero(v)) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      auto v = k.add(dst[i].second, k.mul(c, src[j].second));
      if (!k.is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  dst = std::move(out);
}

template <class F>
void row_scale(const F& k, SparseVec<F>& row, const typename F::Elt& c) {
  for (auto& e : row) e.second = k.mul(e.second, c);
}

template <class F>
const typename F::Elt* row_find(const SparseVec<F>& row, std::uint32_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Row-major sparse matrix over an exact field.
template <class F>
class SparseMat {
 public:
  using Elt = typename F::Elt;
  using Row = SparseVec<F>;

  SparseMat() = default;
  SparseMat(std::uint32_t rows, std::uint32_t cols, F field = F())
      : rows_(rows), cols_(cols), field_(std::move(field)), data_(rows) {}

  static SparseMat identity(std::uint32_t n, F field = F()) {
    SparseMat m(n, n, field);
    for (std::uint32_t i = 0; i < n; ++i) m.data_[i] = {{i, field.one()}};
    return m;
  }

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const F& field() const { return field_; }

  const Row& row(std::uint32_t i) const { return data_[i]; }
  Row& row_mut(std::uint32_t i) { return data_[i]; }

  Elt get(std::uint32_t i, std::uint32_t j) const {
    const Elt* p = row_find<F>(data_[i], j);
    return p ? *p : field_.zero();
  }

  void set(std::uint32_t i, std::uint32_t j, Elt v) {
    auto& r = data_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      if (field_.is_zero(v))
        r.erase(it);
      else
        it->second = std::move(v);
    } else if (!field_.is_zero(v)) {
      r.insert(it, {j, std::move(v)});
    }
  }

  void set_row(std::uint32_t i, Row r) { data_[i] = std::move(r); }

  std::uint64_t nnz() const {
    std::uint64_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  bool operator==(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::uint32_t i = 0; i < rows_; ++i) {
      if (data_[i].size() != o.data_[i].size()) return false;
      for (std::size_t t = 0; t < data_[i].size(); ++t)
        if (data_[i][t].first != o.data_[i][t].first ||
            !field_.eq(data_[i][t].second, o.data_[i][t].second))
          return false;
    }
    return true;
  }

  SparseMat transpose() const {
    SparseMat t(cols_, rows_, field_);
    for (std::uint32_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    // entries arrive in row order per column index already sorted by i
    return t;
  }

  // this * o, row-by-row linear combination.
  SparseMat mul(const SparseMat& o) const {
    if (cols_ != o.rows_) throw InvariantViolation("matrix product shape mismatch");
    SparseMat out(rows_, o.cols_, field_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
      SparseVec<F> acc;
      for (const auto& [kk, v] : data_[i]) row_axpy(field_, acc, v, o.data_[kk]);
      out.data_[i] = std::move(acc);
    }
    return out;
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    // column-coordinates in, column-coordinates out: y = M x
    SparseVec<F> y;
    for (std::uint32_t i = 0; i < rows_; ++i) {
      Elt s = field_.zero();
      std::size_t a = 0, b = 0;
      const auto& r = data_[i];
      while (a < r.size() && b < x.size()) {
        if (r[a].first < x[b].first)
          ++a;
        else if (x[b].first < r[a].first)
          ++b;
        else {
          s = field_.add(s, field_.mul(r[a].second, x[b].second));
          ++a, ++b;
        }
      }
      if (!field_.is_zero(s)) y.emplace_back(i, std::move(s));
    }
    return y;
  }

  SparseVec<F> col(std::uint32_t j) const {
    SparseVec<F> c;
    for (std::uint32_t i = 0; i < rows_; ++i) {
      const Elt* p = row_find<F>(data_[i], j);
      if (p) c.emplace_back(i, *p);
    }
    return c;
  }

  // horizontal concatenation [this | o]
  SparseMat hcat(const SparseMat& o) const {
    if (rows_ != o.rows_) throw InvariantViolation("hcat row mismatch");
    SparseMat out(rows_, cols_ + o.cols_, field_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
      out.data_[i] = data_[i];
      for (const auto& [j, v] : o.data_[i]) out.data_[i].emplace_back(cols_ + j, v);
    }
    return out;
  }

 private:
  std::uint32_t rows_ = 0, cols_ = 0;
  F field_;
  std::vector<Row> data_;
};

enum class Exec { Auto, Serial, Parallel };

namespace detail {
inline bool rref_run_parallel(Exec exec, std::uint64_t rows, std::uint64_t nnz) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) return true;
  if (exec == Exec::Serial) return false;
  return rows >= 192 && nnz >= 4096;
#else
  (void)exec;
  (void)rows;
  (void)nnz;
  return false;
#endif
}
}  // namespace detail

// Reduced row echelon form. Deterministic: pivots are chosen leftmost column
// first, first available row; no magnitude pivoting (exact arithmetic).
// The parallel path eliminates the pivot column from all rows concurrently and
// produces bit-identical output to the serial reference.
template <class F>
std::pair<SparseMat<F>, std::vector<std::uint32_t>> rref(const SparseMat<F>& m,
                                                         Exec exec = Exec::Auto) {
  const F& k = m.field();
  std::vector<SparseVec<F>> rows(m.rows());
  for (std::uint32_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  const bool par = detail::rref_run_parallel(exec, m.rows(), m.nnz());

  std::vector<std::uint32_t> pivots;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // rows >= r have no support left of c, so a hit means leading entry == c
    std::uint32_t pick = m.rows();
    for (std::uint32_t i = r; i < m.rows(); ++i)
      if (!rows[i].empty() && rows[i].front().first == c) {
        pick = i;
        break;
      }
    if (pick == m.rows()) continue;
    std::swap(rows[r], rows[pick]);
    row_scale(k, rows[r], k.inv(rows[r].front().second));
    rows[r].front().second = k.one();
    auto eliminate = [&](std::uint32_t j) {
      if (j == r) return;
      const typename F::Elt* p = row_find<F>(rows[j], c);
      if (p) row_axpy(k, rows[j], k.neg(*p), rows[r]);
    };
    if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(m.rows()); ++j)
        eliminate(static_cast<std::uint32_t>(j));
#endif
    } else {
      for (std::uint32_t j = 0; j < m.rows(); ++j) eliminate(j);
    }
    pivots.push_back(c);
    ++r;
  }
  SparseMat<F> out(m.rows(), m.cols(), k);
  for (std::uint32_t i = 0; i < r; ++i) out.set_row(i, std::move(rows[i]));
  return {std::move(out), std::move(pivots)};
}

template <class F>
std::uint32_t rank(const SparseMat<F>& m, Exec exec = Exec::Auto) {
  return static_cast<std::uint32_t>(rref(m, exec).second.size());
}

// Basis of the right null space, one column per free column of m, in
// ascending free-column order: a deterministic function of m.
template <class F>
SparseMat<F> kernel_basis(const SparseMat<F>& m, Exec exec = Exec::Auto) {
  auto [R, piv] = rref(m, exec);
  const F& k = m.field();
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::uint32_t> free_cols;
  for (std::uint32_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);

  SparseMat<F> K(m.cols(), static_cast<std::uint32_t>(free_cols.size()), k);
  std::unordered_map<std::uint32_t, std::uint32_t> col_of_free;
  for (std::uint32_t t = 0; t < free_cols.size(); ++t) {
    col_of_free[free_cols[t]] = t;
    K.set(free_cols[t], t, k.one());
  }
  for (std::uint32_t i = 0; i < piv.size(); ++i)
    for (const auto& [c, v] : R.row(i))
      if (c != piv[i] && !is_piv[c]) K.set(piv[i], col_of_free[c], k.neg(v));
  return K;
}

// Indices of a deterministic column-space basis (the pivot columns), plus the
// corresponding original columns of m assembled as a matrix.
template <class F>
std::pair<SparseMat<F>, std::vector<std::uint32_t>> image_basis(
    const SparseMat<F>& m, Exec exec = Exec::Auto) {
  auto piv = rref(m, exec).second;
  SparseMat<F> B(m.rows(), static_cast<std::uint32_t>(piv.size()), m.field());
  for (std::uint32_t t = 0; t < piv.size(); ++t)
    for (const auto& [i, v] : m.col(piv[t])) B.set(i, t, v);
  return {std::move(B), std::move(piv)};
}

// Solve basis * x = v for many right-hand sides at once. basis columns must
// be linearly independent. result[k] is empty (nullopt) when rhs k is not in
// the span.
template <class F>
std::vector<std::optional<SparseVec<F>>> solve_many_in_span(
    const SparseMat<F>& basis, const SparseMat<F>& rhs, Exec exec = Exec::Auto) {
  if (basis.rows() != rhs.rows()) throw InvariantViolation("solve: rhs row mismatch");
  const std::uint32_t nb = basis.cols();
  auto [R, piv] = rref(basis.hcat(rhs), exec);
  std::uint32_t basis_pivots = 0;
  for (auto p : piv)
    if (p < nb) ++basis_pivots;
  if (basis_pivots != nb)
    throw InvariantViolation("solve_in_span: basis columns are dependent");

  std::vector<std::optional<SparseVec<F>>> out(rhs.cols());
  std::vector<bool> bad(rhs.cols(), false);
  for (std::uint32_t i = nb; i < piv.size(); ++i)  // rows pivoting in rhs block
    for (const auto& [c, v] : R.row(i))
      if (c >= nb) bad[c - nb] = true;
  for (std::uint32_t t = 0; t < rhs.cols(); ++t) {
    if (bad[t]) continue;
    SparseVec<F> x;
    for (std::uint32_t i = 0; i < nb; ++i) {
      const auto* p = row_find<F>(R.row(i), nb + t);
      if (p) x.emplace_back(piv[i], *p);
    }
    // piv[i] == i is not guaranteed for the coordinate index; sort by index
    sort_and_collect(basis.field(), x);
    out[t] = std::move(x);
  }
  return out;
}

template <class F>
std::optional<SparseVec<F>> solve_in_span(const SparseMat<F>& basis,
                                          const SparseVec<F>& v,
                                          Exec exec = Exec::Auto) {
  SparseMat<F> rhs(basis.rows(), 1, basis.field());
  for (const auto& [i, c] : v) rhs.set(i, 0, c);
  return solve_many_in_span(basis, rhs, exec)[0];
}

// Streaming echelon builder: rows are inserted one at a time and reduced
// against existing pivots only. Suited to the very sparse, very tall relation
// spans where the sweep in rref() would be quadratic in the row count.
template <class F>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::uint32_t cols, F field = F())
      : cols_(cols), field_(std::move(field)) {}

  // Reduce r against the current pivots and adopt what survives.
  void add_row(SparseVec<F> r) {
    while (!r.empty()) {
      auto it = rows_.find(r.front().first);
      if (it == rows_.end()) break;
      row_axpy(field_, r, field_.neg(r.front().second), it->second);
    }
    if (r.empty()) return;
    row_scale(field_, r, field_.inv(r.front().second));
    r.front().second = field_.one();
    std::uint32_t lead = r.front().first;
    rows_.emplace(lead, std::move(r));
    reduced_ = false;
  }

  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint32_t cols() const { return cols_; }

  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> p;
    p.reserve(rows_.size());
    for (const auto& [c, _] : rows_) p.push_back(c);
    std::sort(p.begin(), p.end());
    return p;
  }

  bool is_pivot(std::uint32_t c) const { return rows_.count(c) != 0; }

  // Back-substitute so every row is supported on its pivot and non-pivot
  // columns only. Idempotent.
  void finalize_reduced() {
    if (reduced_) return;
    auto piv = pivot_columns();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      auto& row = rows_.at(*it);
      for (;;) {
        const std::pair<std::uint32_t, typename F::Elt>* hit = nullptr;
        for (const auto& e : row)
          if (e.first != *it && rows_.count(e.first)) {
            hit = &e;
            break;
          }
        if (!hit) break;
        row_axpy(field_, row, field_.neg(hit->second), rows_.at(hit->first));
      }
    }
    reduced_ = true;
  }

  const SparseVec<F>* row_for_pivot(std::uint32_t c) const {
    auto it = rows_.find(c);
    return it == rows_.end() ? nullptr : &it->second;
  }

  // The reduced echelon rows in pivot order, as a matrix.
  SparseMat<F> to_matrix() {
    finalize_reduced();
    auto piv = pivot_columns();
    SparseMat<F> m(static_cast<std::uint32_t>(piv.size()), cols_, field_);
    for (std::uint32_t i = 0; i < piv.size(); ++i) m.set_row(i, rows_.at(piv[i]));
    return m;
  }

 private:
  std::uint32_t cols_;
  F field_;
  std::unordered_map<std::uint32_t, SparseVec<F>> rows_;
  bool reduced_ = true;
};

}  // namespace koszul

#endif  // KOSZUL_MATRIX_HPP
