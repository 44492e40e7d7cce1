#pragma once

// Exact linear algebra over a field scalar: reduced row-echelon forms,
// kernels, linear solves and canonical subspace bases.
//
// Every routine is templated on the scalar. Elimination never chooses a pivot
// by magnitude, so the results are exact and canonical only for exact scalar
// types (lielab::Rational); floating-point instantiations are for testing.
//
// Dense Eigen types are the public currency. Internally elimination runs on
// sparse rows, since the systems assembled by the derivation and locality
// code are very sparse and fill-in stays bounded once the rank saturates.

#include "lielab/error.hpp"
#include "lielab/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace lielab {

using Index = Eigen::Index;

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<Rational>;
using Vec = VecX<Rational>;

template <class Scalar>
bool scalar_is_zero(const Scalar& s) {
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else {
    return s == Scalar(0);
  }
}

template <class Scalar>
bool is_zero_vector(const VecX<Scalar>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!scalar_is_zero(v[i])) return false;
  }
  return true;
}

template <class Scalar>
VecX<Scalar> zero_vector(Index n) {
  return VecX<Scalar>::Constant(n, Scalar(0));
}

template <class Scalar>
MatX<Scalar> zero_matrix(Index rows, Index cols) {
  return MatX<Scalar>::Constant(rows, cols, Scalar(0));
}

/// A sparse row: (column, value) pairs, strictly increasing columns, no
/// stored zeros.
template <class Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

template <class Derived>
SparseRow<typename Derived::Scalar> to_sparse(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  SparseRow<Scalar> out;
  for (Index i = 0; i < v.size(); ++i) {
    if (!scalar_is_zero(v.derived()(i))) out.emplace_back(i, v.derived()(i));
  }
  return out;
}

template <class Scalar>
VecX<Scalar> to_dense(const SparseRow<Scalar>& row, Index n) {
  VecX<Scalar> out = zero_vector<Scalar>(n);
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

/// Incremental reduced row-echelon form.
///
/// Invariant: every stored row has a 1 at its pivot column and zeros at the
/// pivot columns of all other stored rows. Inserting a row keeps the
/// invariant, so the stored rows are always the RREF of everything inserted
/// so far (up to row order, which `rows_sorted` fixes).
template <class Scalar>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Index cols) : cols_(cols), row_of_col_(cols, -1) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Remainder of `row` after elimination against the stored pivots.
  SparseRow<Scalar> reduce(const SparseRow<Scalar>& row) const {
    bool touches_pivot = false;
    for (const auto& entry : row) {
      check_column(entry.first);
      if (row_of_col_[entry.first] >= 0) {
        touches_pivot = true;
        break;
      }
    }
    if (!touches_pivot) return row;

    std::vector<Scalar> work(cols_, Scalar(0));
    std::vector<char> seen(cols_, 0);
    std::vector<Index> support;
    support.reserve(row.size() * 4);
    auto touch = [&](Index c) {
      if (!seen[c]) {
        seen[c] = 1;
        support.push_back(c);
      }
    };
    for (const auto& [c, v] : row) {
      work[c] = v;
      touch(c);
    }
    // Stored rows vanish on every other pivot column, so the coefficient of
    // pivot row p is just the original entry of `row` at p.
    for (const auto& [c, v] : row) {
      const auto r = row_of_col_[c];
      if (r < 0) continue;
      const Scalar factor = v;
      for (const auto& [pc, pv] : rows_[r]) {
        work[pc] -= factor * pv;
        touch(pc);
      }
    }
    std::sort(support.begin(), support.end());
    SparseRow<Scalar> out;
    for (Index c : support) {
      if (!scalar_is_zero(work[c])) out.emplace_back(c, std::move(work[c]));
    }
    return out;
  }

  bool in_span(const SparseRow<Scalar>& row) const { return reduce(row).empty(); }

  /// Adds `row` to the span. Returns true iff the rank grew.
  bool insert(const SparseRow<Scalar>& row) {
    SparseRow<Scalar> r = reduce(row);
    if (r.empty()) return false;
    const Index pivot = r.front().first;
    const Scalar lead = r.front().second;
    for (auto& entry : r) entry.second /= lead;

    for (auto& stored : rows_) {
      auto it = std::lower_bound(stored.begin(), stored.end(), pivot,
                                 [](const auto& e, Index c) { return e.first < c; });
      if (it == stored.end() || it->first != pivot) continue;
      const Scalar factor = it->second;
      stored = axpy(stored, factor, r);
    }
    row_of_col_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(r));
    pivot_of_row_.push_back(pivot);
    return true;
  }

  template <class Derived>
  bool insert_dense(const Eigen::DenseBase<Derived>& v) {
    return insert(to_sparse(v));
  }

  bool is_pivot(Index c) const { return row_of_col_[c] >= 0; }

  /// Stored row whose pivot is column `c` (which must be a pivot column).
  const SparseRow<Scalar>& pivot_row(Index c) const { return rows_[row_of_col_[c]]; }

  std::vector<Index> pivots() const {
    std::vector<Index> p = pivot_of_row_;
    std::sort(p.begin(), p.end());
    return p;
  }

  /// Stored rows ordered by pivot column.
  std::vector<SparseRow<Scalar>> rows_sorted() const {
    std::vector<SparseRow<Scalar>> out;
    out.reserve(rows_.size());
    for (Index c : pivots()) out.push_back(rows_[row_of_col_[c]]);
    return out;
  }

  /// Null space of the stored rows, one vector per free column (not yet
  /// echelon-canonical).
  std::vector<SparseRow<Scalar>> null_space_rows() const {
    std::vector<std::vector<std::pair<Index, Scalar>>> by_free(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        if (c != pivot_of_row_[r]) by_free[c].emplace_back(pivot_of_row_[r], -v);
      }
    }
    std::vector<SparseRow<Scalar>> out;
    for (Index f = 0; f < cols_; ++f) {
      if (row_of_col_[f] >= 0) continue;
      SparseRow<Scalar> v = std::move(by_free[f]);
      v.emplace_back(f, Scalar(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void check_column(Index c) const {
    if (c < 0 || c >= cols_) throw UsageError("sparse row column out of range");
  }

  // a - factor * b, both sorted.
  static SparseRow<Scalar> axpy(const SparseRow<Scalar>& a, const Scalar& factor,
                                const SparseRow<Scalar>& b) {
    SparseRow<Scalar> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(factor * b[j].second));
        ++j;
      } else {
        Scalar v = a[i].second - factor * b[j].second;
        if (!scalar_is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Index cols_;
  std::vector<SparseRow<Scalar>> rows_;
  std::vector<Index> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_col_;
};

template <class Scalar>
struct RrefResult {
  MatX<Scalar> reduced;
  std::vector<Index> pivots;
};

template <class Scalar>
EchelonBuilder<Scalar> echelon_of_rows(const MatX<Scalar>& m) {
  EchelonBuilder<Scalar> builder(m.cols());
  for (Index r = 0; r < m.rows(); ++r) builder.insert_dense(m.row(r));
  return builder;
}

/// Reduced row-echelon form. Zero rows are kept at the bottom so the result
/// has the shape of `m`.
template <class Scalar>
RrefResult<Scalar> rref(const MatX<Scalar>& m) {
  const auto builder = echelon_of_rows(m);
  RrefResult<Scalar> out{zero_matrix<Scalar>(m.rows(), m.cols()), builder.pivots()};
  const auto rows = builder.rows_sorted();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) out.reduced(static_cast<Index>(r), c) = v;
  }
  return out;
}

template <class Scalar>
Index rank(const MatX<Scalar>& m) {
  return echelon_of_rows(m).rank();
}

/// A subspace of Scalar^n held by its canonical basis: the nonzero rows of
/// the reduced row-echelon form of any spanning set. Two subspaces are equal
/// iff their bases are equal entrywise.
template <class Scalar>
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  static SubspaceBasis zero(Index ambient) {
    SubspaceBasis s;
    s.basis_ = MatX<Scalar>(0, ambient);
    return s;
  }

  static SubspaceBasis full(Index ambient) {
    SubspaceBasis s;
    s.basis_ = zero_matrix<Scalar>(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) {
      s.basis_(i, i) = Scalar(1);
      s.pivots_.push_back(i);
    }
    return s;
  }

  /// Canonical basis of the row span of `rows`.
  static SubspaceBasis span(const MatX<Scalar>& rows) { return from_builder(echelon_of_rows(rows)); }

  static SubspaceBasis span(const std::vector<VecX<Scalar>>& vectors, Index ambient) {
    EchelonBuilder<Scalar> builder(ambient);
    for (const auto& v : vectors) {
      if (v.size() != ambient) throw UsageError("span: vector length differs from ambient dimension");
      builder.insert_dense(v);
    }
    return from_builder(builder);
  }

  static SubspaceBasis from_builder(const EchelonBuilder<Scalar>& builder) {
    SubspaceBasis s;
    const auto rows = builder.rows_sorted();
    s.basis_ = zero_matrix<Scalar>(static_cast<Index>(rows.size()), builder.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r]) s.basis_(static_cast<Index>(r), c) = v;
    }
    s.pivots_ = builder.pivots();
    return s;
  }

  /// Null space of the rows held by `builder`, canonicalized.
  static SubspaceBasis null_space_of(const EchelonBuilder<Scalar>& builder) {
    EchelonBuilder<Scalar> kernel(builder.cols());
    for (const auto& row : builder.null_space_rows()) kernel.insert(row);
    return from_builder(kernel);
  }

  Index dim() const { return basis_.rows(); }
  Index ambient() const { return basis_.cols(); }
  const MatX<Scalar>& rows() const { return basis_; }
  VecX<Scalar> vector(Index k) const { return basis_.row(k).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Coefficients c with sum_k c_k * vector(k) == v, or nullopt if v is not
  /// in the subspace. In echelon form c is read off the pivot columns.
  std::optional<VecX<Scalar>> coordinates(const VecX<Scalar>& v) const {
    if (v.size() != ambient()) throw UsageError("coordinates: length mismatch");
    VecX<Scalar> c(dim());
    for (Index k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    VecX<Scalar> rebuilt = zero_vector<Scalar>(ambient());
    for (Index k = 0; k < dim(); ++k) {
      if (scalar_is_zero(c[k])) continue;
      rebuilt += c[k] * vector(k);
    }
    if (rebuilt != v) return std::nullopt;
    return c;
  }

  bool contains(const VecX<Scalar>& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.basis_.rows() == b.basis_.rows() && a.basis_.cols() == b.basis_.cols() &&
           a.basis_ == b.basis_;
  }

 private:
  MatX<Scalar> basis_;
  std::vector<Index> pivots_;
};

using Subspace = SubspaceBasis<Rational>;

/// Basis of { v : m v = 0 }.
template <class Scalar>
SubspaceBasis<Scalar> kernel(const MatX<Scalar>& m) {
  return SubspaceBasis<Scalar>::null_space_of(echelon_of_rows(m));
}

/// Canonical solution of m v = b (free variables zero), or nullopt when the
/// system is inconsistent.
template <class Scalar>
std::optional<VecX<Scalar>> solve(const MatX<Scalar>& m, const VecX<Scalar>& b) {
  if (b.size() != m.rows()) throw UsageError("solve: right-hand side length differs from row count");
  const Index n = m.cols();
  EchelonBuilder<Scalar> builder(n + 1);
  for (Index r = 0; r < m.rows(); ++r) {
    SparseRow<Scalar> row = to_sparse(m.row(r));
    if (!scalar_is_zero(b[r])) row.emplace_back(n, b[r]);
    builder.insert(row);
  }
  if (builder.is_pivot(n)) return std::nullopt;
  VecX<Scalar> v = zero_vector<Scalar>(n);
  for (Index p : builder.pivots()) {
    const auto& row = builder.pivot_row(p);
    if (row.back().first == n) v[p] = row.back().second;
  }
  return v;
}

/// Proof that m v = b has no solution: y with y^T m = 0 and y . b = 1.
template <class Scalar>
struct Infeasible {
  VecX<Scalar> certificate;
};

template <class Scalar>
using SolveOutcome = std::variant<VecX<Scalar>, Infeasible<Scalar>>;

template <class Scalar>
SolveOutcome<Scalar> solve_or_certify(const MatX<Scalar>& m, const VecX<Scalar>& b) {
  if (auto v = solve(m, b)) return *v;
  const MatX<Scalar> mt = m.transpose();
  const auto left = kernel(mt);
  for (Index k = 0; k < left.dim(); ++k) {
    const VecX<Scalar> y = left.vector(k);
    const Scalar yb = y.dot(b);
    if (!scalar_is_zero(yb)) return Infeasible<Scalar>{VecX<Scalar>(y / yb)};
  }
  throw Error("solve_or_certify: inconsistent system without a left-kernel certificate");
}

template <class Scalar>
void check_same_ambient(const SubspaceBasis<Scalar>& a, const SubspaceBasis<Scalar>& b,
                        const char* what) {
  if (a.ambient() != b.ambient()) throw UsageError(std::string(what) + ": ambient dimension mismatch");
}

template <class Scalar>
bool subspace_contains(const SubspaceBasis<Scalar>& outer, const SubspaceBasis<Scalar>& inner) {
  check_same_ambient(outer, inner, "subspace_contains");
  for (Index k = 0; k < inner.dim(); ++k) {
    if (!outer.contains(inner.vector(k))) return false;
  }
  return true;
}

/// Vectors orthogonal (under the plain dot product) to every element of s.
template <class Scalar>
SubspaceBasis<Scalar> annihilator(const SubspaceBasis<Scalar>& s) {
  return kernel(s.rows());
}

template <class Scalar>
SubspaceBasis<Scalar> subspace_intersect(const SubspaceBasis<Scalar>& a, const SubspaceBasis<Scalar>& b) {
  check_same_ambient(a, b, "subspace_intersect");
  EchelonBuilder<Scalar> constraints(a.ambient());
  for (const auto* s : {&a, &b}) {
    const auto ann = annihilator(*s);
    for (Index k = 0; k < ann.dim(); ++k) constraints.insert_dense(ann.rows().row(k));
  }
  return SubspaceBasis<Scalar>::null_space_of(constraints);
}

template <class Scalar>
SubspaceBasis<Scalar> subspace_sum(const SubspaceBasis<Scalar>& a, const SubspaceBasis<Scalar>& b) {
  check_same_ambient(a, b, "subspace_sum");
  EchelonBuilder<Scalar> builder(a.ambient());
  for (const auto* s : {&a, &b}) {
    for (Index k = 0; k < s->dim(); ++k) builder.insert_dense(s->rows().row(k));
  }
  return SubspaceBasis<Scalar>::from_builder(builder);
}

}  // namespace lielab
