#ifndef FIXLAB_INTLAT_HPP_
#define FIXLAB_INTLAT_HPP_

// Exact integer lattice kernel: Hermite and Smith normal forms, linear
// Diophantine systems, lattice and coset intersections. Everything in the
// group layer reduces to these routines.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace fixlab {

using IntVector = std::vector<Integer>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long x : row)
        data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  // Rows given as vectors of a common length `cols`.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  // row[dst] -= factor * row[src]
  void sub_row(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0)
        (*this)(dst, j) -= factor * (*this)(src, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = -(*this)(i, j);
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0)
        return false;
    return true;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += x * b(k, j);
      }
    return c;
  }

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

inline IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

namespace impl {

// Brings `m` to row-style Hermite normal form in place, applying every row
// operation to `track` as well when it is given. Returns the rank.
inline std::size_t hermite_in_place(IntMatrix& m, IntMatrix* track) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  auto swap_both = [&](std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    if (track) track->swap_rows(a, b);
  };
  auto sub_both = [&](std::size_t dst, std::size_t src, const Integer& q) {
    m.sub_row(dst, src, q);
    if (track) track->sub_row(dst, src, q);
  };
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, col) != 0 && (best == rows || abs_value(m(i, col)) < abs_value(m(best, col))))
          best = i;
      if (best == rows)
        break;
      swap_both(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, col) == 0)
          continue;
        sub_both(i, r, m(i, col) / m(r, col));
        if (m(i, col) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (r >= rows || m(r, col) == 0)
      continue;
    if (m(r, col) < 0) {
      m.negate_row(r);
      if (track) track->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i)
      sub_both(i, r, floor_div(m(i, col), m(r, col)));
    ++r;
  }
  return r;
}

} // namespace impl

struct HnfResult;

// A sublattice of Z^n, stored by its canonical row-style HNF basis: pivots
// positive, entries above a pivot reduced into [0, pivot). Two lattices are
// equal iff their bases are equal entry-wise.
class Lattice {
public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Lattice span(std::span<const IntVector> rows, std::size_t ambient_dim) {
    IntMatrix m = IntMatrix::from_rows(rows, ambient_dim);
    return from_matrix(std::move(m));
  }

  static Lattice from_matrix(IntMatrix m) {
    std::size_t rank = impl::hermite_in_place(m, nullptr);
    return from_hermite(m, rank);
  }

  static Lattice full(std::size_t ambient_dim) {
    Lattice l(ambient_dim);
    l.basis_ = IntMatrix::identity(ambient_dim);
    l.pivots_.resize(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
      l.pivots_[i] = i;
    return l;
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  IntVector basis_row(std::size_t i) const { return basis_.row(i); }
  std::vector<IntVector> basis_rows() const {
    std::vector<IntVector> out;
    out.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const Integer& pivot(std::size_t i) const { return basis_(i, pivots_[i]); }

  // Canonical representative of v modulo the lattice: every pivot
  // coordinate lands in [0, pivot).
  IntVector reduce(IntVector v) const {
    check_dim(v);
    for (std::size_t i = 0; i < rank(); ++i) {
      Integer q = floor_div(v[pivots_[i]], pivot(i));
      if (q != 0)
        for (std::size_t j = pivots_[i]; j < dim_; ++j)
          v[j] -= q * basis_(i, j);
    }
    return v;
  }

  bool contains(const IntVector& v) const { return is_zero(reduce(v)); }

  // Integer coordinates of v in the HNF basis, if v lies in the lattice.
  std::optional<IntVector> coefficients(IntVector v) const {
    check_dim(v);
    IntVector c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      const Integer& p = pivot(i);
      if (v[pivots_[i]] % p != 0)
        return std::nullopt;
      c[i] = v[pivots_[i]] / p;
      if (c[i] != 0)
        for (std::size_t j = pivots_[i]; j < dim_; ++j)
          v[j] -= c[i] * basis_(i, j);
    }
    if (!is_zero(v))
      return std::nullopt;
    return c;
  }

  bool contains(const Lattice& other) const {
    for (std::size_t i = 0; i < other.rank(); ++i)
      if (!contains(other.basis_row(i)))
        return false;
    return true;
  }

  // Product of pivots: the covolume inside the rational span.
  Integer pivot_product() const {
    Integer p = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      p *= pivot(i);
    return p;
  }

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }

private:
  friend HnfResult hnf(const IntMatrix&);

  static Lattice from_hermite(const IntMatrix& h, std::size_t rank) {
    Lattice l(h.cols());
    l.basis_ = IntMatrix(rank, h.cols());
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < h.cols(); ++j)
        l.basis_(i, j) = h(i, j);
      std::size_t p = 0;
      while (h(i, p) == 0)
        ++p;
      l.pivots_.push_back(p);
    }
    return l;
  }

  void check_dim(const IntVector& v) const {
    if (v.size() != dim_)
      throw std::invalid_argument("Lattice: vector dimension mismatch");
  }

  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

struct HnfResult {
  Lattice lattice;
  // Unimodular, with transform * m = [lattice.basis(); 0].
  IntMatrix transform;
};

inline HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t rank = impl::hermite_in_place(h, &u);
  return {Lattice::from_hermite(h, rank), std::move(u)};
}

// offset + lattice, with the offset reduced modulo the lattice.
class AffineLattice {
public:
  AffineLattice(IntVector offset, Lattice lattice)
    : lattice_(std::move(lattice)), offset_(lattice_.reduce(std::move(offset))) {}

  const IntVector& offset() const { return offset_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }

  bool contains(const IntVector& v) const {
    IntVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      d[i] = v[i] - offset_[i];
    return lattice_.contains(d);
  }

  bool operator==(const AffineLattice&) const = default;

private:
  Lattice lattice_;
  IntVector offset_;
};

struct SnfResult {
  // Nonzero diagonal entries d1 | d2 | ... | dk (ones included).
  std::vector<Integer> factors;
  // Number of columns minus rank.
  std::size_t free_rank = 0;
};

inline SnfResult snf(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi == rows || abs_value(m(i, j)) < abs_value(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows)
      break;
    m.swap_rows(t, pi);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i)
        std::swap(m(i, t), m(i, pj));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m(i, t) != 0) {
        m.sub_row(i, t, m(i, t) / m(t, t));
        if (m(i, t) != 0)
          clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (m(t, j) != 0) {
        Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < rows; ++i)
          m(i, j) -= q * m(i, t);
        if (m(t, j) != 0)
          clean = false;
      }
    if (!clean)
      continue;
    diag.push_back(abs_value(m(t, t)));
    ++t;
  }
  // Diagonal to divisibility chain: (a, b) -> (gcd, lcm) keeps the group.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = std::move(g);
      diag[j] = std::move(l);
    }
  return {std::move(diag), cols - t};
}

// All integer solutions of a * x = b.
inline std::optional<AffineLattice> solve_linear(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: rows of a must match length of b");
  const std::size_t n = a.cols();
  // u * a^T = [h; 0]  =>  a * u^T = [h^T 0]; write x = u^T y.
  HnfResult h = hnf(a.transposed());
  const Lattice& image = h.lattice;
  std::optional<IntVector> y = image.coefficients(b);
  if (!y)
    return std::nullopt;
  IntVector x(n);
  for (std::size_t k = 0; k < image.rank(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      x[j] += (*y)[k] * h.transform(k, j);
  std::vector<IntVector> kernel;
  for (std::size_t k = image.rank(); k < n; ++k)
    kernel.push_back(h.transform.row(k));
  return AffineLattice(std::move(x), Lattice::span(kernel, n));
}

inline Lattice lattice_meet(const Lattice& l1, const Lattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim())
    throw std::invalid_argument("lattice_meet: ambient dimensions differ");
  const std::size_t n = l1.ambient_dim(), r1 = l1.rank(), r2 = l2.rank();
  IntMatrix stacked(r1 + r2, n);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < n; ++j)
      stacked(i, j) = l1.basis()(i, j);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < n; ++j)
      stacked(r1 + i, j) = l2.basis()(i, j);
  // Left-kernel rows (c1, c2) give c1 * B1 = -c2 * B2 in both lattices.
  HnfResult h = hnf(stacked);
  std::vector<IntVector> common;
  for (std::size_t k = h.lattice.rank(); k < r1 + r2; ++k) {
    IntVector v(n);
    for (std::size_t i = 0; i < r1; ++i) {
      const Integer& c = h.transform(k, i);
      if (c != 0)
        for (std::size_t j = 0; j < n; ++j)
          v[j] += c * l1.basis()(i, j);
    }
    common.push_back(std::move(v));
  }
  return Lattice::span(common, n);
}

inline std::optional<AffineLattice> affine_meet(const AffineLattice& c1, const AffineLattice& c2) {
  if (c1.ambient_dim() != c2.ambient_dim())
    throw std::invalid_argument("affine_meet: ambient dimensions differ");
  const Lattice& l1 = c1.lattice();
  const Lattice& l2 = c2.lattice();
  const std::size_t n = l1.ambient_dim(), r1 = l1.rank(), r2 = l2.rank();
  // o1 + u B1 = o2 + w B2  <=>  [B1^T | -B2^T] (u, w) = o2 - o1
  IntMatrix a(n, r1 + r2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r1; ++i)
      a(j, i) = l1.basis()(i, j);
    for (std::size_t i = 0; i < r2; ++i)
      a(j, r1 + i) = -l2.basis()(i, j);
  }
  IntVector rhs(n);
  for (std::size_t j = 0; j < n; ++j)
    rhs[j] = c2.offset()[j] - c1.offset()[j];
  auto sol = solve_linear(a, rhs);
  if (!sol)
    return std::nullopt;
  IntVector point = c1.offset();
  for (std::size_t i = 0; i < r1; ++i) {
    const Integer& u = sol->offset()[i];
    if (u != 0)
      for (std::size_t j = 0; j < n; ++j)
        point[j] += u * l1.basis()(i, j);
  }
  return AffineLattice(std::move(point), lattice_meet(l1, l2));
}

} // namespace fixlab

#endif
