#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sqv/fp.hpp"

namespace sqv {

// Dense matrix over F_p. All arithmetic is exact.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, fp_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    require_input(p >= 2, "FpMatrix: modulus must be >= 2");
  }

  static FpMatrix identity(std::size_t n, fp_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  fp_t modulus() const { return p_; }

  fp_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  fp_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](fp_t x) { return x == 0; });
  }

  FpMatrix operator+(const FpMatrix& o) const {
    require_input(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_,
                  "matrix add: dimension mismatch");
    FpMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_add(a_[i], o.a_[i], p_);
    return r;
  }

  FpMatrix operator-(const FpMatrix& o) const {
    require_input(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_,
                  "matrix sub: dimension mismatch");
    FpMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_sub(a_[i], o.a_[i], p_);
    return r;
  }

  FpMatrix operator*(const FpMatrix& o) const {
    require_input(cols_ == o.rows_ && p_ == o.p_, "matrix mul: dimension mismatch");
    FpMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        fp_t aik = (*this)(i, k);
        if (!aik) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          r(i, j) = fp_norm(static_cast<long long>(r(i, j)) +
                                static_cast<long long>(aik) * o(k, j),
                            p_);
        }
      }
    }
    return r;
  }

  FpMatrix scaled(fp_t c) const {
    FpMatrix r = *this;
    for (auto& x : r.a_) x = fp_mul(x, c, p_);
    return r;
  }

  std::vector<fp_t> apply(const std::vector<fp_t>& v) const {
    require_input(v.size() == cols_, "matrix apply: dimension mismatch");
    std::vector<fp_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t((*this)(i, j)) * v[j];
      out[i] = static_cast<fp_t>(acc % p_);
    }
    return out;
  }

  FpMatrix transposed() const {
    FpMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // In-place row reduction to RREF; returns rank. pivots, if given, receives
  // the pivot column of each nonzero row.
  std::size_t rref(std::vector<std::size_t>* pivots = nullptr) {
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && (*this)(pr, c) == 0) ++pr;
      if (pr == rows_) continue;
      if (pr != r) swap_rows(pr, r);
      fp_t inv = fp_inv((*this)(r, c), p_);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = fp_mul((*this)(r, j), inv, p_);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        fp_t f = (*this)(i, c);
        if (!f) continue;
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = fp_sub((*this)(i, j), fp_mul(f, (*this)(r, j), p_), p_);
      }
      if (pivots) pivots->push_back(c);
      ++r;
    }
    return r;
  }

  std::size_t rank() const {
    FpMatrix m = *this;
    return m.rref();
  }

  // Basis of the right null space, as matrix rows.
  FpMatrix kernel() const {
    FpMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t rk = m.rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    FpMatrix ker(cols_ - rk, cols_, p_);
    std::size_t row = 0;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
      if (is_piv[fc]) continue;
      ker(row, fc) = 1;
      for (std::size_t i = 0; i < rk; ++i)
        ker(row, piv[i]) = fp_sub(0, m(i, fc), p_);
      ++row;
    }
    return ker;
  }

  // Solve x * (*this) = rhs for a single row vector; returns success flag.
  bool solve_left(const std::vector<fp_t>& rhs, std::vector<fp_t>* sol) const {
    // Transpose problem: (*this)^T x^T = rhs^T via augmented elimination.
    FpMatrix aug(cols_, rows_ + 1, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) aug(j, i) = (*this)(i, j);
    for (std::size_t j = 0; j < cols_; ++j) aug(j, rows_) = j < rhs.size() ? rhs[j] : 0;
    require_input(rhs.size() == cols_, "solve_left: dimension mismatch");
    std::vector<std::size_t> piv;
    aug.rref(&piv);
    std::vector<fp_t> x(rows_, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (piv[i] == rows_) return false;  // inconsistent
      x[piv[i]] = aug(i, rows_);
    }
    if (sol) *sol = std::move(x);
    return true;
  }

  FpMatrix inverse() const {
    require_input(rows_ == cols_, "inverse: square matrix required");
    FpMatrix aug(rows_, 2 * cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    std::vector<std::size_t> piv;
    std::size_t rk = aug.rref(&piv);
    require_input(rk == rows_, "inverse: singular matrix");
    FpMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
    return r;
  }

  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    require_input(a.cols_ == b.cols_ && a.p_ == b.p_, "vstack: dimension mismatch");
    FpMatrix r(a.rows_ + b.rows_, a.cols_, a.p_);
    std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a.a_.size());
    return r;
  }

  std::vector<fp_t> row(std::size_t i) const {
    return std::vector<fp_t>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<fp_t>& v) {
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
  }

  const std::vector<fp_t>& data() const { return a_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j)
        s += (j ? " " : "") + std::to_string((*this)(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  std::size_t rows_ = 0, cols_ = 0;
  fp_t p_ = 2;
  std::vector<fp_t> a_;
};

// Subspace of F_p^n held as an RREF basis (rows). Canonical: two subspaces
// are equal iff their bases are equal row-wise.
class FpSubspace {
 public:
  FpSubspace() = default;
  FpSubspace(std::size_t ambient_dim, fp_t p)
      : ambient_(ambient_dim), basis_(0, ambient_dim, p) {}

  // Span of the rows of m.
  static FpSubspace row_space(const FpMatrix& m) {
    FpMatrix r = m;
    std::size_t rk = r.rref();
    FpSubspace s(m.cols(), m.modulus());
    FpMatrix b(rk, m.cols(), m.modulus());
    for (std::size_t i = 0; i < rk; ++i) b.set_row(i, r.row(i));
    s.basis_ = std::move(b);
    return s;
  }

  // Span of the columns of m (its image as a linear map).
  static FpSubspace column_space(const FpMatrix& m) { return row_space(m.transposed()); }

  static FpSubspace full(std::size_t n, fp_t p) {
    return row_space(FpMatrix::identity(n, p));
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const FpMatrix& basis() const { return basis_; }
  fp_t modulus() const { return basis_.modulus(); }
  bool is_zero() const { return dim() == 0; }

  bool contains(const std::vector<fp_t>& v) const {
    std::vector<fp_t> c;
    return coordinates(v, &c);
  }

  // Express v in the basis; false if v is outside the subspace.
  bool coordinates(const std::vector<fp_t>& v, std::vector<fp_t>* coords) const {
    fp_t p = basis_.modulus();
    std::vector<fp_t> rem = v;
    std::vector<fp_t> c(dim(), 0);
    std::vector<std::size_t> leads;
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t lead = 0;
      while (lead < ambient_ && basis_(i, lead) == 0) ++lead;
      leads.push_back(lead);
    }
    for (std::size_t i = 0; i < dim(); ++i) {
      fp_t f = rem[leads[i]];  // pivot entries are 1 in RREF
      if (!f) continue;
      c[i] = f;
      for (std::size_t j = 0; j < ambient_; ++j)
        rem[j] = fp_sub(rem[j], fp_mul(f, basis_(i, j), p), p);
    }
    for (auto x : rem)
      if (x) return false;
    if (coords) *coords = std::move(c);
    return true;
  }

  std::vector<fp_t> from_coordinates(const std::vector<fp_t>& coords) const {
    fp_t p = basis_.modulus();
    std::vector<fp_t> v(ambient_, 0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = fp_add(v[j], fp_mul(coords[i], basis_(i, j), p), p);
    return v;
  }

  bool contains(const FpSubspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  FpSubspace sum(const FpSubspace& other) const {
    require_input(ambient_ == other.ambient_, "subspace sum: ambient mismatch");
    return row_space(FpMatrix::vstack(basis_, other.basis_));
  }

  FpSubspace intersect(const FpSubspace& other) const {
    require_input(ambient_ == other.ambient_, "subspace intersect: ambient mismatch");
    // Solve u*A = w*B: kernel of [A; -B]^T picks coefficient pairs.
    fp_t p = basis_.modulus();
    std::size_t da = dim(), db = other.dim();
    if (da == 0 || db == 0) return FpSubspace(ambient_, p);
    FpMatrix stacked(da + db, ambient_, p);
    for (std::size_t i = 0; i < da; ++i) stacked.set_row(i, basis_.row(i));
    for (std::size_t i = 0; i < db; ++i) {
      auto r = other.basis_.row(i);
      for (auto& x : r) x = fp_sub(0, x, p);
      stacked.set_row(da + i, r);
    }
    FpMatrix ker = stacked.transposed().kernel();
    FpMatrix vecs(ker.rows(), ambient_, p);
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      std::vector<fp_t> v(ambient_, 0);
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
          v[j] = fp_add(v[j], fp_mul(ker(k, i), basis_(i, j), p), p);
      vecs.set_row(k, v);
    }
    return row_space(vecs);
  }

  bool operator==(const FpSubspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  FpMatrix basis_;
};

}  // namespace sqv
