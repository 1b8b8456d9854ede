#pragma once

#include <cstddef>
#include <vector>

#include "liestrata/rat.hpp"

namespace liestrata {

using RatVec = std::vector<Rat>;

/// Dense matrix over exact rationals. Small (dimensions here top out
/// around gl(8), i.e. 64), so no sparsity games beyond what the
/// structure-constant storage already does.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  void set_row(std::size_t r, const RatVec& v);

  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const Rat& s) const;
  bool operator==(const RatMatrix& o) const = default;

  RatVec apply(const RatVec& v) const;  // this * v

  /// In-place reduced row echelon form. Returns pivot columns (their
  /// count is the rank). The result is the canonical representative of
  /// the row space.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {x : this * x = 0}, rows in reduced echelon form.
  RatMatrix kernel() const;

  /// Drops all-zero rows (used after rref to store canonical bases).
  RatMatrix without_zero_rows() const;

  Rat trace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& a);
Rat vec_dot(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& a);

}  // namespace liestrata
