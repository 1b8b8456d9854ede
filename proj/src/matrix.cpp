#include "liestrata/matrix.hpp"

#include "liestrata/errors.hpp"

namespace liestrata {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw input_error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void RatMatrix::set_row(std::size_t r, const RatVec& v) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix sum shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix difference shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw input_error("matrix apply shape mismatch");
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = at(i, j);
      if (a != 0 && v[j] != 0) out[i] += a * v[j];
    }
  return out;
}

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t sel = lead;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != lead)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(lead, c));
    const Rat inv = Rat(1) / at(lead, col);
    if (inv != 1)
      for (std::size_t c = col; c < cols_; ++c) at(lead, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      const Rat factor = at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref().size();
}

RatMatrix RatMatrix::kernel() const {
  RatMatrix red = *this;
  const auto pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols_, Rat(0));
    v[free_col] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -red.at(pr, free_col);
    basis.push_back(std::move(v));
  }
  RatMatrix out = RatMatrix::from_rows(basis, cols_);
  out.rref();
  return out.without_zero_rows();
}

RatMatrix RatMatrix::without_zero_rows() const {
  std::vector<RatVec> keep;
  for (std::size_t r = 0; r < rows_; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) {
        zero = false;
        break;
      }
    if (!zero) keep.push_back(row(r));
  }
  return RatMatrix::from_rows(keep, cols_);
}

Rat RatMatrix::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
  RatVec out(a);
  for (auto& x : out) x *= s;
  return out;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  Rat out(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
  return out;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace liestrata
