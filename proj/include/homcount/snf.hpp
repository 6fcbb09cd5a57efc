#pragma once

// Smith normal form over the integers.

#include "bigint.hpp"
#include "errors.hpp"

#include <vector>

namespace homcount {

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix from_rows(const std::vector<std::vector<BigInt>>& rows)
  {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw input_error("integer matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const
  {
    if (cols_ != rhs.rows_)
      throw input_error("integer matrix: dimension mismatch in product");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) += (*this)(i, k) * rhs(k, j);
      }
    return out;
  }

  bool operator==(const IntegerMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

namespace detail {

inline void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b)
{
  if (a != b)
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b)
{
  if (a != b)
    for (std::size_t i = 0; i < m.rows(); ++i)
      std::swap(m(i, a), m(i, b));
}

} // namespace detail

/// Diagonal d_1 | d_2 | ... of length min(rows, cols), nonnegative, zeros last.
/// The pivot is always an entry of least nonzero absolute value.
inline std::vector<BigInt> smith_normal_form(IntegerMatrix m)
{
  const auto rows = m.rows(), cols = m.cols();
  const auto diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block.
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0)
            continue;
          BigInt a = abs(m(i, j));
          if (pi == rows || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        std::vector<BigInt> out;
        for (std::size_t k = 0; k < diag; ++k)
          out.push_back(k < t ? abs(m(k, k)) : BigInt(0));
        return out;
      }
      detail::swap_rows(m, t, pi);
      detail::swap_cols(m, t, pj);
      const BigInt pivot = m(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0)
          continue;
        BigInt q = m(i, t) / pivot;
        for (std::size_t j = t; j < cols; ++j)
          m(i, j) -= q * m(t, j);
        if (m(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0)
          continue;
        BigInt q = m(t, j) / pivot;
        for (std::size_t i = t; i < rows; ++i)
          m(i, j) -= q * m(i, t);
        if (m(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Row t and column t are clear; enforce divisibility of the rest.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % pivot != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      for (std::size_t j = t; j < cols; ++j)
        m(t, j) += m(bad, j);
    }
  }
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < diag; ++k)
    out.push_back(abs(m(k, k)));
  return out;
}

inline std::size_t rank_of_diagonal(const std::vector<BigInt>& d)
{
  std::size_t r = 0;
  for (const auto& x : d)
    r += x != 0;
  return r;
}

} // namespace homcount
