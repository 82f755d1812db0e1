#pragma once

// Smith normal form of homogeneous monomial matrices over F2[U].

#include <string>
#include <vector>

#include "unogrid/poly.hpp"

namespace unogrid {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PolyF2U& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const PolyF2U& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<PolyF2U> data_;
};

/// P * M * Q = D with D diagonal, diagonal[i] = exponent of D(i,i) for i < rank,
/// nondecreasing so each entry divides the next. Pinv, Qinv are the inverses.
struct SmithForm {
  std::vector<int> diagonal;
  PolyMatrix d, p, p_inv, q, q_inv;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

/// Every nonzero entry must be a single power of U and the exponents must be
/// of the form a_i + b_j for some row and column weights. Throws NonHomogeneousEntry.
SmithForm smith_reduce(const PolyMatrix& m);

}  // namespace unogrid
