#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttk/laurent.hpp"

namespace ttk {

/// Dense row-major matrix over the Laurent ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Fraction-free (Bareiss) determinant; every intermediate division is exact.
LaurentPoly determinant(PolyMatrix m);

/// Cofactor expansion along the first row. Exponential; used as a test oracle.
LaurentPoly determinant_by_cofactors(const PolyMatrix& m);

/// JSON 2-D array of polynomial text renderings.
std::string to_json_text(const PolyMatrix& m);

}  // namespace ttk
