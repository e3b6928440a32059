#pragma once

#include <string>
#include <vector>

#include "ttk/laurent.hpp"
#include "ttk/params.hpp"
#include "ttk/poly_matrix.hpp"

namespace ttk {

/// sigma_generator^sign, sign = +1 or -1.
struct BraidLetter {
  int generator;
  int sign;

  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  /// Throws std::invalid_argument when strand_count < 2 or a generator is
  /// outside [1, strand_count - 1] or a sign is not +-1.
  BraidWord(int strand_count, std::vector<BraidLetter> letters);

  [[nodiscard]] int strand_count() const noexcept { return strand_count_; }
  [[nodiscard]] const std::vector<BraidLetter>& letters() const noexcept { return letters_; }

  bool operator==(const BraidWord&) const = default;

 private:
  int strand_count_;
  std::vector<BraidLetter> letters_;
};

/// (s_1 ... s_{p-1})^q (s_1 ... s_{r-1})^{rs} on p strands.
BraidWord ttk_braid_word(const TtkParams& params);

/// Product of reduced Burau matrices, left to right. For sigma_i the
/// generator matrix is the identity except in row i, which reads
/// (..., t, -t, 1, ...) in columns i-1, i, i+1 (out-of-range entries dropped).
PolyMatrix reduced_burau_matrix(const BraidWord& braid);

/// det(B - I) (1 - t) / (1 - t^n), canonical. Assumes the closure is a knot.
/// Throws NonExactDivision otherwise.
LaurentPoly alexander_from_braid_word(const BraidWord& braid);

LaurentPoly alexander_from_braid(const TtkParams& params);

/// "s1 s2 s1^-1" notation.
std::string to_string(const BraidWord& braid);

}  // namespace ttk
