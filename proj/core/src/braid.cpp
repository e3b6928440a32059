#include "ttk/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ttk {

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 2) throw std::invalid_argument("a braid needs at least two strands");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strand_count_)
      throw std::invalid_argument("braid generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("braid letter sign must be +-1");
  }
}

BraidWord ttk_braid_word(const TtkParams& params) {
  const auto p = static_cast<int>(params.p());
  const auto r = static_cast<int>(params.r());
  const std::int64_t twists = params.rs();
  const int sign = twists < 0 ? -1 : 1;

  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>((p - 1) * params.q() + (r - 1) * std::llabs(twists)));
  for (std::int64_t rep = 0; rep < params.q(); ++rep)
    for (int i = 1; i < p; ++i) letters.push_back({i, 1});
  for (std::int64_t rep = 0; rep < std::llabs(twists); ++rep)
    for (int i = 1; i < r; ++i) letters.push_back({i, sign});
  return BraidWord(p, std::move(letters));
}

PolyMatrix reduced_burau_matrix(const BraidWord& braid) {
  const auto n = static_cast<std::size_t>(braid.strand_count() - 1);
  PolyMatrix m = PolyMatrix::identity(n);

  const LaurentPoly t = LaurentPoly::t_pow(1);
  const LaurentPoly minus_t = -t;
  const LaurentPoly t_inv = LaurentPoly::t_pow(-1);
  const LaurentPoly minus_t_inv = -t_inv;
  const LaurentPoly one = LaurentPoly::constant(1);

  // Right multiplication by a generator G that differs from the identity only
  // in row c: column j of M G is M[:, j] + M[:, c] (G[c][j] - delta_cj).
  for (const auto& letter : braid.letters()) {
    const auto c = static_cast<std::size_t>(letter.generator - 1);
    const bool positive = letter.sign > 0;
    const LaurentPoly& left = positive ? t : one;
    const LaurentPoly& diag = positive ? minus_t : minus_t_inv;
    const LaurentPoly& right = positive ? one : t_inv;

    for (std::size_t i = 0; i < n; ++i) {
      const LaurentPoly pivot = m(i, c);
      if (pivot.is_zero()) continue;
      if (c > 0) m(i, c - 1) += pivot * left;
      if (c + 1 < n) m(i, c + 1) += pivot * right;
      m(i, c) = pivot * diag;
    }
  }
  return m;
}

LaurentPoly alexander_from_braid_word(const BraidWord& braid) {
  const PolyMatrix burau = reduced_burau_matrix(braid);
  const LaurentPoly det = determinant(burau - PolyMatrix::identity(burau.rows()));
  const LaurentPoly numerator = det * one_minus_t_pow(1);
  return normalize(exact_div(numerator, one_minus_t_pow(braid.strand_count())));
}

LaurentPoly alexander_from_braid(const TtkParams& params) {
  return alexander_from_braid_word(ttk_braid_word(params));
}

std::string to_string(const BraidWord& braid) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : braid.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.generator;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace ttk
