#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttk {

enum class InvalidReason { NotCoprime, OrderViolation, RangeViolation };

std::string_view to_string(InvalidReason reason) noexcept;

class InvalidParams : public std::invalid_argument {
 public:
  InvalidParams(InvalidReason reason, const std::string& detail)
      : std::invalid_argument(detail), reason_(reason) {}

  [[nodiscard]] InvalidReason reason() const noexcept { return reason_; }

 private:
  InvalidReason reason_;
};

/*
 * Parameters of the twisted torus knot T(p,q;r,s): the closure of the
 * p-strand braid (s_1 ... s_{p-1})^q (s_1 ... s_{r-1})^{rs}.
 *
 * Only constructible through validate(), so every instance satisfies
 * p > q > 0, gcd(p, q) = 1 and 1 < r < p.
 */
class TtkParams {
 public:
  [[nodiscard]] std::int64_t p() const noexcept { return p_; }
  [[nodiscard]] std::int64_t q() const noexcept { return q_; }
  [[nodiscard]] std::int64_t r() const noexcept { return r_; }
  [[nodiscard]] std::int64_t s() const noexcept { return s_; }

  /// r * s, the total twist exponent that shows up everywhere.
  [[nodiscard]] std::int64_t rs() const noexcept { return r_ * s_; }

  auto operator<=>(const TtkParams&) const = default;

 private:
  friend TtkParams validate(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);
  TtkParams(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s)
      : p_(p), q_(q), r_(r), s_(s) {}

  std::int64_t p_;
  std::int64_t q_;
  std::int64_t r_;
  std::int64_t s_;
};

/// Throws InvalidParams.
TtkParams validate(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

std::string to_string(const TtkParams& params);

/*
 * Residue combinatorics of (p, q, r). [x] is the residue of x mod p in
 * [0, p), and R = {[-n q^-1] : n = 1..q}.
 *
 *   marks              Q_0 < ... < Q_{r-1}, the sorted residues [n q^-1], n < r
 *   gaps               d_1..d_r, d_i = Q_i - Q_{i-1}, d_r = p - Q_{r-1}
 *   counts             k_1..k_r, elements of R in [Q_{i-1}, Q_i) (k_r: >= Q_{r-1})
 *   cumulative_counts  kbar_1..kbar_{r-1}, prefix sums of counts
 *   return_mark        Q' = [r q^-1], with Q_m < Q' < Q_{m+1}
 *   return_index       m
 *   return_gap         d' = Q' - Q_m
 *   return_count       k', elements of R in [Q_m, Q')
 *   return_cumulative  kbar' = k_1 + ... + k_m + k'
 *
 * Vectors are 0-based; the 1-based accessors mirror the usual indexing.
 */
struct ModularData {
  std::int64_t q_inverse = 0;
  std::vector<std::int64_t> marks;
  std::vector<std::int64_t> gaps;
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> cumulative_counts;
  std::int64_t return_mark = 0;
  std::int64_t return_index = 0;
  std::int64_t return_gap = 0;
  std::int64_t return_count = 0;
  std::int64_t return_cumulative = 0;

  /// Q_i for i in [0, r); Q_r is taken to be p.
  [[nodiscard]] std::int64_t mark(std::size_t i, std::int64_t p) const {
    return i == marks.size() ? p : marks.at(i);
  }
  /// d_i, i in [1, r].
  [[nodiscard]] std::int64_t gap(std::size_t i) const { return gaps.at(i - 1); }
  /// k_i, i in [1, r].
  [[nodiscard]] std::int64_t count(std::size_t i) const { return counts.at(i - 1); }
  /// kbar_i, i in [0, r]; kbar_0 = 0 and kbar_r = q.
  [[nodiscard]] std::int64_t cumulative(std::size_t i) const;

  bool operator==(const ModularData&) const = default;
};

/// Multiplicative inverse of a modulo m, in [1, m). Requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

ModularData compute_modular_data(const TtkParams& params);

/// Recomputes the same data by walking the strand trace of the knot on the
/// genus-two Heegaard surface: visit n leaves sector t_n = [(p-1) - (n-1)q]
/// of the first handle and crosses sector u_n = [nq] of the second.
ModularData derive_counts_by_trace(const TtkParams& params);

/// Q_i q = kbar_i p + n_i whenever Q_i = [n_i q^-1], and Q' q = kbar' p + r.
bool check_identity_lemma(const ModularData& data, const TtkParams& params);

/// Pretty JSON object with every field.
std::string to_json_text(const ModularData& data);

}  // namespace ttk
