#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ttk/laurent.hpp"
#include "ttk/params.hpp"

namespace ttk {

enum class DegreeRegime {
  PositiveS,
  SmallNegativeS,
  LargeNegativeS_m0,
  LargeNegativeS_mMax,
  LargeNegativeS_mMid,
  NotCovered,
};

std::string_view to_string(DegreeRegime regime) noexcept;

struct DegreePrediction {
  DegreeRegime regime = DegreeRegime::NotCovered;
  std::optional<std::int64_t> value;  // present iff regime != NotCovered
};

/*
 * Degree of the Alexander polynomial predicted from (p, q, r, s) alone.
 *
 *   s > 0                          (p-1)(q-1) + (r-1) rs
 *   s < 0, |rs| < q                (p-1)(q-1) + (r-1) rs
 *   s < 0, |rs| > d_i q and |rs| > k_i p for i = 1..r-1:
 *     m = 0        (k_1 - kbar_{r-1} - 1) p + (Q' - 1) q - (r-1)(rs+1)
 *     m = r-1      (p-1)(q-1) + (Q_1 - Q' - Q_{r-1}) q - (r-1) rs
 *     otherwise    (kbar_{m+1} - kbar_{r-1} - 1) p + (Q_1 - Q_m - 1) q - (r-1)(rs+1)
 *
 * Everything else (including s = 0) is NotCovered.
 */
DegreePrediction predicted_degree(const TtkParams& params, const ModularData& data);

struct GenusBounds {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  bool exact = false;
};

/// s > 0: exact ((p-1)(q-1) + (r-1) rs) / 2.
/// r|s| < q (s <= 0): [((p-1)(q-1) + (r-1) rs) / 2, ((p-1)(q-1) + (r-1) r|s|) / 2].
/// Otherwise the Seifert bound degree_span(Delta) / 2 from below only.
GenusBounds genus_bounds(const TtkParams& params);

/// Variant that reuses an already computed Alexander polynomial for the
/// fallback case.
GenusBounds genus_bounds(const TtkParams& params, const LaurentPoly& delta);

/// True iff every coefficient lies in {-1, 0, 1}. False means the knot is not
/// an L-space knot (and in particular admits no lens space surgery).
bool lspace_coefficient_test(const LaurentPoly& delta);

/// The stronger L-space knot shape: nonzero coefficients are +-1, alternate in
/// sign, and the extreme ones are +1. Informational only.
bool lspace_alternating_test(const LaurentPoly& delta);

struct LspaceWitness {
  std::int64_t exponent;  // 31 + 15n + 2n^2, in the closed formula's exponent frame
  std::int64_t shifted_exponent;  // the same term after shifting the lowest exponent to 0
  Integer coefficient;
};

/// Coefficient of t^(31 + 15n + 2n^2) in Delta of T(9+2n, 7+2n; 3, s).
/// Requires n >= 0 and s >= 2 (std::invalid_argument otherwise).
LspaceWitness lspace_family_witness(std::int64_t n, std::int64_t s);

}  // namespace ttk
