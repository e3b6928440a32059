#include "ttk/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

#include "ttk/closed_form.hpp"

namespace ttk {

std::string_view to_string(DegreeRegime regime) noexcept {
  switch (regime) {
    case DegreeRegime::PositiveS:
      return "PositiveS";
    case DegreeRegime::SmallNegativeS:
      return "SmallNegativeS";
    case DegreeRegime::LargeNegativeS_m0:
      return "LargeNegativeS_m0";
    case DegreeRegime::LargeNegativeS_mMax:
      return "LargeNegativeS_mMax";
    case DegreeRegime::LargeNegativeS_mMid:
      return "LargeNegativeS_mMid";
    case DegreeRegime::NotCovered:
      return "NotCovered";
  }
  return "NotCovered";
}

DegreePrediction predicted_degree(const TtkParams& params, const ModularData& data) {
  const std::int64_t p = params.p();
  const std::int64_t q = params.q();
  const std::int64_t r = params.r();
  const std::int64_t s = params.s();
  const std::int64_t rs = params.rs();
  const std::int64_t torus = (p - 1) * (q - 1);

  if (s > 0) return {DegreeRegime::PositiveS, torus + (r - 1) * rs};
  if (s == 0) return {};
  if (std::llabs(rs) < q) return {DegreeRegime::SmallNegativeS, torus + (r - 1) * rs};

  for (std::size_t i = 1; i < static_cast<std::size_t>(r); ++i) {
    if (!(std::llabs(rs) > data.gap(i) * q && std::llabs(rs) > data.count(i) * p)) return {};
  }

  const std::int64_t m = data.return_index;
  const auto last = static_cast<std::size_t>(r - 1);
  const std::int64_t kbar_last = data.cumulative(last);
  const std::int64_t q1 = data.marks[1];
  const std::int64_t q_prime = data.return_mark;

  if (m == 0) {
    return {DegreeRegime::LargeNegativeS_m0,
            (data.count(1) - kbar_last - 1) * p + (q_prime - 1) * q - (r - 1) * (rs + 1)};
  }
  if (m == r - 1) {
    return {DegreeRegime::LargeNegativeS_mMax,
            torus + (q1 - q_prime - data.marks[last]) * q - (r - 1) * rs};
  }
  const auto mi = static_cast<std::size_t>(m);
  return {DegreeRegime::LargeNegativeS_mMid,
          (data.cumulative(mi + 1) - kbar_last - 1) * p + (q1 - data.marks[mi] - 1) * q -
              (r - 1) * (rs + 1)};
}

namespace {

GenusBounds theorem_bounds(const TtkParams& params) {
  const std::int64_t torus = (params.p() - 1) * (params.q() - 1);
  const std::int64_t twist = (params.r() - 1) * params.rs();
  const std::int64_t abs_twist = (params.r() - 1) * params.r() * std::llabs(params.s());
  GenusBounds g;
  if (params.s() > 0) {
    g.lower = g.upper = (torus + twist) / 2;
    g.exact = true;
  } else if (params.r() * std::llabs(params.s()) < params.q()) {
    g.lower = (torus + twist) / 2;
    g.upper = (torus + abs_twist) / 2;
  }
  return g;
}

}  // namespace

GenusBounds genus_bounds(const TtkParams& params) {
  GenusBounds g = theorem_bounds(params);
  if (g.lower) return g;
  return genus_bounds(params, alexander_closed_form(params));
}

GenusBounds genus_bounds(const TtkParams& params, const LaurentPoly& delta) {
  GenusBounds g = theorem_bounds(params);
  if (!g.lower) g.lower = degree_span(delta) / 2;
  return g;
}

bool lspace_coefficient_test(const LaurentPoly& delta) {
  for (const auto& t : delta.terms())
    if (abs(t.coeff) > 1) return false;
  return true;
}

bool lspace_alternating_test(const LaurentPoly& delta) {
  if (delta.is_zero() || !lspace_coefficient_test(delta)) return false;
  const auto terms = delta.terms();
  if (terms.front().coeff != 1 || terms.back().coeff != 1) return false;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].coeff == terms[i - 1].coeff) return false;
  return true;
}

LspaceWitness lspace_family_witness(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 2) throw std::invalid_argument("lspace_family_witness needs n >= 0 and s >= 2");
  const TtkParams params = validate(9 + 2 * n, 7 + 2 * n, 3, s);
  const LaurentPoly raw = alexander_closed_form_raw(params);
  LspaceWitness w;
  w.exponent = 31 + 15 * n + 2 * n * n;
  w.shifted_exponent = w.exponent - raw.min_exponent();
  w.coefficient = raw.coefficient(w.exponent);
  return w;
}

}  // namespace ttk
