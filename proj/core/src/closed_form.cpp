#include "ttk/closed_form.hpp"

namespace ttk {

namespace {

// 1 - (1 - t^rs) sum_{i=1}^{last} t^(base_i + (i-1) rs) - t^tail
LaurentPoly twisted_sum(std::int64_t rs, std::size_t last, auto base, Exponent tail) {
  std::vector<LaurentPoly::Term> sum;
  sum.reserve(last);
  for (std::size_t i = 1; i <= last; ++i)
    sum.push_back({base(i) + static_cast<Exponent>(i - 1) * rs, Integer(1)});
  const LaurentPoly terms = LaurentPoly::from_terms(std::move(sum));
  return LaurentPoly::constant(1) - one_minus_t_pow(rs) * terms - LaurentPoly::t_pow(tail);
}

}  // namespace

LaurentPoly build_X(const TtkParams& params, const ModularData& data) {
  const std::int64_t p = params.p();
  const auto r = static_cast<std::size_t>(params.r());
  return twisted_sum(params.rs(), r - 1, [&](std::size_t i) { return data.cumulative(i) * p; },
                     p * params.q() + static_cast<Exponent>(r - 1) * params.rs());
}

LaurentPoly build_Xtilde(const TtkParams& params, const ModularData& data) {
  const std::int64_t p = params.p();
  const auto m = static_cast<std::size_t>(data.return_index);
  if (m == 0) return one_minus_t_pow(data.return_cumulative * p);
  return twisted_sum(params.rs(), m, [&](std::size_t i) { return data.cumulative(i) * p; },
                     data.return_cumulative * p + static_cast<Exponent>(m) * params.rs());
}

LaurentPoly build_Y(const TtkParams& params, const ModularData& data) {
  const std::int64_t q = params.q();
  const auto r = static_cast<std::size_t>(params.r());
  return twisted_sum(params.rs(), r - 1, [&](std::size_t i) { return data.marks[i] * q; },
                     params.p() * q + static_cast<Exponent>(r - 1) * params.rs());
}

LaurentPoly build_Ytilde(const TtkParams& params, const ModularData& data) {
  const std::int64_t q = params.q();
  const auto m = static_cast<std::size_t>(data.return_index);
  if (m == 0) return one_minus_t_pow(data.return_mark * q);
  return twisted_sum(params.rs(), m, [&](std::size_t i) { return data.marks[i] * q; },
                     data.return_mark * q + static_cast<Exponent>(m) * params.rs());
}

LaurentPoly closed_form_bracket(const TtkParams& params, const ModularData& data) {
  return build_Xtilde(params, data) * build_Y(params, data) -
         build_X(params, data) * build_Ytilde(params, data);
}

LaurentPoly alexander_closed_form_raw(const TtkParams& params) {
  const ModularData data = compute_modular_data(params);
  const LaurentPoly numerator = one_minus_t_pow(1) * closed_form_bracket(params, data);
  const LaurentPoly denominator =
      one_minus_t_pow(params.p()) * one_minus_t_pow(params.q()) * one_minus_t_pow(params.r());
  return exact_div(numerator, denominator);
}

LaurentPoly alexander_closed_form(const TtkParams& params) {
  return normalize(alexander_closed_form_raw(params));
}

LaurentPoly torus_knot_polynomial(std::int64_t p, std::int64_t q) {
  return normalize(exact_div(one_minus_t_pow(1) * one_minus_t_pow(p * q),
                             one_minus_t_pow(p) * one_minus_t_pow(q)));
}

}  // namespace ttk
