#include "ttk/params.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "json.hpp"

namespace ttk {

namespace {

std::int64_t residue(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::vector<std::int64_t> prefix_sums(const std::vector<std::int64_t>& counts, std::size_t n) {
  std::vector<std::int64_t> out;
  out.reserve(n);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += counts[i];
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::string_view to_string(InvalidReason reason) noexcept {
  switch (reason) {
    case InvalidReason::NotCoprime:
      return "NotCoprime";
    case InvalidReason::OrderViolation:
      return "OrderViolation";
    case InvalidReason::RangeViolation:
      return "RangeViolation";
  }
  return "Unknown";
}

TtkParams validate(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  if (!(p > q && q > 0))
    throw InvalidParams(InvalidReason::OrderViolation, "need p > q > 0");
  if (!(1 < r && r < p))
    throw InvalidParams(InvalidReason::RangeViolation, "need 1 < r < p");
  if (std::gcd(p, q) != 1)
    throw InvalidParams(InvalidReason::NotCoprime, "need gcd(p, q) = 1");
  return TtkParams(p, q, r, s);
}

std::string to_string(const TtkParams& params) {
  return "T(" + std::to_string(params.p()) + "," + std::to_string(params.q()) + ";" +
         std::to_string(params.r()) + "," + std::to_string(params.s()) + ")";
}

std::int64_t ModularData::cumulative(std::size_t i) const {
  if (i == 0) return 0;
  if (i == counts.size()) return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  return cumulative_counts.at(i - 1);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // Extended Euclid on (a mod m, m).
  std::int64_t old_r = residue(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: arguments are not coprime");
  return residue(old_s, m);
}

ModularData compute_modular_data(const TtkParams& params) {
  const std::int64_t p = params.p();
  const std::int64_t q = params.q();
  const auto r = static_cast<std::size_t>(params.r());

  ModularData d;
  d.q_inverse = p == 1 ? 0 : inverse_mod(q, p);

  d.marks.reserve(r);
  for (std::size_t n = 0; n < r; ++n) d.marks.push_back(residue(static_cast<std::int64_t>(n) * d.q_inverse, p));
  std::sort(d.marks.begin(), d.marks.end());

  d.gaps.reserve(r);
  for (std::size_t i = 1; i < r; ++i) d.gaps.push_back(d.marks[i] - d.marks[i - 1]);
  d.gaps.push_back(p - d.marks[r - 1]);

  std::vector<bool> in_r(static_cast<std::size_t>(p), false);
  for (std::int64_t n = 1; n <= q; ++n) in_r[static_cast<std::size_t>(residue(-n * d.q_inverse, p))] = true;
  auto count_between = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t c = 0;
    for (std::int64_t l = lo; l < hi; ++l) c += in_r[static_cast<std::size_t>(l)] ? 1 : 0;
    return c;
  };

  d.counts.reserve(r);
  for (std::size_t i = 1; i <= r; ++i) d.counts.push_back(count_between(d.marks[i - 1], d.mark(i, p)));
  d.cumulative_counts = prefix_sums(d.counts, r - 1);

  d.return_mark = residue(params.r() * d.q_inverse, p);
  const auto above = std::upper_bound(d.marks.begin(), d.marks.end(), d.return_mark);
  d.return_index = static_cast<std::int64_t>(above - d.marks.begin()) - 1;
  const auto m = static_cast<std::size_t>(d.return_index);
  d.return_gap = d.return_mark - d.marks[m];
  d.return_count = count_between(d.marks[m], d.return_mark);
  d.return_cumulative = d.cumulative(m) + d.return_count;
  return d;
}

ModularData derive_counts_by_trace(const TtkParams& params) {
  const std::int64_t p = params.p();
  const std::int64_t q = params.q();
  const std::int64_t r = params.r();

  ModularData d;
  d.marks.push_back(0);
  std::int64_t pending_x = 0;  // x letters since the last y^s
  std::int64_t pending_z = 0;  // z letters since the last w
  std::int64_t y_seen = 0;

  for (std::int64_t n = 1; n <= p; ++n) {
    const std::int64_t sector_a = residue((p - 1) - (n - 1) * q, p);
    const std::int64_t sector_l = residue(n * q, p);

    // xi_n contributes x when sector_a < q, then y^s when sector_l < r.
    // eta_n contributes z^-1, then w^-1 when sector_l < r.
    if (sector_a < q) ++pending_x;
    ++pending_z;

    if (sector_l == 1) d.q_inverse = n;
    if (sector_l == r) {
      d.return_mark = n;
      d.return_index = y_seen;
      d.return_count = pending_x;
      d.return_gap = pending_z;
    }
    if (sector_l < r) {
      d.counts.push_back(pending_x);
      d.gaps.push_back(pending_z);
      if (n < p) d.marks.push_back(n);
      pending_x = 0;
      pending_z = 0;
      ++y_seen;
    }
  }

  d.cumulative_counts = prefix_sums(d.counts, static_cast<std::size_t>(r - 1));
  d.return_cumulative = d.cumulative(static_cast<std::size_t>(d.return_index)) + d.return_count;
  return d;
}

bool check_identity_lemma(const ModularData& data, const TtkParams& params) {
  const std::int64_t p = params.p();
  const std::int64_t q = params.q();
  for (std::size_t i = 0; i < data.marks.size(); ++i) {
    const std::int64_t mark = data.marks[i];
    const std::int64_t n = residue(mark * q, p);  // Q_i = [n q^-1]
    if (mark * q != data.cumulative(i) * p + n) return false;
  }
  return data.return_mark * q == data.return_cumulative * p + params.r();
}

std::string to_json_text(const ModularData& data) {
  nlohmann::json j = {
      {"q_inv", data.q_inverse},
      {"Q", data.marks},
      {"d", data.gaps},
      {"k", data.counts},
      {"kbar", data.cumulative_counts},
      {"Qp", data.return_mark},
      {"m", data.return_index},
      {"dp", data.return_gap},
      {"kp", data.return_count},
      {"kbarp", data.return_cumulative},
  };
  return j.dump(2);
}

}  // namespace ttk
