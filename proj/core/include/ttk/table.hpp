#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttk/invariants.hpp"
#include "ttk/laurent.hpp"
#include "ttk/params.hpp"

namespace ttk {

/// One row of a knot table.
struct KnotRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  LaurentPoly delta;  // canonical
  std::int64_t degree = 0;
  std::optional<std::int64_t> genus_lower;
  std::optional<std::int64_t> genus_upper;
  bool genus_exact = false;
  bool lspace_pass = false;

  bool operator==(const KnotRecord&) const = default;
};

KnotRecord make_record(const TtkParams& params);

/// All valid (p, q, r, s) with 3 <= p <= pmax, 0 < q < p coprime to p,
/// 1 < r < p and smin <= s <= smax, in lexicographic order.
std::vector<TtkParams> enumerate_ttk(std::int64_t pmax, std::int64_t smin, std::int64_t smax);

/// Number of rows enumerate_ttk produces, counted without enumerating:
/// (smax - smin + 1) * sum_{p=3}^{pmax} phi(p) (p - 2).
std::int64_t expected_row_count(std::int64_t pmax, std::int64_t smin, std::int64_t smax);

struct TableOptions {
  unsigned threads = 0;           // 0: hardware concurrency
  double verify_fraction = 0.0;   // share of rows cross-checked with verify_knot
  std::uint64_t seed = 0x7474'6b5f'7461'626cULL;
};

struct TableResult {
  std::vector<KnotRecord> records;  // same order as the input parameters
  std::size_t verified = 0;
  std::vector<std::string> failures;  // "T(p,q;r,s): reason"
};

/// Evaluates every parameter tuple on a worker pool. Output order matches
/// input order regardless of scheduling.
TableResult tabulate(std::span<const TtkParams> params, const TableOptions& options = {});

using CollisionClass = std::vector<TtkParams>;

/// Groups of two or more knots sharing a canonical polynomial, each group in
/// input order and the groups ordered by their first member.
std::vector<CollisionClass> collision_classes(std::span<const KnotRecord> records);

inline constexpr const char* kCsvHeader =
    "p,q,r,s,delta,degree,genus_lower,genus_upper,genus_exact,lspace_pass";

void write_csv(std::ostream& os, std::span<const KnotRecord> records);
/// Throws std::invalid_argument on a malformed table.
std::vector<KnotRecord> read_csv(std::istream& is);

/// {"knots": [...], "classes": [[[p,q,r,s], ...], ...]}; "classes" only when given.
void write_json(std::ostream& os, std::span<const KnotRecord> records,
                const std::vector<CollisionClass>* classes = nullptr);
std::vector<KnotRecord> read_json(std::istream& is);

/// class,p,q,r,s rows, class numbered from 1.
void write_classes_csv(std::ostream& os, const std::vector<CollisionClass>& classes);

}  // namespace ttk
