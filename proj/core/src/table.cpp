#include "ttk/table.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/verify.hpp"

namespace ttk {

namespace {

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<std::int64_t> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoll(s);
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("expected true/false, got \"" + s + "\"");
}

nlohmann::json optional_json(const std::optional<std::int64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<std::int64_t> optional_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

struct PolyLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& x, const auto& y) { return x.exp != y.exp ? x.exp < y.exp : x.coeff < y.coeff; });
  }
};

}  // namespace

KnotRecord make_record(const TtkParams& params) {
  KnotRecord rec;
  rec.p = params.p();
  rec.q = params.q();
  rec.r = params.r();
  rec.s = params.s();
  rec.delta = alexander_closed_form(params);
  rec.degree = degree_span(rec.delta);
  const GenusBounds genus = genus_bounds(params, rec.delta);
  rec.genus_lower = genus.lower;
  rec.genus_upper = genus.upper;
  rec.genus_exact = genus.exact;
  rec.lspace_pass = lspace_coefficient_test(rec.delta);
  return rec;
}

std::vector<TtkParams> enumerate_ttk(std::int64_t pmax, std::int64_t smin, std::int64_t smax) {
  std::vector<TtkParams> out;
  for (std::int64_t p = 3; p <= pmax; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t r = 2; r < p; ++r)
        for (std::int64_t s = smin; s <= smax; ++s) out.push_back(validate(p, q, r, s));
    }
  return out;
}

std::int64_t expected_row_count(std::int64_t pmax, std::int64_t smin, std::int64_t smax) {
  if (smax < smin) return 0;
  std::int64_t sum = 0;
  for (std::int64_t p = 3; p <= pmax; ++p) sum += euler_phi(p) * (p - 2);
  return (smax - smin + 1) * sum;
}

TableResult tabulate(std::span<const TtkParams> params, const TableOptions& options) {
  TableResult result;
  result.records.resize(params.size());

  std::vector<char> sampled(params.size(), 0);
  if (options.verify_fraction > 0.0) {
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution pick(std::min(options.verify_fraction, 1.0));
    for (auto& flag : sampled) flag = pick(rng) ? 1 : 0;
  }
  std::vector<std::string> failure_slots(params.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < params.size(); i = next.fetch_add(1)) {
      result.records[i] = make_record(params[i]);
      if (!sampled[i]) continue;
      const VerificationReport rep = verify_knot(params[i]);
      if (rep.closed_form != result.records[i].delta)
        failure_slots[i] = "record polynomial differs from verification run";
      else
        failure_slots[i] = rep.first_mismatch();
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(params.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!sampled[i]) continue;
    ++result.verified;
    if (!failure_slots[i].empty())
      result.failures.push_back(to_string(params[i]) + ": " + failure_slots[i]);
  }
  return result;
}

std::vector<CollisionClass> collision_classes(std::span<const KnotRecord> records) {
  std::map<LaurentPoly, std::size_t, PolyLess> index;
  std::vector<CollisionClass> groups;
  for (const auto& rec : records) {
    auto [it, inserted] = index.try_emplace(rec.delta, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(validate(rec.p, rec.q, rec.r, rec.s));
  }
  std::erase_if(groups, [](const CollisionClass& c) { return c.size() < 2; });
  return groups;
}

void write_csv(std::ostream& os, std::span<const KnotRecord> records) {
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    os << rec.p << ',' << rec.q << ',' << rec.r << ',' << rec.s << ',' << to_string(rec.delta) << ','
       << rec.degree << ',';
    if (rec.genus_lower) os << *rec.genus_lower;
    os << ',';
    if (rec.genus_upper) os << *rec.genus_upper;
    os << ',' << (rec.genus_exact ? "true" : "false") << ',' << (rec.lspace_pass ? "true" : "false")
       << '\n';
  }
}

std::vector<KnotRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::invalid_argument("knot table CSV: missing or unexpected header");
  std::vector<KnotRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw std::invalid_argument("knot table CSV: expected 10 fields in \"" + line + "\"");
    KnotRecord rec;
    rec.p = std::stoll(f[0]);
    rec.q = std::stoll(f[1]);
    rec.r = std::stoll(f[2]);
    rec.s = std::stoll(f[3]);
    rec.delta = parse_laurent(f[4]);
    rec.degree = std::stoll(f[5]);
    rec.genus_lower = parse_optional(f[6]);
    rec.genus_upper = parse_optional(f[7]);
    rec.genus_exact = parse_bool(f[8]);
    rec.lspace_pass = parse_bool(f[9]);
    out.push_back(std::move(rec));
  }
  return out;
}

void write_json(std::ostream& os, std::span<const KnotRecord> records,
                const std::vector<CollisionClass>* classes) {
  nlohmann::json knots = nlohmann::json::array();
  for (const auto& rec : records) {
    knots.push_back({
        {"p", rec.p},
        {"q", rec.q},
        {"r", rec.r},
        {"s", rec.s},
        {"delta", nlohmann::json::parse(to_json_text(rec.delta))},
        {"degree", rec.degree},
        {"genus_lower", optional_json(rec.genus_lower)},
        {"genus_upper", optional_json(rec.genus_upper)},
        {"genus_exact", rec.genus_exact},
        {"lspace_pass", rec.lspace_pass},
    });
  }
  nlohmann::json doc = {{"knots", std::move(knots)}};
  if (classes != nullptr) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& c : *classes) {
      nlohmann::json members = nlohmann::json::array();
      for (const auto& k : c) members.push_back({k.p(), k.q(), k.r(), k.s()});
      groups.push_back(std::move(members));
    }
    doc["classes"] = std::move(groups);
  }
  os << doc.dump() << '\n';
}

std::vector<KnotRecord> read_json(std::istream& is) {
  const auto doc = nlohmann::json::parse(is);
  std::vector<KnotRecord> out;
  for (const auto& k : doc.at("knots")) {
    KnotRecord rec;
    rec.p = k.at("p").get<std::int64_t>();
    rec.q = k.at("q").get<std::int64_t>();
    rec.r = k.at("r").get<std::int64_t>();
    rec.s = k.at("s").get<std::int64_t>();
    rec.delta = laurent_from_json_text(k.at("delta").dump());
    rec.degree = k.at("degree").get<std::int64_t>();
    rec.genus_lower = optional_from_json(k.at("genus_lower"));
    rec.genus_upper = optional_from_json(k.at("genus_upper"));
    rec.genus_exact = k.at("genus_exact").get<bool>();
    rec.lspace_pass = k.at("lspace_pass").get<bool>();
    out.push_back(std::move(rec));
  }
  return out;
}

void write_classes_csv(std::ostream& os, const std::vector<CollisionClass>& classes) {
  os << "class,p,q,r,s\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& k : classes[i])
      os << (i + 1) << ',' << k.p() << ',' << k.q() << ',' << k.r() << ',' << k.s() << '\n';
}

}  // namespace ttk
