#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "ttk/table.hpp"

using namespace ttk;

TEST_CASE("enumeration") {
  const auto tiny = enumerate_ttk(3, 1, 1);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0] == validate(3, 1, 2, 1));
  CHECK(tiny[1] == validate(3, 2, 2, 1));
  CHECK(expected_row_count(20, 1, 5) == 7450);
  CHECK(enumerate_ttk(9, -2, 3).size() == static_cast<std::size_t>(expected_row_count(9, -2, 3)));
  const auto g = enumerate_ttk(8, -1, 1);
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("tabulate keeps input order and matches make_record") {
  const auto params = enumerate_ttk(8, -2, 2);
  TableOptions opts;
  opts.threads = 3;
  opts.verify_fraction = 0.2;
  const TableResult res = tabulate(params, opts);
  REQUIRE(res.records.size() == params.size());
  CHECK(res.failures.empty());
  CHECK(res.verified > 0);
  for (std::size_t i = 0; i < params.size(); i += 7) CHECK(res.records[i] == make_record(params[i]));
  const TableResult again = tabulate(params, opts);
  CHECK(again.records == res.records);
  CHECK(again.verified == res.verified);
}

TEST_CASE("records") {
  const KnotRecord r = make_record(validate(7, 4, 3, 2));
  CHECK(r.degree == 30);
  CHECK(r.genus_exact);
  CHECK(r.genus_lower == 15);
  const KnotRecord n = make_record(validate(7, 4, 3, -3));
  CHECK(n.genus_lower == 2);
  CHECK_FALSE(n.genus_upper.has_value());
}

TEST_CASE("collision classes") {
  const auto params = enumerate_ttk(6, -5, -1);
  const auto classes = collision_classes(tabulate(params).records);
  bool found = false;
  for (const auto& c : classes) {
    CHECK(c.size() >= 2);
    const bool a = std::find(c.begin(), c.end(), validate(4, 3, 2, -5)) != c.end();
    const bool b = std::find(c.begin(), c.end(), validate(6, 5, 4, -2)) != c.end();
    if (a && b) found = true;
  }
  CHECK(found);
}

TEST_CASE("CSV and JSON round-trip") {
  const auto records = tabulate(enumerate_ttk(7, -3, 3)).records;
  std::stringstream csv;
  write_csv(csv, records);
  std::string header;
  std::getline(std::stringstream(csv.str()), header);
  CHECK(header == kCsvHeader);
  CHECK(read_csv(csv) == records);

  std::stringstream js;
  write_json(js, records);
  CHECK(read_json(js) == records);

  std::stringstream bad("p,q\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad), std::invalid_argument);
}
