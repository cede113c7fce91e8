#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fshape/catalog.hpp"
#include "fshape/moonshine.hpp"

using namespace fshape;

namespace {

// prod_{k>=1} (1 - q^k) by the pentagonal number theorem.
std::vector<BigInt> euler_series(int last) {
  std::vector<BigInt> out(last + 1, BigInt(0));
  for (long long j = 0;; ++j) {
    const long long head = j * (3 * j - 1) / 2;
    const long long tail = j * (3 * j + 1) / 2;
    if (head > last && tail > last) break;
    const BigInt sign = (j % 2 == 0) ? 1 : -1;
    if (head <= last) out[head] += sign;
    if (j > 0 && tail <= last) out[tail] += sign;
  }
  return out;
}

std::vector<BigInt> stretch(const std::vector<BigInt>& a, int m) {
  std::vector<BigInt> out(a.size(), BigInt(0));
  for (size_t i = 0; m * i < out.size(); ++i) out[m * i] = a[i];
  return out;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size(), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("rank 24 root system combinations with a common Coxeter number") {
  const std::vector<ShapeCombo> combos = niemeier_combinations();
  CHECK(combos.size() == 23);

  std::set<std::string> names;
  for (const ShapeCombo& combo : combos) {
    names.insert(combo.name);
    CHECK(combo.shape.degree() == 24);
    CHECK(combo.shape.order() == combo.level);
    CHECK(combo.shape.is_self_dual());
  }
  CHECK(names.size() == 23);
  const std::set<std::string> expected = {
      "A1^24",     "A2^12",   "A3^8",  "A4^6",     "A5^4 D4", "D4^6",
      "A6^4",      "A7^2 D5^2", "A8^3", "A9^2 D6",  "D6^4",    "A11 D7 E6",
      "E6^4",      "A12^2",   "D8^3",  "A15 D9",   "A17 E7",  "D10 E7^2",
      "D12^2",     "A24",     "D16 E8", "E8^3",    "D24"};
  CHECK(names == expected);
}

TEST_CASE("degree 24 combinations of simply elliptic shapes") {
  const std::vector<ShapeCombo> combos = elliptic_combinations();
  REQUIRE(combos.size() == 2);
  CHECK(combos[0].name == "D~5^4");
  CHECK(combos[0].level == 2);
  CHECK(combos[0].shape == FrameShape::parse("2^16/1^8"));
  CHECK(combos[1].name == "E~6^3");
  CHECK(combos[1].level == 3);
  CHECK(combos[1].shape == FrameShape::parse("3^9/1^3"));
}

TEST_CASE("all five constructions together produce 118 realizations") {
  const std::vector<MoonshineEntry> entries = moonshine_entries();
  CHECK(entries.size() == 118);
  std::map<std::string, int> per_construction;
  for (const MoonshineEntry& entry : entries) {
    ++per_construction[entry.construction];
    CHECK(entry.shape.degree() == 24);
    CHECK(entry.shape.is_self_dual());
  }
  CHECK(per_construction["a"] == 23);
  CHECK(per_construction["b"] == 20);
  CHECK(per_construction["c"] == 2);
  CHECK(per_construction["d"] == 57);
  CHECK(per_construction["e"] == 16);
}

TEST_CASE("correspondence table round trip") {
  const std::vector<Table5Row> rows = parse_table5(table5_text());
  REQUIRE(rows.size() == 39);
  CHECK(rows[0].label == "1A");
  CHECK(rows[0].shape == FrameShape::parse("2^24/1^24"));
  CHECK(rows[0].realizers ==
        std::vector<std::string>{"a:A1^24", "c:D~5^4", "d:{5;}"});

  int realizer_count = 0;
  std::set<std::string> labels;
  for (const Table5Row& row : rows) {
    labels.insert(row.label);
    realizer_count += static_cast<int>(row.realizers.size());
    CHECK(row.shape.degree() == 24);
    CHECK(row.shape.is_self_dual());
  }
  CHECK(labels.size() == 39);
  CHECK(realizer_count == 118);
}

TEST_CASE("every correspondence row is reproduced exactly") {
  const std::vector<Table5Check> report = verify_table5();
  CHECK(report.size() == 39);  // no unmatched entries
  for (const Table5Check& check : report) {
    INFO(check.line);
    CHECK(check.pass);
  }
}

TEST_CASE("pinned realizations") {
  const Catalog& catalog = Catalog::instance();
  const auto pi_pi = [](const FrameShape& pi) { return pi * pi.saito_dual(); };

  const CatalogRecord* e12 = catalog.find_by_name("E12");
  REQUIRE(e12 != nullptr);
  CHECK(pi_pi(moonshine_symbol_of(*e12)) ==
        FrameShape::parse("2^2 3^2 7^2 42^2/1^2 6^2 14^2 21^2"));

  const CatalogRecord* w24 = catalog.find_by_name("W24");
  REQUIRE(w24 != nullptr);
  CHECK(moonshine_symbol_of(*w24) == FrameShape::parse("2 9 36/1 4 18"));

  const CatalogRecord* i2 = catalog.find_by_name("I1,0^2");
  REQUIRE(i2 != nullptr);
  CHECK(moonshine_symbol_of(*i2) == FrameShape::parse("5^2 10^2/1^2 2^2"));
}

TEST_CASE("eta expansions against independent series") {
  // The plain Euler product, straight from the pentagonal recurrence.
  const std::vector<BigInt> euler = euler_series(50);
  CHECK(eta_expansion(FrameShape::parse("1"), 50) == euler);

  // A mixed shape, assembled by stretching and convolving the oracle.
  {
    const std::vector<BigInt> e2 = stretch(euler, 2);
    const std::vector<BigInt> direct = eta_expansion(FrameShape::parse("2^2/1"), 50);
    // direct * euler == e2^2
    CHECK(convolve(direct, euler) == convolve(e2, e2));
  }

  // The full rank-24 power: 1, -24, 252, -1472, 4830, ...
  {
    const std::vector<BigInt> tau = eta_expansion(FrameShape::parse("1^24"), 6);
    CHECK(tau[0] == 1);
    CHECK(tau[1] == -24);
    CHECK(tau[2] == 252);
    CHECK(tau[3] == -1472);
    CHECK(tau[4] == 4830);
    CHECK(tau[5] == -6048);
    CHECK(tau[6] == -16744);
  }

  CHECK(eta_offset(FrameShape::parse("1^24")) == 1);
  CHECK(eta_offset(FrameShape::parse("2^24/1^24")) == 1);
  CHECK(eta_offset(FrameShape::parse("2 9 36/1 4 18")) == 1);
  CHECK_THROWS_WITH(eta_offset(FrameShape::parse("2/1")),
                    "eta exponent is not integral");

  // Every correspondence shape has weight one and integral expansion.
  for (const Table5Row& row : parse_table5(table5_text())) {
    CHECK(eta_offset(row.shape) == 1);
    const std::vector<BigInt> series = eta_expansion(row.shape, 5);
    CHECK(series[0] == 1);
  }
}
