#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fshape/catalog.hpp"
#include "fshape/monodromy.hpp"

using namespace fshape;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const CatalogRecord& record(const std::string& name) {
  const CatalogRecord* rec = Catalog::instance().find_by_name(name);
  REQUIRE(rec != nullptr);
  return *rec;
}

}  // namespace

TEST_CASE("embedded datasets match the files on disk") {
  CHECK(catalog_text() == slurp(std::string(FSHAPE_DATA_DIR) + "/catalog.txt"));
  CHECK(table5_text() == slurp(std::string(FSHAPE_DATA_DIR) + "/table5.txt"));
}

TEST_CASE("dataset checksums reject tampering") {
  CHECK(checked_dataset_lines(catalog_text()).size() == 86);
  CHECK(checked_dataset_lines(table5_text()).size() == 39);

  std::string flipped = catalog_text();
  flipped[flipped.find("E12")] = 'F';
  CHECK_THROWS_WITH(checked_dataset_lines(flipped),
                    "dataset corruption (checksum)");

  std::string truncated = catalog_text();
  truncated.replace(truncated.find("records=86"), 10, "records=85");
  CHECK_THROWS_WITH(checked_dataset_lines(truncated),
                    "dataset corruption (record count)");

  CHECK_THROWS_WITH(checked_dataset_lines("no header\nx=1\n"),
                    "dataset corruption (missing header)");
}

TEST_CASE("catalog shape and lookups") {
  const auto& records = Catalog::instance().records();
  REQUIRE(records.size() == 86);

  int per_table[5] = {0, 0, 0, 0, 0};
  int partners = 0, flagged_b = 0, flagged_e = 0, without_rule = 0;
  for (const CatalogRecord& rec : records) {
    REQUIRE(rec.table >= 1);
    REQUIRE(rec.table <= 4);
    ++per_table[rec.table];
    if (rec.is_partner) ++partners;
    if (rec.flag_b) ++flagged_b;
    if (rec.flag_e) ++flagged_e;
    if (!rec.has_rule && !rec.is_partner) ++without_rule;
  }
  CHECK(per_table[1] == 33);
  CHECK(per_table[2] == 28);
  CHECK(per_table[3] == 12);
  CHECK(per_table[4] == 13);
  CHECK(partners == 4);
  CHECK(flagged_b == 20);
  CHECK(flagged_e == 16);
  CHECK(without_rule == 1);  // the one signature no reduction reaches

  CHECK(record("E12").mu == 12);
  CHECK(record("E12").degrees == std::vector<int>{42});
  CHECK(record("{2;}").weights == std::vector<int>{1, 1, 3});
  CHECK(record("I1,0^2").exponent == 3);
  CHECK(record("{0;2,2,4,8}").flag_b);
  CHECK(Catalog::instance().find_by_name("nonsense") == nullptr);

  // Identical signatures occur across tables at different exponents.
  const Signature twin = Signature::parse("0;2,5,7");
  CHECK(Catalog::instance().find(twin).size() == 2);
  CHECK(Catalog::instance().find(twin, "", 1)->name == "L10");
  CHECK(Catalog::instance().find(twin, "", 11)->name == "NF(4)^1");

  // Hyperelliptic pairs share the signature at the same exponent.
  const Signature g5 = Signature::parse("5;");
  CHECK(Catalog::instance().find(g5).size() == 2);
  CHECK(Catalog::instance().find(g5, "h", 1)->is_partner);
  CHECK(Catalog::instance().find(g5, "nh", 1)->has_rule);
}

TEST_CASE("index-one rows realize the classification exactly") {
  std::set<std::string> expected;
  for (const Signature& sig : fuchsian_icis_signatures()) {
    CHECK(is_hyperbolic(sig));
    expected.insert(sig.str());
  }
  CHECK(expected.size() == 57);

  std::set<std::string> catalogued;
  for (const CatalogRecord& rec : Catalog::instance().records())
    if (rec.table <= 2) catalogued.insert(rec.sig.str());
  CHECK(catalogued == expected);

  // The seven case blocks tile the list with the published sizes.
  const std::vector<SignatureBlock> blocks = signature_case_blocks();
  REQUIRE(blocks.size() == 7);
  const std::vector<size_t> sizes = {22, 16, 11, 4, 2, 1, 1};
  std::multiset<std::string> tiled;
  for (size_t i = 0; i < blocks.size(); ++i) {
    CHECK(blocks[i].sigs.size() == sizes[i]);
    for (const Signature& sig : blocks[i].sigs) tiled.insert(sig.str());
  }
  CHECK(tiled.size() == 57);
  CHECK(std::set<std::string>(tiled.begin(), tiled.end()) == expected);
}

TEST_CASE("monodromy pipeline on pinned rows") {
  // Genus two, no branch points: the plumbing fixture of the whole calculus.
  {
    const CatalogRecord& rec = record("{2;}");
    CHECK(phi_of(rec) ==
          IntPolynomial(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(0),
                                            BigInt(1)}));
    CHECK(tilde_phi_of(rec) == FrameShape::parse("6/3 1^4"));
    CHECK(phi_m_of(rec) == FrameShape::parse("2 6^4/1"));
    CHECK(phi_m_of(rec).degree() == 25);
    CHECK(moonshine_symbol_of(rec) == phi_m_of(rec));  // one degree
  }
  // A two-relation row with p and q both nontrivial.
  {
    const CatalogRecord& rec = record("I1,0");
    CHECK(tilde_phi_of(rec) == FrameShape::parse("3^2 6^2/1^2 2^2"));
    CHECK(tilde_phi_of(rec).is_self_dual());
    CHECK(phi_m_of(rec) == FrameShape::parse("6^3/1 2^2"));
    CHECK(phi_m_of(rec).degree() == 13);
    CHECK(moonshine_symbol_of(rec) == boundary_of(rec));  // two degrees
  }
  // A higher-index hypersurface: the divisor route must agree.
  {
    const CatalogRecord& rec = record("W24");
    const FrameShape pm = FrameShape::parse("2 9 36/1 4 18");
    CHECK(phi_m_of(rec) == pm);
    CHECK(monodromy_shape(rec.weights, 36) == pm);
    CHECK(pm.is_self_dual());
    CHECK(moonshine_symbol_of(rec) == pm);
  }
  // The top-genus pair runs through the fixed sixteen-fold symbol.
  {
    const CatalogRecord& nh = *Catalog::instance().find(
        Signature::parse("5;"), "nh", 1);
    const CatalogRecord& h = *Catalog::instance().find(
        Signature::parse("5;"), "h", 1);
    CHECK(phi_m_of(nh) == FrameShape::parse("2^16/1"));
    CHECK(boundary_of(nh) == FrameShape::parse("2^16/1^8"));
    CHECK(moonshine_symbol_of(nh) == FrameShape::parse("2^16/1^8"));
    CHECK(moonshine_symbol_of(h) == moonshine_symbol_of(nh));
  }
  // Every hyperelliptic partner produces the symbol of its counterpart.
  for (const CatalogRecord& rec : Catalog::instance().records()) {
    if (!rec.is_partner) continue;
    const CatalogRecord* nh =
        Catalog::instance().find(rec.sig, "nh", rec.exponent);
    REQUIRE(nh != nullptr);
    CHECK(moonshine_symbol_of(rec) == moonshine_symbol_of(*nh));
  }
  // E12 feeds the correspondence with the full divisor symbol.
  CHECK(moonshine_symbol_of(record("E12")) ==
        FrameShape::parse("2 3 7 42/1 6 14 21"));
}

TEST_CASE("every catalog row passes cross-verification") {
  for (const CatalogRecord& rec : Catalog::instance().records()) {
    const std::vector<std::string> errors = verify_record(rec);
    std::string joined;
    for (const std::string& error : errors) joined += error + "; ";
    INFO(rec.display_name() << ": " << joined);
    CHECK(errors.empty());
  }
}

TEST_CASE("the one row without a reduction really has none") {
  const Signature sig = Signature::parse("0;3,3,5,7");
  const CatalogRecord* rec = Catalog::instance().find(sig, "", 4);
  REQUIRE(rec != nullptr);
  CHECK_FALSE(rec->has_rule);
  CHECK_THROWS_AS(phi_m_of(*rec), std::runtime_error);

  const std::vector<int> w = rec->weights;    // 3, 5, 6, 7
  const std::vector<int> ds = rec->degrees;   // 12, 13
  REQUIRE(w.size() == 4);
  REQUIRE(ds.size() == 2);

  // Quadric shape z1 z4 + z2 z3: the four weights must split into two
  // pairs with equal sums, forcing 2 d1 = w1 + w2 + w3 + w4.
  for (int d1 : ds) CHECK(2 * d1 != w[0] + w[1] + w[2] + w[3]);

  // Power shape z1^q + z2 z3 with a z4^p term: exhaust every assignment
  // of the four weights to the four roles.  (The variant with a repeated
  // weight cannot occur here since all four weights are distinct.)
  CHECK(std::set<int>(w.begin(), w.end()).size() == 4);
  bool feasible = false;
  for (int which = 0; which < 2; ++which) {
    const int d1 = ds[which], d2 = ds[1 - which];
    for (size_t i = 0; i < 4; ++i) {
      if (d1 % w[i] != 0 || d1 / w[i] < 2) continue;
      const int q = d1 / w[i];
      for (size_t j = 0; j < 4; ++j) {
        if (j == i || d2 % w[j] != 0 || d2 / w[j] < 2) continue;
        std::vector<int> rest;
        for (size_t k = 0; k < 4; ++k)
          if (k != i && k != j) rest.push_back(w[k]);
        if (rest[0] + rest[1] == d1 && d2 % q == 0) feasible = true;
      }
    }
  }
  CHECK_FALSE(feasible);
}

TEST_CASE("orbit degrees satisfy the virtual-degree relation") {
  // The {0;3,4,20} row is the one place where a plausible-looking orbit
  // degree of 1 fails the relation (R*vdeg lands at 319/30 instead of
  // -11/30); both the counting and the relation force 2, which is what
  // the dataset stores.
  const CatalogRecord* rec =
      Catalog::instance().find(Signature::parse("0;3,4,20"), "", 11);
  REQUIRE(rec != nullptr);
  CHECK(rec->b == 2);
  CHECK(orbit_data(rec->sig, rec->exponent).b == 2);

  const GorensteinData good = gorenstein_check(rec->sig, 2, 11);
  CHECK(good.ok);
  CHECK(good.beta == std::vector<int>{2, 3, 11});
  CHECK(good.vdeg == BigRat(-1, 30));

  const GorensteinData bad = gorenstein_check(rec->sig, 1, 11);
  CHECK_FALSE(bad.ok);
  CHECK(bad.vdeg == BigRat(29, 30));

  CHECK(verify_record(*rec).empty());
}

TEST_CASE("records serialize back to their dataset lines") {
  const auto lines = checked_dataset_lines(catalog_text());
  const auto& records = Catalog::instance().records();
  REQUIRE(lines.size() == records.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    INFO("line ", i);
    CHECK(dataset_line(records[i]) == lines[i]);
  }
}
