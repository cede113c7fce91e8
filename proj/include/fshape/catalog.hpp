#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fshape/frame_shape.hpp"
#include "fshape/graded.hpp"
#include "fshape/rational_function.hpp"

namespace fshape {

// One row of the singularity catalog.  `exponent` is the order R of the
// grading automorphism (1 for the unimodal/bimodal series, >1 for the
// mu=24/25 families).  `b` is the catalogued orbit degree where one is
// listed; verify_record holds it against the virtual-degree relation.
struct CatalogRecord {
    int table = 0;  // derived from (exponent, genus, mu), not stored
    Signature sig{0, {}};
    std::string variant;   // "", "h" or "nh"
    std::vector<int> weights;
    std::vector<int> degrees;
    std::string name;      // "" when the row is unnamed
    long long mu = 0;
    int b = 0;             // 0 when not listed
    int exponent = 1;      // R
    bool flag_b = false;
    bool flag_e = false;
    bool has_rule = false; // false for case=none and unresolved partners
    bool is_partner = false;
    ReductionRule rule{ReductionKind::kHypersurface, 0, 0, 0, 0};

    bool is_hypersurface() const { return degrees.size() == 1; }
    std::string display_name() const;
};

class Catalog {
  public:
    static const Catalog& instance();

    const std::vector<CatalogRecord>& records() const { return records_; }

    // All records with this signature (tables can share signatures at
    // different exponents, and h/nh partners share everything).
    std::vector<const CatalogRecord*> find(const Signature& sig) const;
    const CatalogRecord* find(const Signature& sig, const std::string& variant,
                              int exponent) const;
    const CatalogRecord* find_by_name(const std::string& name) const;

    // Parses the key=value line format; throws std::runtime_error on
    // malformed input or checksum mismatch.
    static std::vector<CatalogRecord> parse(const std::string& text);

  private:
    explicit Catalog(std::vector<CatalogRecord> records);
    std::vector<CatalogRecord> records_;
};

// Raw embedded datasets (generated from data/ at build time).
const std::string& catalog_text();
const std::string& table5_text();

// Splits "# records=N fnv1a=H" header from the body, validates both and
// returns the body lines.  Throws std::runtime_error mentioning
// "dataset corruption" on any mismatch.
std::vector<std::string> checked_dataset_lines(const std::string& text);

// Re-serializes a record in the dataset line grammar (machine output).
std::string dataset_line(const CatalogRecord& rec);

// --- derivation pipeline -------------------------------------------------

// Poincare series of the coordinate algebra, from the weight data.
RationalFunction poincare_of(const CatalogRecord& rec);

// Characteristic polynomial phi_A of the Milnor lattice Coxeter element.
IntPolynomial phi_of(const CatalogRecord& rec);

// Reduced symbol phi~_A (a frame shape, possibly with negative exponents).
FrameShape tilde_phi_of(const CatalogRecord& rec);

// Boundary symbol phi_M^b = dual of phi~_A at h = order.
FrameShape boundary_of(const CatalogRecord& rec);

// Monodromy symbol phi_M, recovered from the boundary symbol.
FrameShape phi_m_of(const CatalogRecord& rec);

// The symbol entering the moonshine correspondence: phi_M for
// hypersurfaces, phi_M^b otherwise.
FrameShape moonshine_symbol_of(const CatalogRecord& rec);

// The reduction rule with partner rows resolved to their nh sibling.
// Throws std::runtime_error for rows with no applicable rule.
ReductionRule resolved_rule(const CatalogRecord& rec);

// Cross-checks one record against every independent route we have:
// weights vs closed formula (R=1), weights vs orbit counting (genus 0),
// divisor calculus for hypersurfaces, Milnor number, duality degree
// bookkeeping.  Returns a list of failure descriptions (empty = clean).
std::vector<std::string> verify_record(const CatalogRecord& rec);

// Signatures satisfying the graded-isolated-singularity conditions with
// the canonical grading, i.e. the expected index set of tables 1 and 2.
std::vector<Signature> fuchsian_icis_signatures();

// The same list split into its seven classification cases, in order:
// genus 0 with three branches, genus 0 with more, then genus 1..5.
struct SignatureBlock {
    std::string label;
    std::vector<Signature> sigs;
};
std::vector<SignatureBlock> signature_case_blocks();

}  // namespace fshape
