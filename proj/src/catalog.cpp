#include "fshape/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fshape/lattice.hpp"
#include "fshape/matrix.hpp"
#include "fshape/monodromy.hpp"

namespace fshape {

namespace {

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

// Splits a record line on ';', re-joining segments that lack '=' to their
// predecessor (signature values themselves contain a ';').
std::map<std::string, std::string> parse_fields(const std::string& line) {
  std::vector<std::string> pieces;
  size_t pos = 0;
  for (;;) {
    size_t semi = line.find(';', pos);
    std::string seg =
        line.substr(pos, (semi == std::string::npos ? line.size() : semi) - pos);
    if (seg.find('=') != std::string::npos) {
      pieces.push_back(seg);
    } else if (!pieces.empty()) {
      pieces.back() += ";" + seg;
    } else {
      throw std::runtime_error("malformed catalog line: " + line);
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  std::map<std::string, std::string> kv;
  for (const std::string& piece : pieces) {
    size_t eq = piece.find('=');
    kv[piece.substr(0, eq)] = piece.substr(eq + 1);
  }
  return kv;
}

int other_degree(const std::vector<int>& degrees, int d1) {
  if (degrees.size() != 2)
    throw std::runtime_error("reduction rule needs exactly two degrees");
  if (degrees[0] == d1) return degrees[1];
  if (degrees[1] == d1) return degrees[0];
  throw std::runtime_error("d1 is not among the degrees");
}

CatalogRecord parse_record(const std::string& line) {
  auto kv = parse_fields(line);
  auto field = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::runtime_error(std::string("catalog line misses field ") + key);
    return it->second;
  };
  CatalogRecord rec;
  rec.sig = Signature::parse(field("sig"));
  if (field("hyper") != "-") rec.variant = field("hyper");
  rec.weights = parse_int_list(field("weights"));
  rec.degrees = parse_int_list(field("degrees"));
  if (field("name") != "-") rec.name = field("name");
  rec.mu = std::stoll(field("mu"));
  if (field("b") != "-") rec.b = std::stoi(field("b"));
  rec.exponent = std::stoi(field("R"));
  if (field("flags") != "-") {
    for (int ch : field("flags")) {
      if (ch == 'b') rec.flag_b = true;
      if (ch == 'e') rec.flag_e = true;
    }
  }
  const std::string& kind = field("case");
  if (kind == "hyper") {
    rec.has_rule = true;
    rec.rule.kind = ReductionKind::kHypersurface;
  } else if (kind == "onerel") {
    rec.has_rule = true;
    rec.rule.kind = ReductionKind::kOneRelation;
    rec.rule.d1 = std::stoi(field("d1"));
    rec.rule.d2 = other_degree(rec.degrees, rec.rule.d1);
  } else if (kind == "pqrel") {
    rec.has_rule = true;
    rec.rule.kind = ReductionKind::kPQRelation;
    rec.rule.q = std::stoi(field("q"));
    rec.rule.p = std::stoi(field("p"));
    rec.rule.d1 = std::stoi(field("d1"));
    rec.rule.d2 = other_degree(rec.degrees, rec.rule.d1);
  } else if (kind == "pfaff") {
    rec.has_rule = true;
    rec.rule.kind = ReductionKind::kPfaffian;
  } else if (kind == "partner") {
    rec.is_partner = true;
  } else if (kind == "none") {
    // no reduction of any of the three shapes applies
  } else {
    throw std::runtime_error("unknown reduction case: " + kind);
  }
  if (rec.weights.empty() || rec.degrees.empty() || rec.mu <= 0 ||
      rec.exponent < 1)
    throw std::runtime_error("implausible catalog record: " + line);
  // Table membership is determined by the invariants, not stored.  The
  // index-one list splits after four branches.
  if (rec.exponent == 1)
    rec.table = rec.sig.genus == 0 && rec.sig.branch_count() <= 4 ? 1 : 2;
  else if (rec.mu == 24)
    rec.table = 3;
  else if (rec.mu == 25)
    rec.table = 4;
  else
    throw std::runtime_error("record fits no table: " + line);
  return rec;
}

}  // namespace

std::vector<std::string> checked_dataset_lines(const std::string& text) {
  size_t nl = text.find('\n');
  if (nl == std::string::npos || text.rfind("# records=", 0) != 0)
    throw std::runtime_error("dataset corruption (missing header)");
  const std::string header = text.substr(0, nl);
  const std::string body = text.substr(nl + 1);
  size_t count = 0;
  uint64_t sum = 0;
  {
    std::istringstream in(header.substr(2));
    std::string rec_part, sum_part;
    in >> rec_part >> sum_part;
    if (rec_part.rfind("records=", 0) != 0 || sum_part.rfind("fnv1a=", 0) != 0)
      throw std::runtime_error("dataset corruption (missing header)");
    count = std::stoul(rec_part.substr(8));
    sum = std::stoull(sum_part.substr(6), nullptr, 16);
  }
  if (fnv1a(body) != sum)
    throw std::runtime_error("dataset corruption (checksum)");
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t end = body.find('\n', pos);
    if (end == std::string::npos) end = body.size();
    if (end > pos) lines.push_back(body.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.size() != count)
    throw std::runtime_error("dataset corruption (record count)");
  return lines;
}

std::string CatalogRecord::display_name() const {
  if (!name.empty()) return name;
  return "{" + sig.str() + "}";
}

std::vector<CatalogRecord> Catalog::parse(const std::string& text) {
  std::vector<CatalogRecord> out;
  for (const std::string& line : checked_dataset_lines(text))
    out.push_back(parse_record(line));
  return out;
}

Catalog::Catalog(std::vector<CatalogRecord> records)
    : records_(std::move(records)) {}

const Catalog& Catalog::instance() {
  static const Catalog catalog(parse(catalog_text()));
  return catalog;
}

std::vector<const CatalogRecord*> Catalog::find(const Signature& sig) const {
  std::vector<const CatalogRecord*> out;
  for (const CatalogRecord& rec : records_)
    if (rec.sig == sig) out.push_back(&rec);
  return out;
}

const CatalogRecord* Catalog::find(const Signature& sig,
                                   const std::string& variant,
                                   int exponent) const {
  for (const CatalogRecord& rec : records_)
    if (rec.sig == sig && rec.variant == variant && rec.exponent == exponent)
      return &rec;
  return nullptr;
}

const CatalogRecord* Catalog::find_by_name(const std::string& name) const {
  for (const CatalogRecord& rec : records_)
    if (rec.display_name() == name) return &rec;
  return nullptr;
}

RationalFunction poincare_of(const CatalogRecord& rec) {
  return poincare_from_weights(rec.weights, rec.degrees);
}

IntPolynomial phi_of(const CatalogRecord& rec) {
  return (poincare_of(rec) * psi_factor(rec.sig)).to_polynomial();
}

ReductionRule resolved_rule(const CatalogRecord& rec) {
  if (rec.has_rule) return rec.rule;
  if (rec.is_partner) {
    const CatalogRecord* sibling =
        Catalog::instance().find(rec.sig, "nh", rec.exponent);
    if (sibling && sibling->has_rule) return sibling->rule;
  }
  throw std::runtime_error("no reduction rule applies to " +
                           rec.display_name());
}

FrameShape tilde_phi_of(const CatalogRecord& rec) {
  return reduce_phi(rec.sig, poincare_of(rec) * psi_factor(rec.sig),
                    resolved_rule(rec));
}

FrameShape boundary_of(const CatalogRecord& rec) {
  return tilde_phi_of(rec).saito_dual();
}

FrameShape phi_m_of(const CatalogRecord& rec) {
  return shape_from_boundary(boundary_of(rec), resolved_rule(rec));
}

FrameShape moonshine_symbol_of(const CatalogRecord& rec) {
  return rec.is_hypersurface() ? phi_m_of(rec) : boundary_of(rec);
}

namespace {

// Structural consistency of a reduction rule with the weight data: the
// defining relation of degree d1 must be expressible in the required shape.
std::string rule_structure_error(const CatalogRecord& rec,
                                 const ReductionRule& rule) {
  const std::vector<int>& w = rec.weights;
  switch (rule.kind) {
    case ReductionKind::kHypersurface:
      if (rec.degrees.size() != 1) return "hypersurface rule needs one degree";
      if (w.size() != 3) return "hypersurface rule needs three weights";
      return "";
    case ReductionKind::kOneRelation: {
      if (w.size() != 4) return "quadric rule needs four weights";
      // z1 z4 + z2 z3: both monomials of degree d1.
      for (size_t i = 1; i < 4; ++i) {
        if (w[0] + w[i] != rule.d1) continue;
        std::vector<int> rest;
        for (size_t j = 1; j < 4; ++j)
          if (j != i) rest.push_back(w[j]);
        if (rest[0] + rest[1] == rule.d1) return "";
      }
      return "no pairing of weights matches the quadric relation";
    }
    case ReductionKind::kPQRelation: {
      if (w.size() != 4) return "power rule needs four weights";
      if (rule.d2 % rule.q != 0) return "q does not divide d2";
      // z1^q + z2 z3 of degree d1, and a z4^p term of degree d2.
      for (size_t i = 0; i < 4; ++i) {
        if (w[i] * rule.q != rule.d1) continue;
        for (size_t j = 0; j < 4; ++j) {
          if (j == i || w[j] * rule.p != rule.d2) continue;
          std::vector<int> rest;
          for (size_t k = 0; k < 4; ++k)
            if (k != i && k != j) rest.push_back(w[k]);
          if (rest[0] + rest[1] == rule.d1) return "";
        }
      }
      return "no assignment of weights matches the power relation";
    }
    case ReductionKind::kPfaffian:
      return "";
  }
  return "unreachable";
}

}  // namespace

std::string dataset_line(const CatalogRecord& rec) {
  const auto list = [](const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  std::string flags;
  if (rec.flag_b) flags = "b";
  if (rec.flag_e) flags += flags.empty() ? "e" : ",e";
  std::string kind = "none", q = "-", p = "-", d1 = "-";
  if (rec.is_partner) {
    kind = "partner";
  } else if (rec.has_rule) {
    switch (rec.rule.kind) {
      case ReductionKind::kHypersurface: kind = "hyper"; break;
      case ReductionKind::kOneRelation:
        kind = "onerel";
        d1 = std::to_string(rec.rule.d1);
        break;
      case ReductionKind::kPQRelation:
        kind = "pqrel";
        q = std::to_string(rec.rule.q);
        p = std::to_string(rec.rule.p);
        d1 = std::to_string(rec.rule.d1);
        break;
      case ReductionKind::kPfaffian: kind = "pfaff"; break;
    }
  }
  std::string line = "sig=" + rec.sig.str();
  line += ";hyper=" + (rec.variant.empty() ? "-" : rec.variant);
  line += ";weights=" + list(rec.weights);
  line += ";degrees=" + list(rec.degrees);
  line += ";name=" + (rec.name.empty() ? "-" : rec.name);
  line += ";mu=" + std::to_string(rec.mu);
  line += ";b=" + (rec.b != 0 ? std::to_string(rec.b) : std::string("-"));
  line += ";R=" + std::to_string(rec.exponent);
  line += ";flags=" + (flags.empty() ? "-" : flags);
  line += ";case=" + kind;
  line += ";q=" + q + ";p=" + p + ";d1=" + d1;
  return line;
}

std::vector<std::string> verify_record(const CatalogRecord& rec) {
  std::vector<std::string> errors;
  const auto fail = [&](const std::string& what) { errors.push_back(what); };

  if (!is_hyperbolic(rec.sig)) fail("signature is not hyperbolic");

  const RationalFunction p = poincare_of(rec);

  // Route 1 vs route 2: the closed one-formula series (index-one case).
  if (rec.exponent == 1 && p != poincare_fuchsian(rec.sig))
    fail("weights disagree with the closed Poincare formula");

  // Route 1 vs route 3: genus zero orbit counting.
  if (rec.sig.genus == 0) {
    int last = 1;
    for (int d : rec.degrees) last += d;
    for (int w : rec.weights) last += w;
    try {
      const OrbitData data = orbit_data(rec.sig, rec.exponent);
      if (p.series(last) != poincare_orbit(rec.sig, data, last))
        fail("weights disagree with orbit counting");
    } catch (const std::exception& e) {
      fail(std::string("orbit counting failed: ") + e.what());
    }
  }

  // The algebra is honestly graded: nonnegative dimensions, one constant.
  {
    const std::vector<BigInt> dims = p.series(64);
    if (dims[0] != 1) fail("Poincare series does not start at 1");
    for (const BigInt& d : dims)
      if (d < 0) fail("Poincare series has a negative coefficient");
  }

  // The listed orbit degree must reproduce the virtual-degree relation at
  // the listed automorphism order (index-one rows list none; theirs is the
  // canonical 2g-2+r).
  {
    const long long b = rec.b != 0 ? rec.b : 2 * rec.sig.genus - 2 + rec.sig.branch_count();
    try {
      if (!gorenstein_check(rec.sig, b, rec.exponent).ok)
        fail("orbit degree fails the virtual-degree relation");
    } catch (const std::exception& e) {
      fail(std::string("virtual-degree check failed: ") + e.what());
    }
  }

  // phi_A must be a genuine polynomial with constant term 1.
  IntPolynomial phi;
  try {
    phi = phi_of(rec);
    if (phi.coeff(0) != 1) fail("phi does not start at 1");
  } catch (const std::exception& e) {
    fail(std::string("phi is not a polynomial: ") + e.what());
  }

  // Index-one rows carry the lattice model: the Coxeter element of the
  // extended Milnor lattice realizes phi.
  if (rec.exponent == 1) {
    const FuchsianLattice lat = build_lattice(rec.sig);
    if (charpoly(coxeter_infinity_fast(lat)) != phi)
      fail("Coxeter element does not realize phi");
  }

  if (rec.has_rule || rec.is_partner) {
    const ReductionRule rule = resolved_rule(rec);
    // Partner rows borrow the rule of their sibling, whose weight pattern
    // is different; the structural shape only binds the original row.
    if (rec.has_rule) {
      const std::string structural = rule_structure_error(rec, rec.rule);
      if (!structural.empty()) fail(structural);
    }

    const FrameShape phi_m = phi_m_of(rec);
    if (phi_m.degree() != rec.mu)
      fail("monodromy symbol degree differs from the Milnor number");

    // Hypersurfaces have the independent divisor-calculus route.
    if (rec.is_hypersurface()) {
      if (phi_m != monodromy_shape(rec.weights, rec.degrees[0]))
        fail("monodromy symbol disagrees with the divisor calculus");
      if (milnor_number(rec.weights, rec.degrees[0]) != rec.mu)
        fail("Milnor number mismatch");
    }

    // The boundary symbol is the dual of the reduced symbol by
    // construction; cross-check the inverse bookkeeping.
    if (boundary_shape(phi_m, rule) != boundary_of(rec))
      fail("boundary reconstruction is not involutive");

    if (rec.flag_b && !moonshine_symbol_of(rec).is_self_dual())
      fail("flagged symbol is not self-dual");
  }

  if (rec.is_partner) {
    const CatalogRecord* sibling =
        Catalog::instance().find(rec.sig, "nh", rec.exponent);
    if (!sibling) {
      fail("partner row has no counterpart");
    } else {
      if (poincare_of(*sibling) != p)
        fail("partner rows have different Poincare series");
      if (sibling->mu != rec.mu) fail("partner rows have different mu");
    }
  }

  return errors;
}

std::vector<SignatureBlock> signature_case_blocks() {
  const auto sig_less = [](const Signature& a, const Signature& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    return a.alpha < b.alpha;
  };
  std::vector<SignatureBlock> blocks;

  // Genus zero, three branches: three families of order bounds.
  {
    std::vector<Signature> sigs;
    for (int a3 = 7; a3 <= 10; ++a3) sigs.push_back(Signature(0, {2, 3, a3}));
    for (int a2 = 4; a2 <= 6; ++a2)
      for (int a3 = a2; a2 + a3 <= 12; ++a3)
        if (a2 + a3 >= 9) sigs.push_back(Signature(0, {2, a2, a3}));
    for (int a1 = 3; a1 <= 4; ++a1)
      for (int a2 = a1; a2 <= 13; ++a2)
        for (int a3 = a2; a1 + a2 + a3 <= 13; ++a3)
          if (a1 + a2 + a3 >= 10) sigs.push_back(Signature(0, {a1, a2, a3}));
    std::sort(sigs.begin(), sigs.end(), sig_less);
    blocks.push_back({"genus 0, three branches", std::move(sigs)});
  }

  // Genus zero, four or more branches: branch orders sum to 9..12.
  {
    std::vector<Signature> sigs;
    std::vector<int> parts;
    const std::function<void(int, int)> rec = [&](int remaining, int minimum) {
      if (parts.size() >= 4 && remaining == 0)
        sigs.push_back(Signature(0, parts));
      for (int a = minimum; a <= remaining; ++a) {
        parts.push_back(a);
        rec(remaining - a, a);
        parts.pop_back();
      }
    };
    for (int total = 9; total <= 12; ++total) rec(total, 2);
    std::sort(sigs.begin(), sigs.end(), sig_less);
    blocks.push_back({"genus 0, four or more branches", std::move(sigs)});
  }

  // Positive genus: sum (alpha_i - 1) <= 4 - g, plus r >= 1 when g = 1.
  for (int g = 1; g <= 5; ++g) {
    std::vector<Signature> sigs;
    const int budget = g == 1 ? 4 : 4 - g;
    std::vector<int> parts;
    const std::function<void(int, int)> rec = [&](int remaining, int minimum) {
      if (g != 1 || !parts.empty()) sigs.push_back(Signature(g, parts));
      for (int a = minimum; a <= remaining; ++a) {
        parts.push_back(a + 1);
        rec(remaining - a, a);
        parts.pop_back();
      }
    };
    rec(budget < 0 ? 0 : budget, 1);
    std::sort(sigs.begin(), sigs.end(), sig_less);
    blocks.push_back({"genus " + std::to_string(g), std::move(sigs)});
  }
  return blocks;
}

std::vector<Signature> fuchsian_icis_signatures() {
  std::vector<Signature> out;
  for (SignatureBlock& block : signature_case_blocks())
    for (Signature& sig : block.sigs) out.push_back(std::move(sig));
  std::sort(out.begin(), out.end(),
            [](const Signature& a, const Signature& b) {
              if (a.genus != b.genus) return a.genus < b.genus;
              return a.alpha < b.alpha;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fshape
