// Command-line front end: every operation of the library behind one binary.
//
// Exit codes: 0 success, 1 verification/domain failure, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fshape/catalog.hpp"
#include "fshape/frame_shape.hpp"
#include "fshape/graded.hpp"
#include "fshape/lattice.hpp"
#include "fshape/monodromy.hpp"
#include "fshape/moonshine.hpp"
#include "fshape/polynomial.hpp"

using namespace fshape;

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  return out.str();
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  return out.str();
}

std::vector<BigInt> coefficients(const IntPolynomial& p) {
  std::vector<BigInt> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k));
  return out;
}

// Failure reasons may contain the record separator; flatten them.
std::string sanitize(std::string text) {
  for (char& ch : text)
    if (ch == ';' || ch == '\n') ch = ',';
  return text;
}

struct Options {
  std::string format = "human";
  std::string table = "all";
  std::string construction = "all";
  std::string sig, name, pi;
  std::vector<int> weights, degrees;
  int terms = 256;
  int h = 0;
  int exponent = 1;
};

bool machine(const Options& opt) { return opt.format == "machine"; }

int run_poincare(const Options& opt) {
  std::vector<BigInt> series;
  std::string source;
  if (!opt.name.empty()) {
    const CatalogRecord* rec = Catalog::instance().find_by_name(opt.name);
    if (!rec) throw std::runtime_error("no catalog row named " + opt.name);
    series = poincare_of(*rec).series(opt.terms);
    source = "name=" + opt.name + ";weights=" + join_ints(rec->weights) +
             ";degrees=" + join_ints(rec->degrees);
  } else if (!opt.weights.empty()) {
    if (opt.degrees.empty())
      throw CLI::ValidationError("poincare", "--weights needs --degrees");
    series = poincare_from_weights(opt.weights, opt.degrees).series(opt.terms);
    source = "weights=" + join_ints(opt.weights) +
             ";degrees=" + join_ints(opt.degrees);
  } else if (!opt.sig.empty()) {
    const Signature sig = Signature::parse(opt.sig);
    if (opt.exponent == 1) {
      series = poincare_fuchsian(sig).series(opt.terms);
    } else {
      series = poincare_orbit(sig, orbit_data(sig, opt.exponent), opt.terms);
    }
    source = "sig=" + sig.str() + ";R=" + std::to_string(opt.exponent);
  } else {
    throw CLI::ValidationError("poincare", "need --weights, --sig or --name");
  }
  if (machine(opt))
    std::cout << source << ";terms=" << opt.terms << ";series=" << join(series)
              << '\n';
  else
    std::cout << join(series) << '\n';
  return 0;
}

int run_phi(const Options& opt) {
  IntPolynomial phi;
  std::string source;
  if (!opt.name.empty()) {
    const CatalogRecord* rec = Catalog::instance().find_by_name(opt.name);
    if (!rec) throw std::runtime_error("no catalog row named " + opt.name);
    phi = phi_of(*rec);
    source = "name=" + opt.name + ";sig=" + rec->sig.str();
  } else if (!opt.sig.empty()) {
    phi = phi_polynomial(Signature::parse(opt.sig));
    source = "sig=" + opt.sig;
  } else {
    throw CLI::ValidationError("phi", "need --sig or --name");
  }
  if (machine(opt))
    std::cout << source << ";phi=" << join(coefficients(phi)) << '\n';
  else
    std::cout << phi.str() << '\n';
  return 0;
}

int run_dual(const Options& opt) {
  if (opt.pi.empty()) throw CLI::ValidationError("dual", "need --pi");
  const FrameShape fs = FrameShape::parse(opt.pi);
  const FrameShape dual = fs.saito_dual(opt.h);
  if (machine(opt))
    std::cout << "pi=" << fs.str() << ";h="
              << (opt.h ? std::to_string(opt.h) : "auto")
              << ";dual=" << dual.str() << '\n';
  else
    std::cout << dual.str() << '\n';
  return 0;
}

int run_monodromy(const Options& opt) {
  FrameShape shape;
  std::string source;
  if (!opt.name.empty()) {
    const CatalogRecord* rec = Catalog::instance().find_by_name(opt.name);
    if (!rec) throw std::runtime_error("no catalog row named " + opt.name);
    shape = phi_m_of(*rec);
    source = "name=" + opt.name + ";sig=" + rec->sig.str();
  } else if (!opt.weights.empty()) {
    if (opt.degrees.size() != 1)
      throw CLI::ValidationError("monodromy",
                                 "--weights needs exactly one --degrees value");
    shape = monodromy_shape(opt.weights, opt.degrees[0]);
    source = "weights=" + join_ints(opt.weights) +
             ";degrees=" + std::to_string(opt.degrees[0]);
  } else {
    throw CLI::ValidationError("monodromy", "need --weights or --name");
  }
  if (machine(opt))
    std::cout << source << ";shape=" << shape.str() << ";mu=" << shape.degree()
              << '\n';
  else
    std::cout << shape.str() << '\n' << "mu = " << shape.degree() << '\n';
  return 0;
}

int run_coxeter(const Options& opt) {
  if (opt.sig.empty()) throw CLI::ValidationError("coxeter", "need --sig");
  const Signature sig = Signature::parse(opt.sig);
  const FuchsianLattice lat = build_lattice(sig);
  const IntPolynomial cp = charpoly(coxeter_infinity_fast(lat));
  if (machine(opt))
    std::cout << "sig=" << sig.str() << ";rank=" << lat.rank()
              << ";charpoly=" << join(coefficients(cp)) << '\n';
  else
    std::cout << "rank " << lat.rank() << '\n' << cp.str() << '\n';
  return 0;
}

int run_classify(const Options& opt) {
  for (const SignatureBlock& block : signature_case_blocks()) {
    if (machine(opt)) {
      for (const Signature& sig : block.sigs)
        std::cout << "case=" << block.label << ";sig=" << sig.str() << '\n';
    } else {
      std::cout << block.label << " (" << block.sigs.size() << ")\n";
      for (const Signature& sig : block.sigs)
        std::cout << "  {" << sig.str() << "}\n";
    }
  }
  return 0;
}

int verify_catalog_table(const Options& opt, int table, bool& failed) {
  int row = 0;
  for (const CatalogRecord& rec : Catalog::instance().records()) {
    if (rec.table != table) continue;
    ++row;
    const std::vector<std::string> errors = verify_record(rec);
    if (!errors.empty()) failed = true;
    if (machine(opt)) {
      std::cout << dataset_line(rec) << ";check=";
      if (errors.empty()) {
        std::cout << "PASS";
      } else {
        std::cout << "FAIL(";
        for (size_t i = 0; i < errors.size(); ++i)
          std::cout << (i ? "|" : "") << sanitize(errors[i]);
        std::cout << ")";
      }
      std::cout << '\n';
    } else {
      std::cout << (errors.empty() ? "PASS" : "FAIL") << " table=" << table
                << " row=" << row << " {" << rec.sig.str() << "}";
      if (!rec.variant.empty()) std::cout << " (" << rec.variant << ")";
      if (!rec.name.empty()) std::cout << " " << rec.name;
      for (const std::string& err : errors) std::cout << "\n      " << err;
      std::cout << '\n';
    }
  }
  return 0;
}

int verify_table_five(const Options& opt, bool& failed) {
  for (const Table5Check& check : verify_table5()) {
    if (!check.pass) failed = true;
    if (machine(opt)) {
      const std::string label = check.line.substr(0, check.line.find(' '));
      std::cout << "table=5;row=" << label
                << ";check=" << (check.pass ? "PASS" : "FAIL") << '\n';
    } else {
      std::cout << (check.pass ? "PASS" : "FAIL") << " table=5 " << check.line
                << '\n';
    }
  }
  return 0;
}

int run_verify(const Options& opt) {
  bool failed = false;
  const bool all = opt.table == "all";
  for (int table = 1; table <= 4; ++table)
    if (all || opt.table == std::to_string(table))
      verify_catalog_table(opt, table, failed);
  if (all || opt.table == "5") verify_table_five(opt, failed);
  if (all) {
    // Aggregate check: the enumerated classification matches the catalog.
    std::vector<std::string> expected, got;
    for (const Signature& sig : fuchsian_icis_signatures())
      expected.push_back(sig.str());
    for (const CatalogRecord& rec : Catalog::instance().records())
      if (rec.table <= 2) got.push_back(rec.sig.str());
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::sort(expected.begin(), expected.end());
    const bool ok = expected == got;
    if (!ok) failed = true;
    if (machine(opt))
      std::cout << "table=all;row=classification;check="
                << (ok ? "PASS" : "FAIL") << '\n';
    else
      std::cout << (ok ? "PASS" : "FAIL") << " classification ("
                << expected.size() << " signatures)\n";
  }
  return failed ? 1 : 0;
}

int run_moonshine(const Options& opt) {
  const std::vector<Table5Row> rows = parse_table5(table5_text());
  bool failed = false;
  for (const MoonshineEntry& entry : moonshine_entries()) {
    if (opt.construction != "all" && entry.construction != opt.construction)
      continue;
    std::string label = "-";
    for (const Table5Row& row : rows)
      if (row.shape == entry.shape) label = row.label;
    if (label == "-") failed = true;
    if (machine(opt))
      std::cout << "construction=" << entry.construction
                << ";ref=" << entry.ref << ";shape=" << entry.shape.str()
                << ";label=" << label << ";check="
                << (label == "-" ? "UNMATCHED" : "MATCHED") << '\n';
    else
      std::cout << entry.construction << "  " << entry.ref << "  "
                << entry.shape.str() << "  -> " << label << '\n';
  }
  return failed ? 1 : 0;
}

int run_eta(const Options& opt) {
  if (opt.pi.empty()) throw CLI::ValidationError("eta", "need --pi");
  const FrameShape fs = FrameShape::parse(opt.pi);
  const long long offset = eta_offset(fs);
  const std::vector<BigInt> coeffs = eta_expansion(fs, opt.terms);
  if (machine(opt)) {
    std::cout << "pi=" << fs.str() << ";offset=" << offset
              << ";coeffs=" << join(coeffs) << '\n';
  } else {
    std::cout << "offset = " << offset << '\n'
              << IntPolynomial(coeffs).str("q") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame shapes, Poincare series and monodromy symbols"};
  app.require_subcommand(1);
  Options opt;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* poincare =
      app.add_subcommand("poincare", "Poincare series coefficients");
  poincare->add_option("--weights", opt.weights, "generator degrees")
      ->delimiter(',');
  poincare->add_option("--degrees", opt.degrees, "relation degrees")
      ->delimiter(',');
  poincare->add_option("--sig", opt.sig, "signature, e.g. 0;2,3,7");
  poincare->add_option("--name", opt.name, "catalog row name");
  poincare->add_option("--R", opt.exponent, "automorphism order");
  poincare->add_option("--terms", opt.terms, "truncation order");
  add_format(poincare);

  CLI::App* phi = app.add_subcommand("phi", "Coxeter characteristic polynomial");
  phi->add_option("--sig", opt.sig, "signature");
  phi->add_option("--name", opt.name, "catalog row name");
  add_format(phi);

  CLI::App* dual = app.add_subcommand("dual", "Saito dual of a frame shape");
  dual->set_help_flag("--help", "print help");  // frees -h for the modulus
  dual->add_option("--pi", opt.pi, "frame shape, e.g. 2^4/1^2");
  dual->add_option("--h", opt.h, "duality modulus (default: symbol order)");
  add_format(dual);

  CLI::App* monodromy =
      app.add_subcommand("monodromy", "monodromy frame shape and mu");
  monodromy->add_option("--weights", opt.weights, "weights")->delimiter(',');
  monodromy->add_option("--degrees", opt.degrees, "degree")->delimiter(',');
  monodromy->add_option("--name", opt.name, "catalog row name");
  add_format(monodromy);

  CLI::App* coxeter =
      app.add_subcommand("coxeter", "Coxeter element of the extended lattice");
  coxeter->add_option("--sig", opt.sig, "signature");
  add_format(coxeter);

  CLI::App* classify =
      app.add_subcommand("classify", "signatures admitting the construction");
  add_format(classify);

  CLI::App* verify = app.add_subcommand("verify", "re-derive catalog tables");
  verify->add_option("--table", opt.table, "1..5 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "all"}));
  add_format(verify);

  CLI::App* moonshine =
      app.add_subcommand("moonshine", "rank-24 symbol constructions");
  moonshine->add_option("--construction", opt.construction, "a..e or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "all"}));
  add_format(moonshine);

  CLI::App* eta = app.add_subcommand("eta", "eta-product q-expansion");
  eta->add_option("--pi", opt.pi, "frame shape");
  eta->add_option("--terms", opt.terms, "truncation order");
  add_format(eta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (poincare->parsed()) return run_poincare(opt);
    if (phi->parsed()) return run_phi(opt);
    if (dual->parsed()) return run_dual(opt);
    if (monodromy->parsed()) return run_monodromy(opt);
    if (coxeter->parsed()) return run_coxeter(opt);
    if (classify->parsed()) return run_classify(opt);
    if (verify->parsed()) return run_verify(opt);
    if (moonshine->parsed()) return run_moonshine(opt);
    if (eta->parsed()) return run_eta(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
