// primediv: library front end. Classifies the roots of a monic separable
// integer polynomial P (P(0) != 0, P(1) != 0), computes the certified
// constants, suggests exponents k with evidence that infinitely many primes
// divide P(T) but not P(T^k), and verifies candidates by prime sieving.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "primediv/parse.hpp"
#include "primediv/primediv.hpp"
#include "primediv/report_json.hpp"

namespace {

using namespace primediv;

struct GlobalOpts {
  bool json = false;
  std::string out;
  uint64_t seed = kDefaultSeed;
};

IntPolynomial load_poly(const std::string& text, json& report) {
  PolyExpr e = parse_expr(text);
  report["input"] = e.source;
  report["polynomial"] = to_string(e.parsed);
  return e.parsed;
}

void emit(const GlobalOpts& g, const json& report, const std::string& text) {
  std::string payload = g.json ? report.dump(2) + "\n" : text;
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw Error(Errc::InvalidArgument, "cannot open output file " + g.out);
    f << payload;
  } else {
    std::cout << payload;
  }
}

std::string classification_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "root classes (r1=" << rep.r1 << " torsion, r2=" << rep.r2 << " unit, r3=" << rep.r3
     << " non-unit):\n";
  for (const auto& cls : rep.classes) {
    os << "  " << to_string(cls.minimal_polynomial) << "  [" << root_kind_name(cls.kind);
    if (cls.kind == RootKind::RootOfUnity) os << ", order " << cls.order;
    os << ", " << cls.count << (cls.count == 1 ? " root" : " roots") << "]\n";
  }
  if (rep.p_min) {
    os << "  torsion-order primes:";
    for (uint64_t p : rep.s_union) os << " " << p;
    os << "  (least: " << *rep.p_min << ")\n";
  }
  return os.str();
}

std::string constants_text(const ConstantsReport& c) {
  std::ostringstream os;
  os << "constants:\n";
  os << "  k0 = " << c.k0.get_str() << "\n";
  if (c.p_min) os << "  p_min = " << *c.p_min << "\n";
  if (c.A0) os << "  A0 = " << *c.A0 << "\n";
  os << "  d1 lower bound = " << c.d1_lower_bound.get_str() << "\n";
  os << "  splitting degree bound = " << c.L1_degree_upper_bound.get_str() << "\n";
  if (c.v_upper) os << "  V = " << c.v_upper->get_str() << "\n";
  if (c.c) os << "  c = " << c.c->get_str() << "\n";
  for (const auto& n : c.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string certificate_text(const KCertificate& cert) {
  std::ostringstream os;
  os << "k = " << cert.k.get_str() << "  [route " << route_name(cert.route);
  if (cert.p0) os << ", p0 = " << cert.p0->get_str();
  if (cert.A0) os << ", exponent " << *cert.A0;
  if (cert.f2_upper) os << ", f2 <= " << cert.f2_upper->get_str();
  os << "]" << (cert.caveats.empty() ? "  certified" : "  CAVEATS") << "\n";
  for (const auto& w : cert.witnesses) {
    os << "    witness: class " << to_string(w.class_poly) << " at p = " << w.witness_prime
       << " (f = " << w.residue_degree << "), image " << w.image_text << " in " << w.field_text
       << " is a " << w.k << "-th non-residue\n";
  }
  for (const auto& cv : cert.caveats) os << "    caveat: " << cv << "\n";
  return os.str();
}

std::string density_text(const DensityReport& rep) {
  std::ostringstream os;
  os << "density scan (N = " << rep.N << ", " << rep.primes_tested << " primes):\n";
  os << "  divides P:        " << rep.pd_P << "  (density " << rep.density_P << ")\n";
  os << "  divides P(T^k):   " << rep.pd_Pk << "  (density " << rep.density_Pk << ")\n";
  os << "  difference set D: " << rep.D_count << "  (density " << rep.density_D << ")\n";
  os << "  f_hat = " << rep.f_hat;
  if (rep.largest_D_prime) os << ", largest prime in D = " << rep.largest_D_prime;
  os << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "certified exponents k such that infinitely many primes divide P(T) but not P(T^k)"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_option("--out", g.out, "write the report to a file instead of stdout");
  app.add_option("--seed", g.seed, "seed for randomized factorization steps");

  std::string poly_text;
  uint64_t opt_k = 0;
  uint64_t limit = 10'000'000;
  unsigned count = 3;
  uint64_t witness_limit = 1'000'000;
  unsigned threads = 0;
  uint64_t cyclo_n = 0;

  auto* c_classify = app.add_subcommand("classify", "partition the roots of P into classes");
  c_classify->add_option("poly", poly_text, "polynomial in T")->required();

  auto* c_constants = app.add_subcommand("constants", "compute the certified constants");
  c_constants->add_option("poly", poly_text)->required();

  auto* c_suggest = app.add_subcommand("suggest", "suggest certified exponents k");
  c_suggest->add_option("poly", poly_text)->required();
  c_suggest->add_option("--count", count, "number of candidates");
  c_suggest->add_option("--witness-limit", witness_limit, "witness prime search bound");
  c_suggest->add_option("--k", opt_k, "assess this k instead of searching");

  auto* c_verify = app.add_subcommand("verify", "suggest (or take --k) and scan empirically");
  c_verify->add_option("poly", poly_text)->required();
  c_verify->add_option("--k", opt_k, "exponent to verify");
  c_verify->add_option("--limit", limit, "sieve bound N");
  c_verify->add_option("--count", count, "number of candidates when searching");
  c_verify->add_option("--witness-limit", witness_limit, "witness prime search bound");
  c_verify->add_option("--threads", threads, "scan worker threads (0 = hardware)");

  auto* c_density = app.add_subcommand("density", "raw density scan for one k");
  c_density->add_option("poly", poly_text)->required();
  c_density->add_option("--k", opt_k, "exponent k")->required();
  c_density->add_option("--limit", limit, "sieve bound N");
  c_density->add_option("--threads", threads, "scan worker threads (0 = hardware)");

  auto* c_cyclo = app.add_subcommand("cyclotomic", "print the n-th cyclotomic polynomial");
  c_cyclo->add_option("n", cyclo_n, "index n")->required();

  auto* c_failures = app.add_subcommand("failures", "exponents k that provably fail");
  c_failures->add_option("poly", poly_text)->required();

  auto* c_oracle = app.add_subcommand("oracle", "exact densities (all-torsion polynomials)");
  c_oracle->add_option("poly", poly_text)->required();
  c_oracle->add_option("--k", opt_k, "exponent k")->required();

  for (auto* sub : {c_classify, c_constants, c_suggest, c_verify, c_density, c_cyclo, c_failures,
                    c_oracle})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    json report;
    report["seed"] = g.seed;
    std::ostringstream text;

    if (c_classify->parsed()) {
      report["command"] = "classify";
      IntPolynomial P = load_poly(poly_text, report);
      auto rep = classify_roots(P, g.seed);
      report["classification"] = to_json(rep);
      text << classification_text(rep);
    } else if (c_constants->parsed()) {
      report["command"] = "constants";
      IntPolynomial P = load_poly(poly_text, report);
      auto rep = classify_roots(P, g.seed);
      auto cons = compute_constants(P, rep);
      report["classification"] = to_json(rep);
      report["constants"] = to_json(cons);
      text << classification_text(rep) << constants_text(cons);
    } else if (c_suggest->parsed()) {
      report["command"] = "suggest";
      IntPolynomial P = load_poly(poly_text, report);
      SuggestOptions opt{count, witness_limit, g.seed};
      json certs = json::array();
      if (opt_k) {
        auto cert = assess_k(P, opt_k, opt);
        certs.push_back(to_json(cert));
        text << certificate_text(cert);
      } else {
        for (const auto& cert : suggest_k(P, opt)) {
          certs.push_back(to_json(cert));
          text << certificate_text(cert);
        }
      }
      report["certificates"] = certs;
    } else if (c_verify->parsed()) {
      report["command"] = "verify";
      IntPolynomial P = load_poly(poly_text, report);
      SuggestOptions opt{count, witness_limit, g.seed};
      std::vector<KCertificate> certs;
      if (opt_k) {
        certs.push_back(assess_k(P, opt_k, opt));
      } else {
        certs = suggest_k(P, opt);
      }
      json jcerts = json::array(), jdens = json::array();
      for (const auto& cert : certs) {
        text << certificate_text(cert);
        json jc = to_json(cert);
        if (fits_u64(cert.k)) {
          DensityReport rep = scan(P, to_u64(cert.k), limit, {threads, 1 << 16});
          jc["density"] = to_json(rep);
          jdens.push_back(to_json(rep));
          text << density_text(rep);
          bool supported = rep.D_count > 0;
          jc["empirically_supported"] = supported;
          text << (supported ? "  -> D is nonempty up to N\n" : "  -> D is EMPTY up to N\n");
        } else {
          jc["density"] = nullptr;
          text << "  (k too large to scan)\n";
        }
        jcerts.push_back(std::move(jc));
      }
      report["certificates"] = jcerts;
      // one object under the stable key; per-certificate scans live inside
      report["density"] = jdens.empty() ? json(nullptr) : jdens[0];
    } else if (c_density->parsed()) {
      report["command"] = "density";
      IntPolynomial P = load_poly(poly_text, report);
      DensityReport rep = scan(P, opt_k, limit, {threads, 1 << 16});
      report["k"] = opt_k;
      report["density"] = to_json(rep);
      text << density_text(rep);
    } else if (c_cyclo->parsed()) {
      report["command"] = "cyclotomic";
      IntPolynomial poly = cyclotomic_poly(cyclo_n);
      report["n"] = cyclo_n;
      report["polynomial"] = to_string(poly);
      text << to_string(poly) << "\n";
    } else if (c_failures->parsed()) {
      report["command"] = "failures";
      IntPolynomial P = load_poly(poly_text, report);
      auto pred = predict_failures(P, g.seed);
      report["failures"] = to_json(pred);
      text << (pred.coprime_moduli.empty() ? std::string("no provable failure set\n")
                                           : pred.description + "\n");
    } else if (c_oracle->parsed()) {
      report["command"] = "oracle";
      IntPolynomial P = load_poly(poly_text, report);
      auto rep = classify_roots(P, g.seed);
      auto dens = exact_cyclotomic_density(rep, opt_k);
      report["k"] = opt_k;
      report["oracle"] = to_json(dens);
      text << "exact densities for k = " << opt_k << ":\n"
           << "  divides P:        " << dens.dens_P.get_str() << "\n"
           << "  divides P(T^k):   " << dens.dens_Pk.get_str() << "\n"
           << "  difference set D: " << dens.dens_D.get_str() << "\n";
    }

    emit(g, report, text.str());
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::LimitExceeded ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
