#pragma once

#include <json.hpp>

#include "primediv/certify.hpp"
#include "primediv/classify.hpp"
#include "primediv/constants.hpp"
#include "primediv/verify.hpp"

namespace primediv {

using nlohmann::json;

// Big integers render as JSON numbers while they fit, decimal strings after.
inline json json_int(const Int& v) {
  if (v >= 0 && fits_u64(v)) return to_u64(v);
  if (v < 0 && mpz_fits_slong_p(v.get_mpz_t())) return mpz_get_si(v.get_mpz_t());
  return v.get_str();
}

inline json json_rat(const Rat& v) { return v.get_str(); }

inline json to_json(const RootClass& cls) {
  json j{{"kind", root_kind_name(cls.kind)},
         {"minimal_polynomial", to_string(cls.minimal_polynomial)},
         {"degree", cls.minimal_polynomial.degree()},
         {"count", cls.count}};
  if (cls.kind == RootKind::RootOfUnity) j["order"] = cls.order;
  return j;
}

inline json to_json(const ClassificationReport& rep) {
  json classes = json::array();
  for (const auto& cls : rep.classes) classes.push_back(to_json(cls));
  json j{{"r1", rep.r1}, {"r2", rep.r2}, {"r3", rep.r3}, {"classes", classes},
         {"min_factor_degree", rep.min_factor_degree}};
  json su = json::array();
  for (uint64_t p : rep.s_union) su.push_back(p);
  j["S_union"] = su;
  if (rep.p_min) j["p_min"] = *rep.p_min;
  return j;
}

inline json to_json(const ConstantsReport& c) {
  json j{{"k0", json_int(c.k0)},
         {"p_min", c.p_min ? json(*c.p_min) : json(nullptr)},
         {"A0", c.A0 ? json(*c.A0) : json(nullptr)},
         {"c", c.c ? json_int(*c.c) : json(nullptr)},
         {"V", c.v_upper ? json_int(*c.v_upper) : json(nullptr)},
         {"d1_lower_bound", json_rat(c.d1_lower_bound)},
         {"L1_degree_upper_bound", json_int(c.L1_degree_upper_bound)},
         {"notes", c.notes}};
  return j;
}

inline json to_json(const PowerWitness& w) {
  return json{{"class", to_string(w.class_poly)},
              {"k", w.k},
              {"p", w.witness_prime},
              {"f", w.residue_degree},
              {"image", w.image_text},
              {"field", w.field_text},
              {"verdict", "non_residue"}};
}

inline json to_json(const KCertificate& cert) {
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(to_json(w));
  json j{{"k", json_int(cert.k)},
         {"route", route_name(cert.route)},
         {"witnesses", witnesses},
         {"caveats", cert.caveats},
         {"certified", cert.caveats.empty()},
         {"constants_used", to_json(cert.constants)}};
  if (cert.A0) j["A0"] = *cert.A0;
  if (cert.p0) j["p0"] = json_int(*cert.p0);
  if (cert.f2_upper) j["f2_upper"] = json_rat(*cert.f2_upper);
  return j;
}

inline json to_json(const DensityReport& rep) {
  return json{{"N", rep.N},
              {"primes_tested", rep.primes_tested},
              {"skipped", rep.skipped},
              {"pd_P", rep.pd_P},
              {"pd_Pk", rep.pd_Pk},
              {"D_count", rep.D_count},
              {"largest_D_prime", rep.largest_D_prime},
              {"density_P", rep.density_P},
              {"density_Pk", rep.density_Pk},
              {"density_D", rep.density_D},
              {"f_hat", rep.f_hat}};
}

inline json to_json(const FailurePrediction& pred) {
  return json{{"moduli", pred.coprime_moduli}, {"description", pred.description}};
}

inline json to_json(const CyclotomicDensities& d) {
  return json{{"dens_P", json_rat(d.dens_P)},
              {"dens_Pk", json_rat(d.dens_Pk)},
              {"dens_D", json_rat(d.dens_D)},
              {"dens_P_approx", d.dens_P.get_d()},
              {"dens_Pk_approx", d.dens_Pk.get_d()},
              {"dens_D_approx", d.dens_D.get_d()}};
}

}  // namespace primediv
