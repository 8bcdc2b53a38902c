#include <catch2/catch_amalgamated.hpp>

#include "primediv/report_json.hpp"

using namespace primediv;

TEST_CASE("report schema carries the fixed field names") {
  IntPolynomial P{-2, -1, 1};
  auto rep = classify_roots(P);
  auto cons = compute_constants(P, rep);

  json jc = to_json(rep);
  for (const char* key : {"r1", "r2", "r3", "classes"}) CHECK(jc.contains(key));
  REQUIRE(jc["classes"].is_array());
  for (const auto& cls : jc["classes"]) {
    CHECK(cls.contains("kind"));
    CHECK(cls.contains("minimal_polynomial"));
    CHECK(cls.contains("count"));
  }

  json jk = to_json(cons);
  for (const char* key : {"k0", "p_min", "A0", "c", "V", "notes"}) CHECK(jk.contains(key));
  CHECK(jk["k0"] == 4);
  CHECK(jk["A0"] == 1);
  CHECK(jk["c"] == 2);
  CHECK(jk["V"] == 1);

  auto certs = suggest_k(P, {1, 10000, kDefaultSeed});
  REQUIRE(!certs.empty());
  json jcert = to_json(certs[0]);
  for (const char* key : {"k", "route", "witnesses", "caveats", "constants_used"})
    CHECK(jcert.contains(key));
  CHECK(jcert["k"] == 4);
  CHECK(jcert["route"] == "mixed");

  DensityReport dr = scan(P, 4, 10000);
  json jd = to_json(dr);
  for (const char* key : {"N", "pd_P", "pd_Pk", "D_count", "f_hat"}) CHECK(jd.contains(key));
  CHECK(jd["N"] == 10000);

  json jf = to_json(predict_failures(P));
  CHECK(jf.contains("moduli"));
  CHECK(jf.contains("description"));
}

TEST_CASE("integers that overflow 64 bits render as decimal strings") {
  CHECK(json_int(Int(5)) == 5);
  CHECK(json_int(Int(-7)) == -7);
  Int big = pow_int(Int(10), 30);
  json j = json_int(big);
  REQUIRE(j.is_string());
  CHECK(j == "1000000000000000000000000000000");
}

TEST_CASE("witness serialization names the evidence") {
  IntPolynomial P{1, -3, 1};
  auto rep = classify_roots(P);
  auto w = certify_non_kth_power(rep.classes[0], 7, P, 100);
  REQUIRE(w.has_value());
  json j = to_json(*w);
  CHECK(j["p"] == 29);
  CHECK(j["k"] == 7);
  CHECK(j["f"] == 1);
  CHECK(j["verdict"] == "non_residue");
}
