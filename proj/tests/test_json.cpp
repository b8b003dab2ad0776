#include <doctest.h>

#include "pgeigen/json_io.hpp"
#include "pgeigen/qcomb.hpp"

using namespace pgeigen;

TEST_CASE("rational strings always carry a denominator") {
  CHECK(rat_string(Rat(5)) == "5/1");
  CHECK(rat_string(Rat(0)) == "0/1");
  CHECK(rat_string(Rat(-3, 2)) == "-3/2");
  Rat r(6, 4);
  r.canonicalize();
  CHECK(rat_string(r) == "3/2");
}

TEST_CASE("scalar encoding has conductor and dense coefficients") {
  // (3 phi - 3) / 2 over Q(zeta_3): each coefficient is a coordinate pair.
  CHECK(scalar_json(eigenvalue_poly(2, 1, 3)).dump() ==
        R"({"p":3,"coeffs":[["-3/2","0/1"],["3/2","0/1"]]})");
  CHECK(scalar_json(eigenvalue_poly(1, 0, 2)).dump() ==
        R"({"p":2,"coeffs":[["-1/1"],["2/1"]]})");
  CHECK(scalar_json(PhiPoly(2)).dump() == R"({"p":2,"coeffs":[]})");
  CHECK(cyclo_json(root_of_unity(3, 2)).dump() == R"(["-1/1","-1/1"])");
}

TEST_CASE("subspace encoding lists normal-form columns") {
  const Field& f2 = Field::get(2, 1);
  CHECK(subspace_json(Subspace::zero(f2, 2)).dump() == R"({"n":2,"k":0,"cols":[]})");
  CHECK(subspace_json(Subspace::canonicalize(f2, 2, {{0, 1}})).dump() ==
        R"({"n":2,"k":1,"cols":[[0,1]]})");
  CHECK(subspace_json(Subspace::full(f2, 2)).dump() ==
        R"({"n":2,"k":2,"cols":[[1,0],[0,1]]})");
}

TEST_CASE("character and index encodings") {
  Character chi{2, 1, 1, {1}};
  CHECK(character_json(chi).dump() == R"({"level":1,"a":[1]})");

  IndexSeq alpha{2, 1, 2, {IndexEntry{IndexEntry::Kind::zero, {}},
                           IndexEntry{IndexEntry::Kind::one, {}}}};
  CHECK(index_json(alpha).dump() == R"(["0","1"])");

  IndexSeq beta{2, 1, 2, {IndexEntry{IndexEntry::Kind::chi, chi}}};
  CHECK(index_json(beta).dump() == R"([{"chi":{"level":1,"a":[1]}}])");
}

TEST_CASE("vector entries appear in canonical subspace order") {
  const Field& f2 = Field::get(2, 1);
  PosetVector v(f2, 1);
  // Insert out of order; serialization must sort by the canonical ordering.
  v.add_term(Subspace::full(f2, 1), PhiPoly::from_rational(2, Rat(-1)));
  v.add_term(Subspace::zero(f2, 1), PhiPoly::monomial(2, 1, Rat(1)));
  CHECK(vector_json(v).dump() ==
        R"({"n":1,"entries":[{"subspace":{"n":1,"k":0,"cols":[]},"scalar":{"p":2,"coeffs":[["0/1"],["1/1"]]}},{"subspace":{"n":1,"k":1,"cols":[[1]]},"scalar":{"p":2,"coeffs":[["-1/1"]]}}]})");
}

TEST_CASE("frozen basis record for the character eigenvector") {
  const Field& f2 = Field::get(2, 1);
  auto basis = build_basis(f2, 2);
  REQUIRE(basis.size() == 5);
  CHECK(basis_record_json(basis[4]).dump() ==
        R"({"index":[{"chi":{"level":1,"a":[1]}}],"weight":1,"vector":{"n":2,"entries":[{"subspace":{"n":2,"k":1,"cols":[[0,1]]},"scalar":{"p":2,"coeffs":[["1/1"]]}},{"subspace":{"n":2,"k":1,"cols":[[1,1]]},"scalar":{"p":2,"coeffs":[["-1/1"]]}}]}})");
  CHECK(basis_record_json(basis[0]).dump() ==
        R"({"index":["0","0"],"weight":0,"vector":{"n":2,"entries":[{"subspace":{"n":2,"k":0,"cols":[]},"scalar":{"p":2,"coeffs":[["1/1"]]}},{"subspace":{"n":2,"k":1,"cols":[[1,0]]},"scalar":{"p":2,"coeffs":[["1/1"]]}},{"subspace":{"n":2,"k":1,"cols":[[0,1]]},"scalar":{"p":2,"coeffs":[["1/1"]]}},{"subspace":{"n":2,"k":1,"cols":[[1,1]]},"scalar":{"p":2,"coeffs":[["1/1"]]}},{"subspace":{"n":2,"k":2,"cols":[[1,0],[0,1]]},"scalar":{"p":2,"coeffs":[["1/1"]]}}]}})");
}

TEST_CASE("field encoding carries the modulus") {
  CHECK(field_json(Field::get(2, 2)).dump() == R"({"p":2,"m":2,"modulus":[1,1,1]})");
  CHECK(field_json(Field::get(5, 1)).dump() == R"({"p":5,"m":1,"modulus":[0,1]})");
}

TEST_CASE("report encoding zeroes the clock unless asked") {
  const Field& f2 = Field::get(2, 1);
  SuiteReport r = suite_eigen(f2, 1);
  nlohmann::ordered_json j = report_json(r);
  CHECK(j.at("suite") == "eigen");
  CHECK(j.at("q") == 2);
  CHECK(j.at("n") == 1);
  CHECK(j.at("phi_mode") == "symbolic");
  CHECK(j.at("checks").get<long>() > 0);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("failures").empty());
  CHECK(j.at("seconds").get<double>() == 0.0);
  CHECK_FALSE(j.contains("skipped"));

  nlohmann::ordered_json timed = report_json(r, true);
  CHECK(timed.at("seconds").get<double>() >= 0.0);

  // Skipped reports carry the reason.
  VerifyOptions opts;
  opts.max_lattice = 1;
  nlohmann::ordered_json sk = report_json(suite_eigen(f2, 2, opts));
  CHECK(sk.at("skipped") == true);
  CHECK_FALSE(sk.at("reason").get<std::string>().empty());

  // Failure entries serialize check and witness.
  SuiteReport bad = suite_crosscheck(f2, 2, Rat(1, 3), 1e-18);
  nlohmann::ordered_json bj = report_json(bad);
  REQUIRE_FALSE(bj.at("failures").empty());
  CHECK(bj.at("failures")[0].contains("check"));
  CHECK(bj.at("failures")[0].contains("witness"));
}
