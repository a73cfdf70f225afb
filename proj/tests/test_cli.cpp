#include <doctest.h>

#include "hwc/pipeline.hpp"
#include "hwc/specfile.hpp"

using namespace hwc;

namespace {

const char* kSpec = R"(algspec 1
# K[x,y]/(x^2,y^2)
field rational
basis 1 x y xy
degree 0 -1 1 0
product 1 1 1 1
product 1 x x 1
product 1 y y 1
product 1 xy xy 1
product x 1 x 1
product y 1 y 1
product xy 1 xy 1
product x y xy 1
product y x xy 1
unit 1
aminus 1, x
tpart 1
aplus 1, y
tau x y 1
tau y x 1
tau 1 1 1
tau xy xy 1
)";

int error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("spec file parses to the built-in family") {
  BuiltAlgebra B = parse_spec(kSpec);
  BuiltAlgebra F = build_family("trunc:x:-1:2,y:1:2", Field::rationals());
  CHECK(B.A->dim() == 4);
  CHECK(validate_algebra(*B.A).ok());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(B.A->mul_basis(i, j) == F.A->mul_basis(i, j));
  REQUIRE(B.tau);
  for (const auto& c : check_anti_involution(*B.A, *B.tau, &B.tri)) CHECK_MESSAGE(c.ok, c.name);
}

TEST_CASE("write_spec round-trips") {
  for (std::string fam : {"trunc:x:-1:3,y:1:3", "sl2:3", "mat:2"}) {
    Field f = fam.rfind("sl2", 0) == 0 ? Field::prime(3) : Field::rationals();
    BuiltAlgebra B = build_family(fam, f);
    std::string text = write_spec(B);
    BuiltAlgebra C = parse_spec(text);
    CHECK(write_spec(C) == text);
    CHECK(C.named.size() == B.named.size());
  }
}

TEST_CASE("spec errors carry line and column") {
  CHECK(error_line("hello\n") == 1);
  CHECK(error_line("algspec 2\n") == 1);
  std::string s = kSpec;
  CHECK(error_line(s + "colour red\n") == 23);
  try {
    parse_spec("algspec 1\nfield rational\nbasis 1 x\ndegree 0 -1\nproduct 1 q 1 1\n");
    FAIL("expected an error");
  } catch (const SpecError& e) {
    CHECK(e.line == 5);
    CHECK(e.col == 11);
  }
  CHECK(error_line("algspec 1\nfield prime 4\n") == 2);
  CHECK(error_line("algspec 1\nbasis 1 1\n") == 2);
  CHECK(error_line("algspec 1\nfield rational\nbasis 1\ndegree 0\nproduct 1 1 1 x\n") == 5);
  CHECK(error_line("algspec 1\nfield rational\nbasis 1\ndegree 0\nunit 1\n") == 5);
}

TEST_CASE("reports round-trip and are deterministic") {
  BuiltAlgebra B = build_family("trunc:x:-1:2,y:1:2", Field::rationals());
  Json r1 = command_report("cover", B, "family", {1, 0});
  Json r2 = command_report("cover", B, "family", {1, 0});
  CHECK(render_json(r1) == render_json(r2));
  CHECK(parse_report(render_json(r1)) == r1);
  CHECK(r1["ok"].get<bool>());
  CHECK(r1["results"]["dim_C"] == 5);
  CHECK(r1["results"]["faithfulness"]["cover"] == true);
  CHECK(r1["version"] == library_version());
  CHECK(r1["input"]["sha256"].get<std::string>().size() == 64);
  CHECK(render_text(r1).find("dim_C: 5") != std::string::npos);
  BuiltAlgebra S = parse_spec(kSpec);
  Json r3 = command_report("cover", S, "spec", {1, 0});
  CHECK(r3["results"] == r1["results"]);
}

TEST_CASE("sha256 of a known string") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("Laurent polynomials serialize as sorted pairs") {
  LaurentPoly p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, 1);
  Json j = laurent_json(p);
  CHECK(j.dump() == "[[-1,1],[2,3]]");
  CHECK(laurent_from_json(j) == p);
}

TEST_CASE("pipeline commands on golden inputs") {
  BuiltAlgebra B = build_family("trunc:x:-1:2,y:1:2", Field::rationals());
  auto cd = run_celldatum(B, {});
  CHECK(cd.ok);
  CHECK(cd.results["size"] == 2);
  auto v = run_validate(B, {});
  CHECK(v.ok);
  CHECK_THROWS_AS(run_cover(B, {0, 0}), PreconditionError);
  BuiltAlgebra S = build_family("sl2:3", Field::prime(3));
  auto m = run_matrices(S, {});
  CHECK(m.results["verdict"] == "NOT cellular");
  CHECK(m.results["factorization"] == true);
  CHECK(m.results["rank_one"] == true);
  auto all = run_all(build_family("trunc:x:-1:3,y:1:3", Field::rationals()), {});
  CHECK(all.ok);
}
