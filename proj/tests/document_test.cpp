#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "hopfpi/document.hpp"
#include "hopfpi/matched_pair.hpp"
#include "hopfpi/post_hopf.hpp"

using namespace hopfpi;

namespace {

const Field kQ = Field::rationals();

GroupHom sign_hom() {
  return GroupHom(FiniteGroup::symmetric3(), FiniteGroup::cyclic(2),
                  {0, 0, 0, 1, 1, 1});
}

HopfPiAlgebra sign_graded_s3() { return group_algebra(sign_hom(), kQ); }

// Serialize, reparse, serialize again: fixed point plus value equality.
void check_roundtrip(const Document& doc) {
  std::string text = serialize_document(doc);
  Document back = parse_document(text);
  CHECK(back == doc);
  CHECK(serialize_document(back) == text);
}

std::string replaced(std::string text, const std::string& from,
                     const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("every document kind roundtrips byte for byte") {
  auto hopf = sign_graded_s3();
  auto brace = opposite_brace(hopf);

  check_roundtrip(make_document(FiniteGroup::klein4()));
  check_roundtrip(make_document(hopf));
  check_roundtrip(make_document(brace));
  check_roundtrip(make_document(brace_to_matched_pair(brace)));
  check_roundtrip(make_document(post_hopf_from_brace(brace)));
  check_roundtrip(make_document(antipode_rb(hopf)));

  FactorizationInput fi;
  fi.unit_factor = Mat(4, 1, kQ);
  fi.unit_factor.at(0, 0) = Scalar::parse("1/2", kQ);
  fi.unit_factor.at(3, 0) = Scalar::from_int(-3, kQ);
  fi.graded_factor = {Mat::identity(2, kQ), Mat(4, 2, kQ)};
  check_roundtrip(make_document(fi));

  ModuleAction ma;
  ma.acting_dims = {2};
  ma.target_dims = {1, 3};
  ma.blocks = {{StructureTensor(1, 2, 1, kQ), StructureTensor(3, 2, 3, kQ)}};
  ma.blocks[0][1].at(2, 1, 0) = Scalar::from_int(5, kQ);
  check_roundtrip(make_document(ma));

  MapFamily mf{FiniteGroup::cyclic(2), {Mat::identity(2, kQ), Mat(2, 2, kQ)}};
  mf.blocks[1].at(0, 1) = Scalar::one(kQ);
  mf.blocks[1].at(1, 0) = Scalar::one(kQ);
  check_roundtrip(make_document(mf));
}

TEST_CASE("prime field documents carry the modulus") {
  Field f7 = Field::prime(7);
  auto doc = make_document(group_algebra(sign_hom(), f7));
  std::string text = serialize_document(doc);
  CHECK(text.find("\"kind\": \"prime\"") != std::string::npos);
  CHECK(text.find("\"p\": 7") != std::string::npos);
  Document back = parse_document(text);
  CHECK(back.field == f7);
  CHECK(back == doc);
}

TEST_CASE("scalar spellings are canonicalized on parse") {
  std::string text =
      R"({"field":{"kind":"rational"},"format_version":"hopfpi/1",
          "kind":"factorization","payload":{"graded_factor":[],
          "unit_factor":{"cols":1,"entries":[["2/4"]],"rows":1}}})";
  Document doc = parse_document(text);
  CHECK(serialize_document(doc).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with input errors") {
  auto group_doc = serialize_document(make_document(FiniteGroup::cyclic(2)));
  auto hopf_doc = serialize_document(make_document(sign_graded_s3()));

  CHECK_THROWS_AS(parse_document("{"), InputError);
  CHECK_THROWS_AS(parse_document("[]"), InputError);
  CHECK_THROWS_AS(parse_document("{\"kind\": \"group\"}"), InputError);
  CHECK_THROWS_AS(
      parse_document(replaced(group_doc, "hopfpi/1", "hopfpi/2")),
      InputError);
  CHECK_THROWS_AS(
      parse_document(replaced(group_doc, "\"group\"", "\"bogus\"")),
      InputError);
  // A group document must not carry a field envelope.
  CHECK_THROWS_AS(
      parse_document(replaced(group_doc, "\"format_version\"",
                              "\"field\": {\"kind\": \"rational\"}, "
                              "\"format_version\"")),
      InputError);
  // Unknown and missing payload keys.
  CHECK_THROWS_AS(
      parse_document(replaced(group_doc, "\"names\"", "\"labels\"")),
      InputError);
  CHECK_THROWS_AS(
      parse_document(replaced(hopf_doc, "\"unit\"", "\"extra_unit\"")),
      InputError);

  // Scalars: zero denominator, wrong JSON type, residue out of range.
  std::string fact =
      R"({"field":{"kind":"rational"},"format_version":"hopfpi/1",
          "kind":"factorization","payload":{"graded_factor":[],
          "unit_factor":{"cols":1,"entries":[["1/2"]],"rows":1}}})";
  CHECK_NOTHROW(parse_document(fact));
  CHECK_THROWS_AS(parse_document(replaced(fact, "1/2", "1/0")), InputError);
  CHECK_THROWS_AS(parse_document(replaced(fact, "1/2", "0.5")), InputError);
  CHECK_THROWS_AS(parse_document(replaced(fact, "\"1/2\"", "5")), InputError);
  CHECK_THROWS_AS(
      parse_document(replaced(
          replaced(fact, "{\"kind\":\"rational\"}",
                   "{\"kind\":\"prime\",\"p\":7}"),
          "1/2", "7")),
      InputError);
  CHECK_THROWS_AS(
      parse_document(replaced(fact, "{\"kind\":\"rational\"}",
                              "{\"kind\":\"prime\",\"p\":6}")),
      InputError);

  // Entry grid disagrees with the declared shape.
  CHECK_THROWS_AS(
      parse_document(replaced(fact, "\"rows\":1", "\"rows\":2")), InputError);
}

TEST_CASE("payload shapes are validated at parse time") {
  // Serialization writes whatever it is given; the parser is the gate.  A
  // block with two rows no longer maps grade 1 into its inverse grade.
  auto rb = antipode_rb(
      group_algebra(GroupHom::identity(FiniteGroup::cyclic(2)), kQ));
  rb.b.blocks[1] = Mat(2, 1, kQ);
  CHECK_THROWS_AS(parse_document(serialize_document(make_document(rb))),
                  InputError);

  MapFamily mf{FiniteGroup::trivial(), {Mat(2, 3, kQ)}};
  CHECK_THROWS_AS(parse_document(serialize_document(make_document(mf))),
                  InputError);

  std::string action =
      R"({"field":{"kind":"rational"},"format_version":"hopfpi/1",
          "kind":"action","payload":{"shape":"twisted"}})";
  CHECK_THROWS_AS(parse_document(action), InputError);
}

TEST_CASE("validation dispatches on the document kind") {
  CHECK(validate_document(make_document(FiniteGroup::symmetric3())).pass());

  auto hopf = sign_graded_s3();
  auto rep = validate_document(make_document(hopf));
  CHECK(rep.pass());
  CHECK(!rep.axioms_checked().empty());

  auto broken = hopf;
  broken.antipode.blocks[0].at(0, 0) += Scalar::one(kQ);
  CHECK(!validate_document(make_document(broken)).pass());

  auto brace = opposite_brace(hopf);
  CHECK(validate_document(make_document(brace)).pass());
  CHECK(validate_document(make_document(brace_to_matched_pair(brace))).pass());
  CHECK(validate_document(make_document(post_hopf_from_brace(brace))).pass());
  CHECK(validate_document(make_document(antipode_rb(hopf))).pass());
}

TEST_CASE("documents load and save through files") {
  namespace fs = std::filesystem;
  auto doc = make_document(sign_graded_s3());
  fs::path path = fs::temp_directory_path() / "hopfpi_document_test.json";
  save_document(doc, path.string());
  Document back = load_document(path.string());
  CHECK(back == doc);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(load_document((fs::temp_directory_path() /
                                 "hopfpi_missing.json").string()),
                  InputError);
}
