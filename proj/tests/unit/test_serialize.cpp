#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "bicoalg/serialize.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bicoalg;
using nlohmann::json;

namespace {

std::string pointer_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("bicoalgebroid documents round-trip") {
  Document doc;
  doc.bicoalgebroid = coenveloping_bico(grouplike_coalgebra(2));
  const std::string text = write_document(doc);
  const Document back = parse_document(text);
  REQUIRE(back.bicoalgebroid.has_value());
  CHECK(back.bicoalgebroid->mu_total() == doc.bicoalgebroid->mu_total());
  CHECK(back.bicoalgebroid->total().delta == doc.bicoalgebroid->total().delta);
  CHECK(write_document(back) == text);
}

TEST_CASE("F_p documents round-trip") {
  Document doc;
  doc.field = Field::prime(5);
  doc.bicoalgebroid = in_field(group_hopf(FiniteGroup::cyclic(2)), doc.field);
  const Document back = parse_document(write_document(doc));
  CHECK(back.field == doc.field);
  CHECK(back.bicoalgebroid->eta() == doc.bicoalgebroid->eta());
}

TEST_CASE("BCC documents round-trip and keep the verdict") {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  Document doc;
  doc.bicoalgebroid = group_hopf(g);
  doc.bcc = regular_bcc(g, *doc.bicoalgebroid);
  const Document back = parse_document(write_document(doc));
  REQUIRE(back.bcc.has_value());
  CHECK(verify_bcc(*back.bcc, *back.bicoalgebroid).passed() == verify_bcc(*doc.bcc, *doc.bicoalgebroid).passed());
}

TEST_CASE("schema errors carry a JSON pointer") {
  Document doc;
  doc.bicoalgebroid = group_hopf(FiniteGroup::cyclic(2));
  json j = json::parse(write_document(doc));

  json wrong_row = j;
  wrong_row["bicoalgebroid"]["alpha"][0].push_back("1");
  CHECK(pointer_of(wrong_row.dump()) == "/bicoalgebroid/alpha/0");

  json wrong_field = j;
  wrong_field["field"] = {{"Fp", 7}};
  wrong_field["bicoalgebroid"]["beta"][0][1] = "1 mod 5";
  CHECK(pointer_of(wrong_field.dump()) == "/bicoalgebroid/beta/0/1");

  json missing = j;
  missing["bicoalgebroid"].erase("eta");
  CHECK(pointer_of(missing.dump()).rfind("/bicoalgebroid", 0) == 0);

  CHECK_THROWS_AS(parse_document("{not json"), SchemaError);
}

TEST_CASE("report JSON lists witnesses for failures") {
  CheckReport r;
  r.pass("ok", 3);
  r.fail("bad", {2, "x", "y", "note"});
  const json j = json::parse(report_json(r));
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["witness"].is_null());
  CHECK(j["checks"][1]["witness"]["basis_index"] == 2);
}
