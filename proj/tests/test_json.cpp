#include <doctest.h>

#include "epi/closed_form.hpp"
#include "epi/errors.hpp"
#include "epi/json_io.hpp"

using epi::Word;

TEST_CASE("factorization JSON round-trips") {
  const auto f = epi::c_factorize(Word::from_text("abaababaaba"));
  const auto j = epi::to_json(f);
  CHECK(j.at("scheme") == "c");
  CHECK(j.at("input_length") == 11);
  CHECK(j.at("cut_by_input_end") == true);
  CHECK(epi::factorization_from_json(j) == f);
  CHECK(epi::factorization_from_json(nlohmann::json::parse(j.dump())).joined().text() == "abaababaaba");
}

TEST_CASE("malformed factorization JSON is rejected") {
  auto j = epi::to_json(epi::z_factorize(Word::from_text("abc")));
  j["input_length"] = 4;
  CHECK_THROWS_AS(epi::factorization_from_json(j), epi::PreconditionError);
  CHECK_THROWS_AS(epi::factorization_from_json(nlohmann::json{{"scheme", "z"}}), epi::PreconditionError);
}

TEST_CASE("closed-form c JSON carries the transient") {
  const epi::MorphismTable table(epi::DirectiveSpec::parse("|a b"));
  const auto transient = epi::c_transient(table);
  const auto j = epi::closed_form_json(epi::c_factorization(table, 5), &transient);
  CHECK(j.at("source") == "closed_form");
  CHECK(j.at("transient") == nlohmann::json{"a", "b", "a"});
  CHECK(j.at("i") == 2);
  CHECK(j.at("j") == 3);
  CHECK(j.at("k0") == 2);
  CHECK(j.at("m") == 1);
  CHECK(j.at("onset") == 4);
}
