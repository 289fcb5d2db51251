#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "epi/closed_form.hpp"
#include "epi/errors.hpp"
#include "oracles.hpp"

using epi::DirectiveSpec;
using epi::MorphismTable;
using epi::Word;

namespace {

using Strings = std::vector<std::string>;

Strings texts(const epi::Factorization& f) {
  Strings out;
  for (const auto& x : f.factors) out.push_back(x.text());
  return out;
}

/// u_{count} built by the string oracle from the expanded directive word.
std::string oracle_prefix(const DirectiveSpec& spec, std::size_t count) {
  return oracle::palindromic_prefixes(epi::expand_directive(spec, count).text(), count).back();
}

}  // namespace

TEST_CASE("closed-form z-factors, Fibonacci and Tribonacci") {
  const MorphismTable fib(DirectiveSpec::parse("|a b"));
  const MorphismTable trib(DirectiveSpec::parse("|a b c"));
  CHECK(epi::z_factor_k(fib, 1).text() == "a");
  CHECK(epi::z_factor_k(fib, 4).text() == "bab");
  CHECK(epi::z_factor_k(trib, 3).text() == "ac");
  CHECK(texts(epi::z_factorization(fib, 5)) == Strings{"a", "b", "aa", "bab", "aabaa"});
  CHECK(texts(epi::z_factorization(trib, 4)) == Strings{"a", "b", "ac", "abaa"});
  CHECK(texts(epi::z_factorization(MorphismTable(DirectiveSpec::parse("a^2 | b a")), 1)) == Strings{"a"});
  CHECK_THROWS_AS(epi::z_factor_k(fib, 0), epi::PreconditionError);
}

TEST_CASE("closed forms need an infinite, nonperiodic directive word") {
  const MorphismTable finite(DirectiveSpec::parse("a^2 b a"));
  CHECK_THROWS_AS(epi::z_factor_k(finite, 2), epi::SpecError);
  CHECK_THROWS_AS(epi::c_transient(finite), epi::SpecError);
}

TEST_CASE("c-transient") {
  const auto fib = epi::c_transient(MorphismTable(DirectiveSpec::parse("|a b")));
  CHECK(fib.initial_factors == std::vector<Word>{Word::from_text("a"), Word::from_text("b"), Word::from_text("a")});
  CHECK(fib.i == 2);
  CHECK(fib.j == 3);
  CHECK(fib.m == 1);
  CHECK(fib.k0 == 2);

  const auto squared = epi::c_transient(MorphismTable(DirectiveSpec::parse("a^2 b | a b")));
  CHECK(squared.initial_factors[0].text() == "a");
  CHECK(squared.initial_factors[1].text() == "a");
  CHECK(squared.m == 0);
  CHECK(squared.j - squared.i == 2);

  const auto trib = epi::c_transient(MorphismTable(DirectiveSpec::parse("|a b c")));
  CHECK(trib.j - trib.i == 2);
  CHECK(trib.i == 3);
  CHECK(trib.j == 5);
}

TEST_CASE("steady-state c-factors") {
  const MorphismTable fib(DirectiveSpec::parse("|a b"));
  CHECK(epi::c_factor_k(fib, 3).text() == "a");
  CHECK(epi::c_factor_k(fib, 4).text() == "aba");
  CHECK(epi::c_factor_k(fib, 5).text() == "baaba");
  CHECK(epi::c_factor_k(fib, 4) == fib.reversed_increment(2));
  CHECK_THROWS_AS(epi::c_factor_k(fib, 2), epi::PreconditionError);
}

TEST_CASE("z-factors read off the c-factors") {
  const MorphismTable fib(DirectiveSpec::parse("|a b"));
  const auto transient = epi::c_transient(fib);
  CHECK(epi::z_from_c_onset(transient) == 4);
  CHECK(epi::z_from_c(fib, 4).text() == "bab");
  CHECK(epi::z_from_c(fib, 5).text() == "aabaa");
  CHECK_THROWS_AS(epi::z_from_c(fib, 3), epi::PreconditionError);
}

TEST_CASE("closed forms agree with the string oracles") {
  for (const char* text : {"|a b", "|b a", "a^3 b^2 | a b", "b a^2 | b a", "|a b c", "c a^2 | b c a",
                           "a b^2 c | a b c", "b^3 a^2 c | a b c"}) {
    const auto spec = DirectiveSpec::parse(text);
    const MorphismTable table(spec);
    const std::size_t k = 6;
    const auto u = oracle_prefix(spec, epi::run_start(spec, k + 2));
    const auto z = oracle::z_parse(u);
    REQUIRE(z.factors.size() > k);
    CHECK_MESSAGE(texts(epi::z_factorization(table, k)) == Strings(z.factors.begin(), z.factors.begin() + k), text);

    const auto c = oracle::c_parse(u);
    const std::size_t trusted = c.factors.size() - 1;
    CHECK_MESSAGE(texts(epi::c_factorization(table, trusted)) == Strings(c.factors.begin(), c.factors.end() - 1),
                  text);
  }
}

TEST_CASE("binary standard words in the c-factors") {
  for (const char* text : {"|a b", "a^2 b^3 | a b", "b^2 | a b"}) {
    const auto report = epi::sturmian_c_check(MorphismTable(DirectiveSpec::parse(text)), 8);
    CHECK_MESSAGE(report.all_passed(), text);
    CHECK(report.checks.size() > 8);
  }
  CHECK_THROWS_AS(epi::sturmian_c_check(MorphismTable(DirectiveSpec::parse("|a b c")), 4), epi::SpecError);
}

TEST_CASE("golden factorizations") {
  for (const char* name : {"fibonacci.json", "tribonacci.json"}) {
    std::ifstream in(std::string(EPI_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    const auto golden = nlohmann::json::parse(in);
    const auto spec = DirectiveSpec::parse(golden.at("directive").get<std::string>());
    const MorphismTable table(spec);
    const auto z = golden.at("z").get<Strings>();
    const auto c = golden.at("c").get<Strings>();
    CHECK_MESSAGE(texts(epi::z_factorization(table, z.size())) == z, name);
    CHECK_MESSAGE(texts(epi::c_factorization(table, c.size())) == c, name);
    const auto u = table.palindromic_prefix(epi::run_start(spec, 10)).text();
    const auto z_ref = oracle::z_parse(u).factors;
    const auto c_ref = oracle::c_parse(u).factors;
    CHECK(Strings(z_ref.begin(), z_ref.begin() + z.size()) == z);
    CHECK(Strings(c_ref.begin(), c_ref.begin() + c.size()) == c);
  }
}
