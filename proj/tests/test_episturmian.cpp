#include <doctest.h>

#include "epi/directive.hpp"
#include "epi/episturmian.hpp"
#include "epi/errors.hpp"
#include "oracles.hpp"

using epi::DirectiveSpec;
using epi::Word;

namespace {

Word w(const char* text) { return Word::from_text(text); }
const DirectiveSpec fib = DirectiveSpec::parse("|a b");
const DirectiveSpec trib = DirectiveSpec::parse("|a b c");

}  // namespace

TEST_CASE("psi morphism") {
  const auto a = epi::Letter::from_symbol('a');
  CHECK(epi::psi(a, w("a")) == w("a"));
  CHECK(epi::psi(a, w("b")) == w("ab"));
  CHECK(epi::psi(a, w("bab")) == w("abaab"));
  CHECK(epi::psi(a, w("cbaab")).text() == oracle::psi('a', "cbaab"));
}

TEST_CASE("mu composes psi over the directive prefix") {
  CHECK(epi::mu(fib, 0, w("ab")) == w("ab"));
  CHECK(epi::mu(fib, 2, w("a")) == w("aba"));
  CHECK(epi::mu(fib, 3, w("b")) == w("abaab"));
  CHECK(epi::mu(trib, 2, w("c")).text() == oracle::psi('a', oracle::psi('b', "c")));
}

TEST_CASE("increments") {
  CHECK(epi::increment(fib, 0) == w("a"));
  CHECK(epi::increment(fib, 3) == w("abaab"));
  CHECK(epi::increment(trib, 2) == w("abac"));
}

TEST_CASE("palindromic prefixes against iterated brute-force closure") {
  CHECK(epi::palindromic_prefix(fib, 1) == Word());
  CHECK(epi::palindromic_prefix(fib, 3) == w("aba"));
  CHECK(epi::palindromic_prefix(fib, 5) == w("abaababaaba"));
  CHECK_THROWS_AS(epi::palindromic_prefix(fib, 0), epi::PreconditionError);
  for (const char* text : {"|a b", "|a b c", "a^2 b | a b", "c a^3 b | c a b", "b^3 a | b a"}) {
    const auto spec = DirectiveSpec::parse(text);
    const auto expected = oracle::palindromic_prefixes(epi::expand_directive(spec, 14).text(), 15);
    const epi::MorphismTable table(spec);
    for (std::size_t n = 1; n < expected.size(); ++n) {
      CHECK_MESSAGE(table.palindromic_prefix(n).text() == expected[n - 1], text << " n=" << n);
    }
  }
}

TEST_CASE("border palindromes") {
  CHECK(epi::border_palindrome(fib, 3) == Word());
  CHECK(epi::border_palindrome(fib, 4) == w("a"));
  CHECK_THROWS_AS(epi::border_palindrome(fib, 2), epi::PreconditionError);
}

TEST_CASE("standard prefixes") {
  CHECK(epi::standard_prefix(fib, 0) == Word());
  CHECK(epi::standard_prefix(fib, 13) == w("abaababaabaab"));
  CHECK(epi::standard_prefix(trib, 7) == w("abacaba"));
  const epi::MorphismTable table(fib);
  const Word& u = table.palindromic_prefix(12);
  CHECK(table.standard_prefix(u.size() - 3) == u.prefix(u.size() - 3));
}

TEST_CASE("binary standard words") {
  CHECK(epi::standard_word(fib, -1) == w("b"));
  CHECK(epi::standard_word(fib, 0) == w("a"));
  CHECK(epi::standard_word(fib, 2) == w("aba"));
  CHECK(epi::standard_word(DirectiveSpec::parse("a^2 b | a b"), 1) == w("aab"));
  CHECK_THROWS_AS(epi::standard_word(trib, 1), epi::SpecError);
}

TEST_CASE("horizon limits are reported, not exceeded") {
  const epi::MorphismTable table(fib, epi::Horizon{10, 1000});
  // u_11 is built from x_10, the last position inside the horizon
  CHECK_NOTHROW(table.palindromic_prefix(11));
  CHECK_THROWS_AS(table.palindromic_prefix(12), epi::HorizonError);
  const epi::MorphismTable short_table(fib, epi::Horizon{64, 100});
  CHECK_THROWS_AS(short_table.palindromic_prefix(20), epi::HorizonError);
}
