#include <doctest.h>

#include <random>

#include "epi/errors.hpp"
#include "epi/factorizer.hpp"
#include "oracles.hpp"

using epi::Factorization;
using epi::Scheme;
using epi::Word;

namespace {

Word w(const std::string& text) { return Word::from_text(text); }

std::vector<std::string> texts(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& x : f.factors) out.push_back(x.text());
  return out;
}

using Strings = std::vector<std::string>;

void agree_with_oracles(const std::string& s) {
  const Word word = w(s);
  const auto z_ref = oracle::z_parse(s);
  const auto c_ref = oracle::c_parse(s);
  const auto z = epi::z_factorize(word);
  const auto c = epi::c_factorize(word);
  CHECK_MESSAGE(texts(z) == z_ref.factors, s);
  CHECK_MESSAGE(z.last_complete == z_ref.last_complete, s);
  CHECK_MESSAGE(texts(c) == c_ref.factors, s);
  CHECK_MESSAGE(z == epi::factorize_via_lpf(word, Scheme::Z), s);
  CHECK_MESSAGE(c == epi::factorize_via_lpf(word, Scheme::C), s);
  const auto ref_lpf = oracle::lpf(s);
  const epi::LpfArray fast = epi::lpf(word);
  CHECK_MESSAGE(std::equal(fast.begin(), fast.end(), ref_lpf.begin(), ref_lpf.end()), s);
  CHECK(z.joined() == word);
  CHECK(c.joined() == word);
}

}  // namespace

TEST_CASE("c-factorization examples") {
  CHECK(texts(epi::c_factorize(w("ab"))) == Strings{"a", "b"});
  CHECK(texts(epi::c_factorize(w("aaaa"))) == Strings{"a", "aaa"});
  const auto fib = epi::c_factorize(w("abaababaaba"));
  CHECK(texts(fib) == Strings{"a", "b", "a", "aba", "baaba"});
  CHECK(fib.cut_by_input_end);
  CHECK(fib.trusted_count() == 4);
  CHECK_FALSE(epi::c_factorize(w("abc")).cut_by_input_end);
}

TEST_CASE("z-factorization examples") {
  const auto abc = epi::z_factorize(w("abc"));
  CHECK(texts(abc) == Strings{"a", "b", "c"});
  CHECK(abc.last_complete);
  const auto aaa = epi::z_factorize(w("aaa"));
  CHECK(texts(aaa) == Strings{"a", "aa"});
  CHECK_FALSE(aaa.last_complete);
  const auto fib = epi::z_factorize(w("abaababaabaab"));
  CHECK(texts(fib) == Strings{"a", "b", "aa", "bab", "aabaa", "b"});
  CHECK_FALSE(fib.last_complete);
  CHECK(fib.complete_count() == 5);
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(epi::z_factorize(Word()), epi::PreconditionError);
  CHECK_THROWS_AS(epi::c_factorize(Word()), epi::PreconditionError);
  CHECK_THROWS_AS(epi::factorize_via_lpf(Word(), Scheme::Z), epi::PreconditionError);
  CHECK(epi::lpf(Word()).empty());
}

TEST_CASE("lpf examples") {
  CHECK(epi::lpf(w("ab")) == epi::LpfArray{0, 0});
  CHECK(epi::lpf(w("aaaa")) == epi::LpfArray{0, 3, 2, 1});
  CHECK(epi::lpf(w("abaab")) == epi::LpfArray{0, 0, 1, 2, 1});
  CHECK(epi::lpf_naive(w("abaab")) == epi::LpfArray{0, 0, 1, 2, 1});
}

TEST_CASE("factorizing through lpf") {
  CHECK(texts(epi::factorize_via_lpf(w("aaaa"), Scheme::C)) == Strings{"a", "aaa"});
  const auto z = epi::factorize_via_lpf(w("aaaa"), Scheme::Z);
  CHECK(texts(z) == Strings{"a", "aaa"});
  CHECK_FALSE(z.last_complete);
  CHECK(z == epi::z_factorize(w("aaaa")));
  CHECK(texts(epi::factorize_via_lpf(w("abc"), Scheme::Z)) == Strings{"a", "b", "c"});
  CHECK_THROWS_AS(epi::factorize_via_lpf(w("ab"), epi::LpfArray{0}, Scheme::Z), epi::PreconditionError);
}

TEST_CASE("factor counts") {
  CHECK(epi::factor_counts(w("abc")).z == 3);
  CHECK(epi::factor_counts(w("abc")).c == 3);
  // z: a|b|aa|bab then the incomplete aaba; c: a|b|a|aba|baaba
  CHECK(epi::factor_counts(w("abaababaaba")).z == 4);
  CHECK(epi::factor_counts(w("abaababaaba")).c == 5);
  CHECK(epi::factor_counts(w("aaaa")).z == 1);
  CHECK(epi::factor_counts(w("aaaa")).c == 2);
}

TEST_CASE("engines match the definitions on every short binary word") {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s(len, 'a');
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i) & 1 ? 'b' : 'a';
      agree_with_oracles(s);
    }
  }
}

TEST_CASE("engines match the definitions on ternary and random words") {
  for (std::size_t code = 0; code < 729; ++code) {  // 3^6
    std::string s;
    for (std::size_t c = code; s.size() < 6; c /= 3) s += static_cast<char>('a' + c % 3);
    agree_with_oracles(s);
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 120)(rng);
    std::uniform_int_distribution<int> pick(0, i % 3 == 0 ? 3 : 1);
    std::string s(len, 'a');
    for (auto& c : s) c = static_cast<char>('a' + pick(rng));
    agree_with_oracles(s);
  }
}

TEST_CASE("suffix array sorts the suffixes") {
  const std::string s = "abaababaabaababaababaab";
  const auto sa = epi::suffix_array(s);
  const auto lcp = epi::lcp_array(s, sa);
  REQUIRE(sa.size() == s.size());
  for (std::size_t r = 1; r < sa.size(); ++r) {
    const auto prev = s.substr(sa[r - 1]);
    const auto cur = s.substr(sa[r]);
    CHECK(prev < cur);
    std::size_t common = 0;
    while (common < prev.size() && common < cur.size() && prev[common] == cur[common]) ++common;
    CHECK(lcp[r] == common);
  }
}
