#include "epi/words.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

#include "epi/errors.hpp"

namespace epi {

Letter::Letter(std::size_t index) : index_(static_cast<std::uint8_t>(index)) {
  if (index >= kMaxAlphabet) {
    throw WordError("letter index " + std::to_string(index) + " out of range");
  }
}

Letter Letter::from_symbol(char c) {
  if (c < 'a' || c > 'z') {
    throw WordError(std::string("invalid letter '") + c + "'");
  }
  return Letter(static_cast<std::size_t>(c - 'a'));
}

Word Word::from_text(std::string_view text) {
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw WordError("invalid character '" + std::string(1, c) + "' in word \"" +
                      std::string(text) + "\"");
    }
  }
  return Word(std::string(text));
}

Letter Word::operator[](std::size_t i) const { return Letter::from_symbol(text_.at(i)); }

Letter Word::front() const {
  if (empty()) throw PreconditionError("front() of the empty word");
  return (*this)[0];
}

Letter Word::back() const {
  if (empty()) throw PreconditionError("back() of the empty word");
  return (*this)[size() - 1];
}

Word Word::prefix(std::size_t n) const {
  if (n > size()) throw PreconditionError("prefix longer than word");
  return Word(text_.substr(0, n));
}

Word Word::suffix(std::size_t n) const {
  if (n > size()) throw PreconditionError("suffix longer than word");
  return Word(text_.substr(size() - n));
}

Word Word::slice(std::size_t pos, std::size_t n) const {
  if (pos > size() || n > size() - pos) throw PreconditionError("slice out of range");
  return Word(text_.substr(pos, n));
}

Word operator+(const Word& lhs, const Word& rhs) { return Word(lhs.text_ + rhs.text_); }
Word operator+(const Word& lhs, Letter rhs) { return Word(lhs.text_ + rhs.symbol()); }
Word operator+(Letter lhs, const Word& rhs) { return Word(lhs.symbol() + rhs.text_); }

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string_view("ε") : w.view());
}

std::ostream& operator<<(std::ostream& os, Letter a) { return os << a.symbol(); }

Word power(const Word& w, std::size_t exponent) {
  Word::Builder b;
  b.reserve(w.size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) b.append(w);
  return std::move(b).build();
}

Word concat(std::span<const Word> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  Word::Builder b;
  b.reserve(total);
  for (const auto& p : parts) b.append(p);
  return std::move(b).build();
}

std::size_t letter_count(const Word& w, Letter a) {
  return static_cast<std::size_t>(std::count(w.text().begin(), w.text().end(), a.symbol()));
}

std::vector<Letter> alphabet_of(const Word& w) {
  bool seen[kMaxAlphabet] = {};
  for (char c : w.text()) seen[c - 'a'] = true;
  std::vector<Letter> out;
  for (std::size_t i = 0; i < kMaxAlphabet; ++i) {
    if (seen[i]) out.emplace_back(i);
  }
  return out;
}

Word reversal(const Word& w) {
  Word::Builder b;
  b.reserve(w.size());
  b.append_reversed(w);
  return std::move(b).build();
}

bool is_palindrome(const Word& w) {
  const auto& t = w.text();
  return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.rbegin());
}

namespace detail {

std::vector<std::size_t> prefix_function(std::string_view s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

std::size_t kmp_find(std::string_view text, std::string_view pattern, std::size_t from) {
  if (pattern.empty()) return from <= text.size() ? from : std::string_view::npos;
  if (pattern.size() > text.size()) return std::string_view::npos;
  const auto pi = prefix_function(pattern);
  std::size_t k = 0;
  for (std::size_t i = from; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = pi[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == pattern.size()) return i + 1 - k;
  }
  return std::string_view::npos;
}

}  // namespace detail

Word palindromic_closure(const Word& w) {
  if (w.empty()) return w;
  // Longest palindromic suffix = longest prefix of rev(w) that is a suffix of w.
  std::string probe;
  probe.reserve(2 * w.size() + 1);
  probe.append(w.text().rbegin(), w.text().rend());
  probe.push_back('#');
  probe += w.text();
  const std::size_t pal = detail::prefix_function(probe).back();
  Word::Builder b;
  b.reserve(2 * w.size() - pal);
  b.append(w);
  b.append_reversed(w.prefix(w.size() - pal));
  return std::move(b).build();
}

std::size_t count_occurrences(const Word& p, const Word& t) {
  if (p.empty()) throw PreconditionError("count_occurrences: empty pattern");
  if (p.size() > t.size()) return 0;
  const auto pi = detail::prefix_function(p.view());
  const auto& text = t.text();
  const auto& pat = p.text();
  std::size_t count = 0;
  std::size_t k = 0;
  for (char c : text) {
    while (k > 0 && (k == pat.size() || c != pat[k])) k = pi[k - 1];
    if (c == pat[k]) ++k;
    if (k == pat.size()) ++count;
  }
  return count;
}

bool is_prefix(const Word& v, const Word& w) { return w.view().starts_with(v.view()); }
bool is_suffix(const Word& v, const Word& w) { return w.view().ends_with(v.view()); }

bool is_factor(const Word& v, const Word& w) {
  return detail::kmp_find(w.view(), v.view()) != std::string_view::npos;
}

Word strip_prefix(const Word& v, const Word& w) {
  if (!is_prefix(v, w)) {
    throw PreconditionError("strip_prefix: \"" + v.text() + "\" is not a prefix of \"" +
                            w.text() + "\"");
  }
  return w.suffix(w.size() - v.size());
}

Word strip_suffix(const Word& v, const Word& w) {
  if (!is_suffix(v, w)) {
    throw PreconditionError("strip_suffix: \"" + v.text() + "\" is not a suffix of \"" +
                            w.text() + "\"");
  }
  return w.prefix(w.size() - v.size());
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw PreconditionError("is_primitive: empty word");
  const std::size_t n = w.size();
  const std::size_t period = n - detail::prefix_function(w.view()).back();
  return period == n || n % period != 0;
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  return is_factor(v, u + u);
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
  if (n > w.size()) throw PreconditionError("factor_complexity: n exceeds word length");
  std::unordered_set<std::string_view> factors;
  const std::string_view t = w.view();
  for (std::size_t q = 0; q + n <= t.size(); ++q) factors.insert(t.substr(q, n));
  return factors.size();
}

}  // namespace epi
