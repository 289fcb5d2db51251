#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epi {

inline constexpr std::size_t kMaxAlphabet = 26;

/// A letter of a dense alphabet {0, 1, ..., k-1}, printed as 'a', 'b', ...
class Letter {
 public:
  constexpr Letter() = default;
  explicit Letter(std::size_t index);

  static Letter from_symbol(char c);

  constexpr std::size_t index() const { return index_; }
  constexpr char symbol() const { return static_cast<char>('a' + index_); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Immutable finite word. Storage is the text form, one ASCII letter per
/// symbol, so slicing and comparison are plain string operations.
class Word {
 public:
  class Builder;

  Word() = default;
  explicit Word(Letter a) : text_(1, a.symbol()) {}

  /// Throws WordError on any character outside 'a'..'z'.
  static Word from_text(std::string_view text);

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  Letter operator[](std::size_t i) const;
  Letter front() const;
  Letter back() const;

  const std::string& text() const { return text_; }
  std::string_view view() const { return text_; }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word slice(std::size_t pos, std::size_t n) const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend Word operator+(const Word& lhs, Letter rhs);
  friend Word operator+(Letter lhs, const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.text_ <=> rhs.text_;
  }

 private:
  explicit Word(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

class Word::Builder {
 public:
  Builder& reserve(std::size_t n) {
    text_.reserve(n);
    return *this;
  }
  Builder& append(const Word& w) {
    text_ += w.text_;
    return *this;
  }
  Builder& append(Letter a) {
    text_.push_back(a.symbol());
    return *this;
  }
  Builder& append_reversed(const Word& w) {
    text_.append(w.text_.rbegin(), w.text_.rend());
    return *this;
  }
  std::size_t size() const { return text_.size(); }
  Word build() && { return Word(std::move(text_)); }

 private:
  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, Letter a);

Word power(const Word& w, std::size_t exponent);
Word concat(std::span<const Word> parts);

/// |w|_a
std::size_t letter_count(const Word& w, Letter a);
/// Distinct letters of w in increasing order.
std::vector<Letter> alphabet_of(const Word& w);

Word reversal(const Word& w);
bool is_palindrome(const Word& w);

/// Shortest palindrome having w as a prefix. Linear time.
Word palindromic_closure(const Word& w);

/// Number of (possibly overlapping) occurrences of p in t. p must be nonempty.
std::size_t count_occurrences(const Word& p, const Word& t);

bool is_prefix(const Word& v, const Word& w);
bool is_suffix(const Word& v, const Word& w);
bool is_factor(const Word& v, const Word& w);

/// u with w = v·u. Throws PreconditionError when v is not a prefix of w.
Word strip_prefix(const Word& v, const Word& w);
/// u with w = u·v. Throws PreconditionError when v is not a suffix of w.
Word strip_suffix(const Word& v, const Word& w);

/// w nonempty; false iff w = u^m for some m >= 2.
bool is_primitive(const Word& w);
bool are_conjugate(const Word& u, const Word& v);

/// p_w(n) = |F_n(w)|. Requires n <= |w|.
std::size_t factor_complexity(const Word& w, std::size_t n);

namespace detail {
/// Knuth-Morris-Pratt failure function of s.
std::vector<std::size_t> prefix_function(std::string_view s);
/// First occurrence of pattern in text at or after from, or npos.
std::size_t kmp_find(std::string_view text, std::string_view pattern, std::size_t from = 0);
}  // namespace detail

}  // namespace epi

template <>
struct std::hash<epi::Word> {
  std::size_t operator()(const epi::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
