#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "epi/words.hpp"

namespace epi {

enum class Scheme { Z, C };

std::string_view scheme_name(Scheme s);

/// An ordered factor list whose concatenation is the input word.
///
/// last_complete is false when a z-factorization ran out of input before
/// the last factor became unique. cut_by_input_end is set when the final
/// factor's match extended to the last input position, so a longer input
/// could have produced a longer factor.
struct Factorization {
  Scheme scheme = Scheme::Z;
  std::vector<Word> factors;
  bool last_complete = true;
  bool cut_by_input_end = false;

  std::size_t input_length() const;
  /// Factors that are known to be final in every extension of the input:
  /// the last one is excluded when cut_by_input_end is set.
  std::size_t trusted_count() const;
  /// Factors meeting their scheme's definition (drops an incomplete last z-factor).
  std::size_t complete_count() const;
  Word joined() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Longest-previous-factor lengths: lpf[q] is the longest l such that
/// w[q, q+l) also starts at some q' < q (occurrences may overlap).
using LpfArray = std::vector<std::uint32_t>;

/// Greedy c-factorization by direct position scanning. Throws
/// PreconditionError on the empty word.
Factorization c_factorize(const Word& w);
/// Greedy z-factorization by direct position scanning.
Factorization z_factorize(const Word& w);

/// Quadratic reference: every earlier start is compared letter by letter.
LpfArray lpf_naive(const Word& w);
/// Suffix-array engine, O(n log n).
LpfArray lpf(const Word& w);

/// Both factorizations read off an lpf array: a c-factor at q has length
/// max(lpf[q], 1), a z-factor has length lpf[q] + 1 (truncated at the end).
Factorization factorize_via_lpf(const Word& w, const LpfArray& lpf, Scheme scheme);
Factorization factorize_via_lpf(const Word& w, Scheme scheme);

struct FactorCounts {
  /// Complete z-factors.
  std::size_t z = 0;
  /// All c-factors, including one cut by the end of input.
  std::size_t c = 0;
};

FactorCounts factor_counts(const Word& w);

/// Suffix array of text (sorted suffix start positions), prefix doubling
/// with radix sort.
std::vector<std::uint32_t> suffix_array(std::string_view text);
/// lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(std::string_view text, const std::vector<std::uint32_t>& sa);

}  // namespace epi
