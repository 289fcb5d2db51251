#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epi/words.hpp"

namespace epi {

/// One block y^d of a run-length encoded directive word.
struct Run {
  Letter letter;
  std::size_t exponent = 1;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A directive word x_1 x_2 ... = y_1^{d_1} y_2^{d_2} ... given as a finite
/// list of prefix runs followed by tail runs repeated forever.
///
/// Construction enforces: exponents >= 1, adjacent runs carry distinct
/// letters (including prefix->tail and tail-end->tail-start junctions), and
/// every letter of the alphabet occurs somewhere. An empty tail describes a
/// finite directive word, usable only for finite analysis.
///
/// Positions n (for x_n) and run indices m (for y_m, d_m) are 1-based.
class DirectiveSpec {
 public:
  /// alphabet_size defaults to 1 + the largest letter index used.
  static DirectiveSpec create(std::vector<Run> prefix, std::vector<Run> tail,
                              std::optional<std::size_t> alphabet_size = std::nullopt);

  /// Parses `runlist [ "|" runlist ]` where runs are `letter[^exp]`
  /// separated by commas or spaces, e.g. "a^2 b | a b".
  static DirectiveSpec parse(std::string_view text);

  const std::vector<Run>& prefix_runs() const { return prefix_; }
  const std::vector<Run>& tail_runs() const { return tail_; }
  std::size_t alphabet_size() const { return alphabet_size_; }
  bool is_infinite() const { return !tail_.empty(); }

  /// Number of directive letters covered by the prefix runs.
  std::size_t prefix_length() const { return prefix_length_; }
  /// Number of directive letters in one period of the tail.
  std::size_t tail_length() const { return tail_length_; }

  /// Letters occurring infinitely often (the tail letters), sorted.
  std::vector<Letter> ultimate_letters() const;

  /// Throws SpecError unless the tail uses at least two distinct letters.
  /// With a single repeated letter the word is periodic and its z-factors
  /// stop terminating, so the factorization formulas do not apply.
  void require_closed_form() const;

  /// x_n. Throws PreconditionError past the end of a finite directive.
  Letter letter_at(std::size_t n) const;
  /// (y_m, d_m).
  Run run(std::size_t m) const;
  /// Index of the run covering position n.
  std::size_t run_index_at(std::size_t n) const;
  /// Number of runs (only for finite directives).
  std::size_t finite_run_count() const;

  /// Canonical text form accepted by parse().
  std::string to_string() const;

  friend bool operator==(const DirectiveSpec&, const DirectiveSpec&) = default;

 private:
  DirectiveSpec() = default;

  std::vector<Run> prefix_;
  std::vector<Run> tail_;
  std::size_t alphabet_size_ = 0;
  std::size_t prefix_length_ = 0;
  std::size_t tail_length_ = 0;
};

/// x_1 ... x_n.
Word expand_directive(const DirectiveSpec& spec, std::size_t n);
Run run_of(const DirectiveSpec& spec, std::size_t m);
/// Position where the m-th run starts: d_1 + ... + d_{m-1} + 1.
std::size_t run_start(const DirectiveSpec& spec, std::size_t m);
/// Largest i < n with x_i = x_n, if any.
std::optional<std::size_t> previous_occurrence(const DirectiveSpec& spec, std::size_t n);

}  // namespace epi
