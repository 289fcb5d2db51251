#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "epi/directive.hpp"
#include "epi/episturmian.hpp"

namespace epi::verify {

/// Outcome of one named property over any number of instances.
struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  /// First failures, each naming spec, index and the words involved.
  std::vector<std::string> failures;
  /// Passed word comparisons, filled only when Options::trace is set.
  std::vector<std::string> trace;

  bool passed() const { return failure_count == 0; }
  void merge(const PropertyResult& other);
};

/// Range for the lemma-level suites: positions n <= max_position and
/// words no longer than max_length.
struct LemmaHorizon {
  std::size_t max_position = 30;
  std::size_t max_length = std::size_t{1} << 20;
};

struct Options {
  LemmaHorizon lemmas;
  /// Closed-form z-factors compared against the oracle; 0 picks 8 for
  /// binary and 6 for larger alphabets.
  std::size_t z_factors = 0;
  /// Number of z-from-c indices checked past the onset.
  std::size_t z_from_c_span = 8;
  /// Range of p for the binary standard-word checks.
  std::size_t sturmian_p_max = 10;
  /// Minimum prefix length for the factor-count monitor.
  std::size_t count_min_length = 100;
  /// Longest prefix used for the finite-window structure checks.
  std::size_t window_length = 1200;
  /// Empty means every property.
  std::set<std::string> only;
  /// Record every passed word comparison in PropertyResult::trace.
  bool trace = false;
};

/// Stable property names, in report order.
const std::vector<std::string>& property_names();
/// Resolves a property name or one of its short aliases; nullopt if unknown.
std::optional<std::string> resolve_property(std::string_view name);

// Lemma-level suites.
PropertyResult check_closure_recursion(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_increment_from_prefixes(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_increment_growth(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_increment_suffix(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_run_powers(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_primitivity(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_morphism_agreement(const MorphismTable& table, const LemmaHorizon& hz);
PropertyResult check_episturmian_window(const MorphismTable& table, std::size_t max_length);

// Closed form against the brute-force oracles.
PropertyResult check_z_closed_form(const MorphismTable& table, std::size_t factors);
PropertyResult check_z_non_occurrence(const MorphismTable& table, std::size_t factors);
PropertyResult check_c_closed_form(const MorphismTable& table, std::size_t horizon_run);
PropertyResult check_c_non_occurrence(const MorphismTable& table, std::size_t horizon_run);
PropertyResult check_prefix_sums(const MorphismTable& table, std::size_t factors);
PropertyResult check_z_from_c(const MorphismTable& table, std::size_t span);
PropertyResult check_sturmian(const MorphismTable& table, std::size_t p_max);
PropertyResult check_factor_counts(const MorphismTable& table, std::size_t min_length,
                                   std::size_t horizon_run);

/// Naive and lpf engines on every binary word up to max_length.
PropertyResult check_engines_exhaustive(std::size_t max_length);
/// Naive and lpf engines on `count` seeded random words over 2-3 letters.
PropertyResult check_engines_random(std::uint64_t seed, std::size_t count, std::size_t max_length);

/// Every property for one spec, in property_names() order.
std::vector<PropertyResult> verify_spec(const DirectiveSpec& spec, const Options& options);

/// Runs verify_spec over specs on `jobs` threads and merges per property.
/// The merged report does not depend on jobs.
std::vector<PropertyResult> verify_corpus(const std::vector<DirectiveSpec>& specs,
                                          const Options& options, std::size_t jobs = 1);

/// All specs over `alphabet` letters with at most max_runs prefix runs,
/// prefix exponents in 1..max_exp, and a tail that is a rotation of
/// (a b c ...) with unit exponents. Sorted by text form.
std::vector<DirectiveSpec> corpus(std::size_t alphabet, std::size_t max_runs, std::size_t max_exp);

}  // namespace epi::verify
