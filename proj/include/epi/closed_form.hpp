#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "epi/episturmian.hpp"
#include "epi/factorizer.hpp"

namespace epi {

// Closed-form z- and c-factorizations of standard episturmian words, stated
// in terms of the run decomposition y_1^{d_1} y_2^{d_2} ... of the directive
// word, the run starts g(m) and the reversed increments h̄_n.
//
// Every y^{-1} strip checks that the letter is really there and raises
// TheoremViolation if not.

/// z_1 = x_1, z_k = y_{k-1}^{-1} (h̄_{g(k-1)-1})^{d_{k-1}} y_k for k >= 2.
Word z_factor_k(const MorphismTable& table, std::size_t k);
/// The first `count` closed-form z-factors.
Factorization z_factorization(const MorphismTable& table, std::size_t count);

/// The c-factors before the steady state, produced by walking the
/// prefix-state machine c_1 ... c_m = u_{g(n)} α with α ∈ {ε, y_n}.
struct CTransient {
  /// c_1 ... c_j; the last one is the boundary factor y_i^{-1} (h̄_{g(i)-1})^{d_i}.
  std::vector<Word> initial_factors;
  /// First run index by which every alphabet letter has appeared.
  std::size_t i = 0;
  /// Index of the boundary factor; c_1 ... c_k = u_{g(k-j+i+1)} for k >= j.
  std::size_t j = 0;
  std::size_t k0 = 0;
  /// 1 if d_1 = 1, else 0.
  std::size_t m = 0;
};

CTransient c_transient(const MorphismTable& table);

/// c_k for k >= j: the boundary factor at k = j, (h̄_{g(k-j+i)-1})^{d_{k-j+i}} after it.
/// Throws PreconditionError for k < j.
Word c_factor_k(const MorphismTable& table, const CTransient& transient, std::size_t k);
Word c_factor_k(const MorphismTable& table, std::size_t k);
/// The first `count` c-factors: transient list, then the steady-state formula.
Factorization c_factorization(const MorphismTable& table, std::size_t count);

/// Smallest k for which z_k = y_{k-1}^{-1} c_{k+k0-1-m} y_k holds, i.e. the
/// first k whose c-index lands strictly past the boundary factor.
std::size_t z_from_c_onset(const CTransient& transient);
/// z_k computed from the c-sequence. Throws PreconditionError below the onset.
Word z_from_c(const MorphismTable& table, std::size_t k);

struct SturmianCheck {
  std::string description;
  Word expected;
  Word actual;
  bool passed = false;
};

struct SturmianReport {
  std::vector<SturmianCheck> checks;
  bool all_passed() const;
};

/// For a binary directive: h_{g(p)-1} = s_{p-1} for 1 <= p <= p_max, and the
/// steady-state c_k = (s̄_{k+m-3})^{d_{k+m-2}} over the matching range of k.
SturmianReport sturmian_c_check(const MorphismTable& table, std::size_t p_max);

}  // namespace epi
