#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "epi/directive.hpp"
#include "epi/words.hpp"

namespace epi {

/// psi_a: a -> a, x -> a x for x != a.
Word psi(Letter a, const Word& w);

/// mu_n(w) = psi_{x_1}(psi_{x_2}(... psi_{x_n}(w))). mu_0 is the identity.
/// Applies the n morphisms one after another; MorphismTable caches the
/// letter images instead.
Word mu(const DirectiveSpec& spec, std::size_t n, const Word& w);

/// Bounds on how far a MorphismTable may grow.
struct Horizon {
  /// Largest directive position x_n the table will consume.
  std::size_t max_position = 64;
  /// Largest cached word.
  std::size_t max_length = std::size_t{1} << 24;
};

/// Memoized palindromic prefixes u_n and the words h_n = mu_n(x_{n+1}) of
/// a standard episturmian word, extended lazily and on demand.
///
///   u_1 = ε,  u_{n+1} = (u_n x_n)^(+)         (palindromic closure)
///   h_n = mu_n(x_{n+1})                       (incremental letter images)
///
/// The two sequences are computed along independent routes; the identity
/// u_{n+1} = h_{n-1} u_n linking them is checked by the test suites rather
/// than used here.
///
/// Accessors return references that stay valid for the table's lifetime.
/// All members are safe to call concurrently.
class MorphismTable {
 public:
  explicit MorphismTable(DirectiveSpec spec, Horizon horizon = {});
  ~MorphismTable();
  MorphismTable(MorphismTable&&) noexcept;
  MorphismTable& operator=(MorphismTable&&) noexcept;

  const DirectiveSpec& spec() const;
  const Horizon& horizon() const;

  /// u_n, n >= 1.
  const Word& palindromic_prefix(std::size_t n) const;
  /// h_n, n >= 0.
  const Word& increment(std::size_t n) const;
  /// Reversal of h_n.
  const Word& reversed_increment(std::size_t n) const;

  /// v_{n-1} = u_n with the suffix reversal(h_{n-1}) removed. Requires x_n to
  /// have occurred before position n; throws PreconditionError otherwise.
  Word border_palindrome(std::size_t n) const;

  /// Length-len prefix of the infinite word, cut from the first u_n that
  /// is long enough.
  Word standard_prefix(std::size_t len) const;

  /// Smallest n with |u_n| >= len.
  std::size_t covering_index(std::size_t len) const;

  /// True when u_n can be produced without exceeding the horizon.
  bool within_horizon(std::size_t n) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Free-function forms; each builds a throwaway table.
Word palindromic_prefix(const DirectiveSpec& spec, std::size_t n);
Word increment(const DirectiveSpec& spec, std::size_t n);
Word border_palindrome(const DirectiveSpec& spec, std::size_t n);
Word standard_prefix(const DirectiveSpec& spec, std::size_t len);

/// Standard words of a binary directive y_1^{d_1} y_2^{d_2} ...:
/// s_{-1} = y_2, s_0 = y_1, s_p = (s_{p-1})^{d_p} s_{p-2}.
/// Throws SpecError unless the alphabet has exactly two letters.
Word standard_word(const DirectiveSpec& spec, int p);

}  // namespace epi
