#include "epi/episturmian.hpp"

#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "epi/errors.hpp"

namespace epi {

Word psi(Letter a, const Word& w) {
  Word::Builder b;
  b.reserve(2 * w.size());
  for (char c : w.text()) {
    const Letter x = Letter::from_symbol(c);
    if (x != a) b.append(a);
    b.append(x);
  }
  return std::move(b).build();
}

Word mu(const DirectiveSpec& spec, std::size_t n, const Word& w) {
  Word out = w;
  for (std::size_t t = n; t >= 1; --t) out = psi(spec.letter_at(t), out);
  return out;
}

struct MorphismTable::State {
  State(DirectiveSpec s, Horizon hz) : spec(std::move(s)), horizon(hz) {
    prefixes.emplace_back();  // u_1
    images.reserve(spec.alphabet_size());
    for (std::size_t a = 0; a < spec.alphabet_size(); ++a) images.emplace_back(Letter(a));
  }

  // u_n lives at prefixes[n - 1].
  const Word& prefix(std::size_t n) {
    if (n == 0) throw PreconditionError("palindromic prefixes are indexed from 1");
    while (prefixes.size() < n) {
      const std::size_t next = prefixes.size();  // computing u_{next+1} from x_next
      if (next > horizon.max_position) {
        throw HorizonError("u_" + std::to_string(n) + " needs directive position " +
                           std::to_string(next) + " beyond horizon " +
                           std::to_string(horizon.max_position));
      }
      const Word& last = prefixes.back();
      if (2 * last.size() + 2 > horizon.max_length) {
        throw HorizonError("u_" + std::to_string(next + 1) + " would exceed the length horizon " +
                           std::to_string(horizon.max_length));
      }
      prefixes.push_back(palindromic_closure(last + spec.letter_at(next)));
    }
    return prefixes[n - 1];
  }

  // h_n lives at increments[n]; images hold mu_t(a) for t = increments.size() - 1.
  const Word& increment(std::size_t n) {
    while (increments.size() <= n) {
      const std::size_t t = increments.size();  // computing h_t = mu_t(x_{t+1})
      if (t + 1 > horizon.max_position) {
        throw HorizonError("h_" + std::to_string(n) + " needs directive position " +
                           std::to_string(t + 1) + " beyond horizon " +
                           std::to_string(horizon.max_position));
      }
      if (t >= 1) {
        // mu_t = mu_{t-1} o psi_{x_t}: the image of a != x_t gains mu_{t-1}(x_t) in front.
        const Letter x = spec.letter_at(t);
        const Word lead = images[x.index()];
        for (std::size_t a = 0; a < images.size(); ++a) {
          if (a == x.index()) continue;
          if (lead.size() + images[a].size() > horizon.max_length) {
            throw HorizonError("h_" + std::to_string(n) + " would exceed the length horizon " +
                               std::to_string(horizon.max_length));
          }
          images[a] = lead + images[a];
        }
      }
      increments.push_back(images[spec.letter_at(t + 1).index()]);
      reversed.push_back(reversal(increments.back()));
    }
    return increments[n];
  }

  DirectiveSpec spec;
  Horizon horizon;
  std::mutex mutex;
  std::deque<Word> prefixes;
  std::deque<Word> increments;
  std::deque<Word> reversed;
  std::vector<Word> images;
};

MorphismTable::MorphismTable(DirectiveSpec spec, Horizon horizon)
    : state_(std::make_unique<State>(std::move(spec), horizon)) {}

MorphismTable::~MorphismTable() = default;
MorphismTable::MorphismTable(MorphismTable&&) noexcept = default;
MorphismTable& MorphismTable::operator=(MorphismTable&&) noexcept = default;

const DirectiveSpec& MorphismTable::spec() const { return state_->spec; }
const Horizon& MorphismTable::horizon() const { return state_->horizon; }

const Word& MorphismTable::palindromic_prefix(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  return state_->prefix(n);
}

const Word& MorphismTable::increment(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  return state_->increment(n);
}

const Word& MorphismTable::reversed_increment(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  state_->increment(n);
  return state_->reversed[n];
}

Word MorphismTable::border_palindrome(std::size_t n) const {
  if (!previous_occurrence(spec(), n)) {
    throw PreconditionError("border_palindrome: x_" + std::to_string(n) +
                            " has no earlier occurrence in the directive word");
  }
  return strip_suffix(reversed_increment(n - 1), palindromic_prefix(n));
}

std::size_t MorphismTable::covering_index(std::size_t len) const {
  std::lock_guard lock(state_->mutex);
  std::size_t n = 1;
  while (state_->prefix(n).size() < len) ++n;
  return n;
}

Word MorphismTable::standard_prefix(std::size_t len) const {
  return palindromic_prefix(covering_index(len)).prefix(len);
}

bool MorphismTable::within_horizon(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  try {
    state_->prefix(n);
    return true;
  } catch (const HorizonError&) {
    return false;
  } catch (const PreconditionError&) {
    return false;
  }
}

Word palindromic_prefix(const DirectiveSpec& spec, std::size_t n) {
  return MorphismTable(spec).palindromic_prefix(n);
}

Word increment(const DirectiveSpec& spec, std::size_t n) { return MorphismTable(spec).increment(n); }

Word border_palindrome(const DirectiveSpec& spec, std::size_t n) {
  return MorphismTable(spec).border_palindrome(n);
}

Word standard_prefix(const DirectiveSpec& spec, std::size_t len) {
  if (!spec.is_infinite()) {
    throw PreconditionError("standard_prefix needs a directive word with a periodic tail");
  }
  return MorphismTable(spec).standard_prefix(len);
}

Word standard_word(const DirectiveSpec& spec, int p) {
  if (spec.alphabet_size() != 2) {
    throw SpecError("standard words need a binary directive word, got alphabet size " +
                    std::to_string(spec.alphabet_size()));
  }
  if (p < -1) throw PreconditionError("standard words are indexed from -1");
  Word older(spec.run(2).letter);  // s_{-1}
  Word newer(spec.run(1).letter);  // s_0
  for (int t = 1; t <= p; ++t) {
    Word next = power(newer, spec.run(static_cast<std::size_t>(t)).exponent) + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return p == -1 ? older : newer;
}

}  // namespace epi
