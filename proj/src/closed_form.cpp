#include "epi/closed_form.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <sstream>

#include "epi/errors.hpp"

namespace epi {

namespace {

/// y^{-1} w, where the leading y is a consequence of the theorems.
Word strip_leading(Letter y, const Word& w, std::string_view context) {
  if (w.empty() || w.front() != y) {
    std::ostringstream os;
    os << context << ": expected \"" << w << "\" to begin with '" << y.symbol() << "'";
    throw TheoremViolation(os.str());
  }
  return w.suffix(w.size() - 1);
}

/// (h̄_{g(m)-1})^{d_m}
Word run_power(const MorphismTable& table, std::size_t m) {
  const Run r = table.spec().run(m);
  return power(table.reversed_increment(run_start(table.spec(), m) - 1), r.exponent);
}

}  // namespace

Word z_factor_k(const MorphismTable& table, std::size_t k) {
  const auto& spec = table.spec();
  spec.require_closed_form();
  if (k == 0) throw PreconditionError("z-factors are indexed from 1");
  if (k == 1) return Word(spec.letter_at(1));
  const Run previous = spec.run(k - 1);
  const Run current = spec.run(k);
  return strip_leading(previous.letter, run_power(table, k - 1), "z_" + std::to_string(k)) +
         current.letter;
}

Factorization z_factorization(const MorphismTable& table, std::size_t count) {
  if (count == 0) throw PreconditionError("z_factorization: count must be positive");
  Factorization out{Scheme::Z, {}, true, false};
  out.factors.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.factors.push_back(z_factor_k(table, k));
  return out;
}

CTransient c_transient(const MorphismTable& table) {
  const auto& spec = table.spec();
  spec.require_closed_form();

  CTransient out;
  out.k0 = spec.alphabet_size();
  const Run first = spec.run(1);
  out.m = first.exponent == 1 ? 1 : 0;

  std::set<std::size_t> seen{first.letter.index()};
  out.initial_factors.emplace_back(first.letter);
  if (first.exponent > 1) out.initial_factors.push_back(power(Word(first.letter), first.exponent - 1));

  // State: c_1 ... c_last = u_{g(n)} α with α = ε or α = y_n.
  std::size_t n = 2;
  bool alpha_empty = true;
  while (true) {
    const Run run = spec.run(n);
    if (alpha_empty) {
      if (!seen.contains(run.letter.index())) {
        seen.insert(run.letter.index());
        out.initial_factors.emplace_back(run.letter);
        alpha_empty = false;
      } else {
        out.initial_factors.push_back(run_power(table, n));
        ++n;
      }
    } else {
      out.initial_factors.push_back(
          strip_leading(run.letter, run_power(table, n), "c-transient run " + std::to_string(n)));
      alpha_empty = true;
      if (seen.size() == out.k0) {
        out.i = n;
        out.j = out.initial_factors.size();
        break;
      }
      ++n;
    }
  }

  const std::size_t expected_gap = out.m == 1 ? out.k0 - 1 : out.k0;
  if (out.j - out.i != expected_gap) {
    throw TheoremViolation("c-transient: j - i = " + std::to_string(out.j - out.i) + ", expected " +
                           std::to_string(expected_gap));
  }
  const Word head = concat(std::span(out.initial_factors).first(out.j - 2));
  if (head != table.palindromic_prefix(run_start(spec, out.i)) ||
      out.initial_factors[out.j - 2] != Word(spec.run(out.i).letter)) {
    throw TheoremViolation("c-transient: the factors before the boundary do not spell u_{g(i)} y_i");
  }
  return out;
}

Word c_factor_k(const MorphismTable& table, const CTransient& transient, std::size_t k) {
  if (k < transient.j) {
    throw PreconditionError("c_" + std::to_string(k) + " precedes the steady state (j = " +
                            std::to_string(transient.j) + "); use the transient factors");
  }
  if (k == transient.j) return transient.initial_factors.back();
  return run_power(table, k - transient.j + transient.i);
}

Word c_factor_k(const MorphismTable& table, std::size_t k) {
  return c_factor_k(table, c_transient(table), k);
}

Factorization c_factorization(const MorphismTable& table, std::size_t count) {
  if (count == 0) throw PreconditionError("c_factorization: count must be positive");
  const CTransient transient = c_transient(table);
  Factorization out{Scheme::C, {}, true, false};
  out.factors.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    out.factors.push_back(k <= transient.j ? transient.initial_factors[k - 1]
                                           : c_factor_k(table, transient, k));
  }
  return out;
}

std::size_t z_from_c_onset(const CTransient& transient) {
  // Smallest k >= 2 with k + k0 - 1 - m > j.
  const std::size_t bound = transient.j + 2 + transient.m;
  const std::size_t onset = bound > transient.k0 ? bound - transient.k0 : 0;
  return std::max<std::size_t>(onset, 2);
}

Word z_from_c(const MorphismTable& table, std::size_t k) {
  const CTransient transient = c_transient(table);
  const std::size_t onset = z_from_c_onset(transient);
  if (k < onset) {
    throw PreconditionError("z_from_c: k = " + std::to_string(k) + " is below the onset " +
                            std::to_string(onset));
  }
  const auto& spec = table.spec();
  const std::size_t index = k + transient.k0 - 1 - transient.m;
  const Word c = c_factor_k(table, transient, index);
  return strip_leading(spec.run(k - 1).letter, c, "z_from_c k=" + std::to_string(k)) +
         spec.run(k).letter;
}

bool SturmianReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

SturmianReport sturmian_c_check(const MorphismTable& table, std::size_t p_max) {
  const auto& spec = table.spec();
  if (spec.alphabet_size() != 2) {
    throw SpecError("sturmian_c_check needs a binary directive word");
  }
  spec.require_closed_form();
  SturmianReport report;
  for (std::size_t p = 1; p <= p_max; ++p) {
    SturmianCheck check;
    check.description = "h_{g(" + std::to_string(p) + ")-1} = s_" + std::to_string(p - 1);
    check.expected = standard_word(spec, static_cast<int>(p) - 1);
    check.actual = table.increment(run_start(spec, p) - 1);
    check.passed = check.expected == check.actual;
    report.checks.push_back(std::move(check));
  }
  const CTransient transient = c_transient(table);
  for (std::size_t k = transient.j + 1; k + transient.m <= p_max + 2; ++k) {
    const std::size_t s_index = k + transient.m - 3;
    const std::size_t exponent_index = k + transient.m - 2;
    SturmianCheck check;
    check.description = "c_" + std::to_string(k) + " = (reversed s_" + std::to_string(s_index) +
                        ")^d_" + std::to_string(exponent_index);
    check.expected = power(reversal(standard_word(spec, static_cast<int>(s_index))),
                           spec.run(exponent_index).exponent);
    check.actual = c_factor_k(table, transient, k);
    check.passed = check.expected == check.actual;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace epi
