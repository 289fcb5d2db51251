#include "epi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "epi/closed_form.hpp"
#include "epi/errors.hpp"
#include "epi/factorizer.hpp"

namespace epi::verify {

namespace {

constexpr std::size_t kKeptFailures = 20;

// Set by verify_spec for the duration of one spec when tracing is requested.
thread_local bool tracing = false;

std::string show(const Word& w) {
  if (w.empty()) return "ε";
  if (w.size() <= 48) return w.text();
  return w.text().substr(0, 40) + "...(" + std::to_string(w.size()) + " letters)";
}

class Recorder {
 public:
  Recorder(std::string name, const DirectiveSpec* spec) : spec_(spec) { result_.name = std::move(name); }

  template <class Detail>
  void expect(bool ok, Detail&& detail) {
    ++result_.checks;
    if (!ok) fail(detail());
  }

  void expect_equal(const Word& expected, const Word& actual, const std::string& where) {
    expect(expected == actual,
           [&] { return where + ": expected " + show(expected) + ", actual " + show(actual); });
    if (tracing && expected == actual) result_.trace.push_back(where + ": " + show(actual));
  }

  void fail(const std::string& what) {
    ++result_.failure_count;
    if (result_.failures.size() < kKeptFailures) {
      result_.failures.push_back(spec_ ? "spec \"" + spec_->to_string() + "\" " + what : what);
    }
  }

  PropertyResult take() { return std::move(result_); }

 private:
  const DirectiveSpec* spec_;
  PropertyResult result_;
};

/// Runs body(n) for n = first, first+1, ... while n <= hz.max_position and
/// u_{n+1} is within the length horizon.
void for_each_position(const MorphismTable& table, const LemmaHorizon& hz, std::size_t first,
                       const std::function<void(std::size_t)>& body) {
  for (std::size_t n = first; n <= hz.max_position; ++n) {
    try {
      if (table.palindromic_prefix(n + 1).size() > hz.max_length) break;
    } catch (const HorizonError&) {
      break;
    }
    body(n);
  }
}

std::string at(std::string_view what, std::size_t n) { return std::string(what) + " at n=" + std::to_string(n); }

/// (h̄_{g(m)-1})^{d_m}
Word reversed_run_power(const MorphismTable& table, std::size_t m) {
  return power(table.reversed_increment(run_start(table.spec(), m) - 1), table.spec().run(m).exponent);
}

Word drop_last(const Word& w) { return w.prefix(w.size() - 1); }

struct Property {
  std::string name;
  std::vector<std::string> aliases;
};

const std::vector<Property>& properties() {
  static const std::vector<Property> kProperties = {
      {"closure-recursion", {}},
      {"increment-from-prefixes", {"Pn"}},
      {"increment-growth", {"hxPJ"}},
      {"increment-suffix", {"hu"}},
      {"run-powers", {"deltaY"}},
      {"primitivity", {}},
      {"morphism-agreement", {}},
      {"episturmian-window", {}},
      {"z-closed-form", {"zFactoEpi"}},
      {"z-non-occurrence", {}},
      {"c-closed-form", {"cFactoEpi"}},
      {"c-non-occurrence", {}},
      {"prefix-sums", {}},
      {"z-from-c", {}},
      {"sturmian-standard-words", {}},
      {"factor-counts", {}},
  };
  return kProperties;
}

}  // namespace

void PropertyResult::merge(const PropertyResult& other) {
  checks += other.checks;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() >= kKeptFailures) break;
    failures.push_back(f);
  }
  trace.insert(trace.end(), other.trace.begin(), other.trace.end());
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& p : properties()) names.push_back(p.name);
    return names;
  }();
  return kNames;
}

std::optional<std::string> resolve_property(std::string_view name) {
  for (const auto& p : properties()) {
    if (p.name == name) return p.name;
    for (const auto& a : p.aliases) {
      if (a == name) return p.name;
    }
  }
  return std::nullopt;
}

PropertyResult check_closure_recursion(const MorphismTable& table, const LemmaHorizon& hz) {
  Recorder rec("closure-recursion", &table.spec());
  rec.expect_equal(Word(), table.palindromic_prefix(1), "u_1");
  Word left;   // h_{n-1} ... h_1 h_0
  Word right;  // h̄_0 h̄_1 ... h̄_{n-1}
  for_each_position(table, hz, 1, [&](std::size_t n) {
    const Word& next = table.palindromic_prefix(n + 1);
    left = table.increment(n - 1) + left;
    right = right + table.reversed_increment(n - 1);
    rec.expect(is_palindrome(next), [&] { return at("u_{n+1} not a palindrome", n); });
    rec.expect_equal(table.increment(n - 1) + table.palindromic_prefix(n), next, at("h_{n-1} u_n", n));
    rec.expect_equal(left, next, at("h_{n-1}...h_0", n));
    rec.expect_equal(right, next, at("reversed product h̄_0...h̄_{n-1}", n));
  });
  return rec.take();
}

PropertyResult check_increment_from_prefixes(const MorphismTable& table, const LemmaHorizon& hz) {
  const auto& spec = table.spec();
  Recorder rec("increment-from-prefixes", &spec);
  for_each_position(table, hz, 1, [&](std::size_t n) {
    const Word& h = table.increment(n - 1);
    const Word& u = table.palindromic_prefix(n);
    const auto prev = previous_occurrence(spec, n);
    if (!prev) {
      rec.expect_equal(u + spec.letter_at(n), h, at("fresh letter: u_n x_n", n));
      return;
    }
    rec.expect_equal(u, h + table.palindromic_prefix(*prev), at("h_{n-1} u_{P(n)}", n));
    Word::Builder product;
    for (std::size_t t = n - 1; t >= *prev; --t) product.append(table.increment(t - 1));
    rec.expect_equal(h, std::move(product).build(), at("h_{n-2}...h_{P(n)-1}", n));
  });
  return rec.take();
}

PropertyResult check_increment_growth(const MorphismTable& table, const LemmaHorizon& hz) {
  const auto& spec = table.spec();
  Recorder rec("increment-growth", &spec);
  for_each_position(table, hz, 1, [&](std::size_t n) {
    const Word& before = table.increment(n - 1);
    const Word& after = table.increment(n);
    rec.expect(is_prefix(before, after), [&] { return at("h_{n-1} not a prefix of h_n", n); });
    const bool same_letter = spec.letter_at(n + 1) == spec.letter_at(n);
    rec.expect((before == after) == same_letter,
               [&] { return at("h_n = h_{n-1} disagrees with x_{n+1} = x_n", n); });
    if (!same_letter) {
      const Word& u = table.palindromic_prefix(n);
      rec.expect(u.size() < after.size() && is_prefix(u, after),
                 [&] { return at("u_n not a proper prefix of h_n", n); });
    }
  });
  return rec.take();
}

PropertyResult check_increment_suffix(const MorphismTable& table, const LemmaHorizon& hz) {
  const auto& spec = table.spec();
  Recorder rec("increment-suffix", &spec);
  for_each_position(table, hz, 2, [&](std::size_t n) {
    if (!previous_occurrence(spec, n)) return;
    const Word& u = table.palindromic_prefix(n);
    const Word& u_prev = table.palindromic_prefix(n - 1);
    const Word& h = table.increment(n - 1);
    const Word& hb = table.reversed_increment(n - 1);
    rec.expect(is_prefix(h, u), [&] { return at("h_{n-1} not a prefix of u_n", n); });
    rec.expect(is_suffix(hb, u), [&] { return at("h̄_{n-1} not a suffix of u_n", n); });
    const Word v = table.border_palindrome(n);
    rec.expect(is_palindrome(v), [&] { return at("v_{n-1} = " + show(v) + " not a palindrome", n); });
    rec.expect(is_prefix(v, u_prev) && is_suffix(v, u_prev),
               [&] { return at("v_{n-1} not a border of u_{n-1}", n); });
    rec.expect(is_suffix(u, u_prev + hb), [&] { return at("u_n not a suffix of u_{n-1} h̄_{n-1}", n); });
    if (spec.letter_at(n) != spec.letter_at(n - 1)) {
      rec.expect(is_suffix(u, power(hb, 2)), [&] { return at("u_n not a suffix of (h̄_{n-1})^2", n); });
      rec.expect(is_suffix(table.palindromic_prefix(n + 1), power(hb, 3)),
                 [&] { return at("u_{n+1} not a suffix of (h̄_{n-1})^3", n); });
    }
  });
  return rec.take();
}

PropertyResult check_run_powers(const MorphismTable& table, const LemmaHorizon& hz) {
  const auto& spec = table.spec();
  Recorder rec("run-powers", &spec);
  Word left;   // (h_{g(m)-1})^{d_m} ... (h_0)^{d_1}
  Word right;  // (h̄_0)^{d_1} ... (h̄_{g(m)-1})^{d_m}
  for (std::size_t m = 1;; ++m) {
    const std::size_t start = run_start(spec, m);
    const std::size_t next_start = run_start(spec, m + 1);
    if (next_start > hz.max_position + 1) break;
    try {
      if (table.palindromic_prefix(next_start).size() > hz.max_length) break;
    } catch (const HorizonError&) {
      break;
    }
    const std::size_t d = spec.run(m).exponent;
    const Word& h = table.increment(start - 1);
    const Word& hb = table.reversed_increment(start - 1);
    const Word& u = table.palindromic_prefix(start);
    const Word& u_next = table.palindromic_prefix(next_start);
    const std::string where = "m=" + std::to_string(m);

    rec.expect_equal(u_next, power(h, d) + u, where + " (h_{g(m)-1})^{d_m} u_{g(m)}");
    rec.expect_equal(u_next, u + power(hb, d), where + " u_{g(m)} (h̄_{g(m)-1})^{d_m}");
    left = power(h, d) + left;
    right = right + power(hb, d);
    rec.expect_equal(u_next, left, where + " product of run powers");
    rec.expect_equal(u_next, right, where + " product of reversed run powers");
    if (m >= 2) {
      const Word& before = table.palindromic_prefix(start - 1);
      rec.expect(before.size() < h.size() && is_prefix(before, h),
                 [&] { return where + ": u_{g(m)-1} not a proper prefix of h_{g(m)-1}"; });
    }
    rec.expect(is_suffix(u, power(hb, 2)), [&] { return where + ": u_{g(m)} not a suffix of (h̄)^2"; });
    rec.expect(is_suffix(u_next, power(hb, d + 2)),
               [&] { return where + ": u_{g(m+1)} not a suffix of (h̄)^{d_m+2}"; });
  }
  return rec.take();
}

PropertyResult check_primitivity(const MorphismTable& table, const LemmaHorizon& hz) {
  Recorder rec("primitivity", &table.spec());
  for_each_position(table, hz, 1, [&](std::size_t n) {
    rec.expect(is_primitive(table.increment(n - 1)), [&] { return at("h_{n-1} not primitive", n); });
    rec.expect(is_primitive(table.reversed_increment(n - 1)),
               [&] { return at("h̄_{n-1} not primitive", n); });
  });
  return rec.take();
}

PropertyResult check_morphism_agreement(const MorphismTable& table, const LemmaHorizon& hz) {
  const auto& spec = table.spec();
  Recorder rec("morphism-agreement", &spec);
  LemmaHorizon small = hz;
  small.max_length = std::min<std::size_t>(hz.max_length, std::size_t{1} << 16);
  for_each_position(table, small, 1, [&](std::size_t n) {
    const Word direct = mu(spec, n - 1, Word(spec.letter_at(n)));
    rec.expect_equal(direct, table.increment(n - 1), at("mu_{n-1}(x_n) by composition", n));
  });
  return rec.take();
}

PropertyResult check_episturmian_window(const MorphismTable& table, std::size_t max_length) {
  const auto& spec = table.spec();
  Recorder rec("episturmian-window", &spec);
  std::size_t last = 1;
  while (true) {
    try {
      if (table.palindromic_prefix(last + 1).size() > max_length) break;
    } catch (const HorizonError&) {
      break;
    }
    ++last;
  }
  const Word& window = table.palindromic_prefix(last);
  const std::string_view text = window.view();
  const std::size_t upper = text.size() / 4;
  if (upper < 2) return rec.take();

  // Slope window: long enough that only tail letters extend the special
  // factors, short enough that a full tail period of extensions is visible.
  std::size_t slope_low = table.palindromic_prefix(spec.prefix_length() + 1).size() + 2;
  std::size_t slope_high = upper;
  if (last > spec.tail_length()) {
    slope_high = std::min(slope_high, table.palindromic_prefix(last - spec.tail_length()).size());
  }
  const std::size_t tail_letters = spec.ultimate_letters().size();

  std::size_t previous = 1;  // p(0)
  for (std::size_t len = 1; len <= upper; ++len) {
    std::unordered_map<std::string_view, unsigned> extensions;
    for (std::size_t q = 0; q + len <= text.size(); ++q) {
      auto& mask = extensions[text.substr(q, len)];
      if (q + len < text.size()) mask |= 1u << (text[q + len] - 'a');
    }
    std::size_t right_special = 0;
    bool closed = true;
    for (const auto& [factor, mask] : extensions) {
      if (std::popcount(mask) >= 2) ++right_special;
      std::string rev(factor.rbegin(), factor.rend());
      if (!extensions.contains(rev)) closed = false;
    }
    rec.expect(closed, [&] { return "length " + std::to_string(len) + ": factor set not closed under reversal"; });
    rec.expect(right_special <= 1, [&] {
      return "length " + std::to_string(len) + ": " + std::to_string(right_special) + " right special factors";
    });
    const std::size_t count = extensions.size();
    if (len >= slope_low && len <= slope_high) {
      rec.expect(count - previous == tail_letters - 1, [&] {
        return "length " + std::to_string(len) + ": complexity step " + std::to_string(count - previous) +
               ", expected " + std::to_string(tail_letters - 1);
      });
    }
    previous = count;
  }
  return rec.take();
}

PropertyResult check_z_closed_form(const MorphismTable& table, std::size_t factors) {
  const auto& spec = table.spec();
  Recorder rec("z-closed-form", &spec);
  const Word& text = table.palindromic_prefix(run_start(spec, factors + 2));
  const Factorization oracle = z_factorize(text);
  rec.expect(oracle.complete_count() >= factors, [&] {
    return "oracle produced only " + std::to_string(oracle.complete_count()) + " complete z-factors on " +
           std::to_string(text.size()) + " letters";
  });
  for (std::size_t k = 1; k <= std::min(factors, oracle.complete_count()); ++k) {
    rec.expect_equal(oracle.factors[k - 1], z_factor_k(table, k), "z_" + std::to_string(k));
  }
  return rec.take();
}

PropertyResult check_z_non_occurrence(const MorphismTable& table, std::size_t factors) {
  const auto& spec = table.spec();
  Recorder rec("z-non-occurrence", &spec);
  for (std::size_t k = 2; k <= factors; ++k) {
    const Word& u = table.palindromic_prefix(run_start(spec, k));
    const Word body = reversed_run_power(table, k - 1).suffix(reversed_run_power(table, k - 1).size() - 1);
    rec.expect(is_factor(body, drop_last(u)),
               [&] { return "k=" + std::to_string(k) + ": y^{-1}(h̄)^d does not occur in u_{g(k)} x_1^{-1}"; });
    rec.expect(!is_factor(body + spec.run(k).letter, u),
               [&] { return "k=" + std::to_string(k) + ": z_k already occurs in u_{g(k)}"; });
  }
  return rec.take();
}

PropertyResult check_c_closed_form(const MorphismTable& table, std::size_t horizon_run) {
  const auto& spec = table.spec();
  Recorder rec("c-closed-form", &spec);
  const CTransient transient = c_transient(table);
  const std::size_t gap = transient.m == 1 ? transient.k0 - 1 : transient.k0;
  rec.expect(transient.j - transient.i == gap, [&] {
    return "j - i = " + std::to_string(transient.j - transient.i) + ", expected " + std::to_string(gap);
  });
  // The oracle prefix must reach past the boundary factor.
  horizon_run = std::max(horizon_run, transient.i + 3);
  const Word& text = table.palindromic_prefix(run_start(spec, horizon_run));
  const Factorization oracle = c_factorize(text);
  const std::size_t trusted = oracle.trusted_count();
  rec.expect(trusted > transient.j, [&] {
    return "oracle produced only " + std::to_string(trusted) + " trusted c-factors, j = " +
           std::to_string(transient.j);
  });
  const Factorization closed = c_factorization(table, trusted);
  for (std::size_t k = 1; k <= trusted; ++k) {
    rec.expect_equal(oracle.factors[k - 1], closed.factors[k - 1], "c_" + std::to_string(k));
  }
  return rec.take();
}

PropertyResult check_c_non_occurrence(const MorphismTable& table, std::size_t horizon_run) {
  const auto& spec = table.spec();
  Recorder rec("c-non-occurrence", &spec);
  const CTransient transient = c_transient(table);
  horizon_run = std::max(horizon_run, transient.i + 3);
  for (std::size_t n = transient.i + 1; n + 1 <= horizon_run; ++n) {
    const Word& u = table.palindromic_prefix(run_start(spec, n + 1));
    const Word body = reversed_run_power(table, n);
    rec.expect(is_factor(body, drop_last(u)),
               [&] { return "n=" + std::to_string(n) + ": (h̄)^d does not occur in u_{g(n+1)} x_1^{-1}"; });
    rec.expect(!is_factor(body + spec.run(n + 1).letter, u),
               [&] { return "n=" + std::to_string(n) + ": (h̄)^d y_{n+1} occurs in u_{g(n+1)}"; });
  }
  return rec.take();
}

PropertyResult check_prefix_sums(const MorphismTable& table, std::size_t factors) {
  const auto& spec = table.spec();
  Recorder rec("prefix-sums", &spec);
  const Factorization z = z_factorization(table, factors);
  for (std::size_t k = 2; k <= factors; ++k) {
    const Word lhs = concat(std::span(z.factors).first(k - 1));
    rec.expect_equal(table.palindromic_prefix(run_start(spec, k - 1)) + spec.run(k - 1).letter, lhs,
                     "z_1...z_" + std::to_string(k - 1));
  }
  const CTransient transient = c_transient(table);
  const Factorization c = c_factorization(table, transient.j + factors);
  for (std::size_t k = transient.j; k <= transient.j + factors; ++k) {
    const Word lhs = concat(std::span(c.factors).first(k));
    rec.expect_equal(table.palindromic_prefix(run_start(spec, k - transient.j + transient.i + 1)), lhs,
                     "c_1...c_" + std::to_string(k));
  }
  return rec.take();
}

PropertyResult check_z_from_c(const MorphismTable& table, std::size_t span) {
  Recorder rec("z-from-c", &table.spec());
  const std::size_t onset = z_from_c_onset(c_transient(table));
  for (std::size_t k = onset; k <= onset + span; ++k) {
    rec.expect_equal(z_factor_k(table, k), z_from_c(table, k), "z_" + std::to_string(k) + " from c");
  }
  return rec.take();
}

PropertyResult check_sturmian(const MorphismTable& table, std::size_t p_max) {
  Recorder rec("sturmian-standard-words", &table.spec());
  if (table.spec().alphabet_size() != 2) return rec.take();
  for (const auto& check : sturmian_c_check(table, p_max).checks) {
    rec.expect_equal(check.expected, check.actual, check.description);
  }
  return rec.take();
}

PropertyResult check_factor_counts(const MorphismTable& table, std::size_t min_length,
                                   std::size_t horizon_run) {
  const auto& spec = table.spec();
  Recorder rec("factor-counts", &spec);
  const Word& full = table.palindromic_prefix(run_start(spec, horizon_run));
  std::set<std::size_t> lengths;
  for (std::size_t n = 1; n <= run_start(spec, horizon_run); ++n) {
    const std::size_t len = table.palindromic_prefix(n).size();
    if (len >= min_length) lengths.insert(len);
  }
  for (std::size_t len = min_length; len <= full.size(); len += min_length) lengths.insert(len);
  for (std::size_t len : lengths) {
    const FactorCounts counts = factor_counts(full.prefix(len));
    rec.expect(counts.c <= 2 * counts.z, [&] {
      return "prefix length " + std::to_string(len) + ": c-count " + std::to_string(counts.c) +
             " > 2 x z-count " + std::to_string(counts.z);
    });
  }
  return rec.take();
}

namespace {

void compare_engines(Recorder& rec, const Word& w, bool with_naive_lpf) {
  const LpfArray fast = lpf(w);
  if (with_naive_lpf) {
    rec.expect(fast == lpf_naive(w), [&] { return "lpf mismatch on \"" + show(w) + "\""; });
  }
  rec.expect(z_factorize(w) == factorize_via_lpf(w, fast, Scheme::Z),
             [&] { return "z engines disagree on \"" + show(w) + "\""; });
  rec.expect(c_factorize(w) == factorize_via_lpf(w, fast, Scheme::C),
             [&] { return "c engines disagree on \"" + show(w) + "\""; });
}

}  // namespace

PropertyResult check_engines_exhaustive(std::size_t max_length) {
  Recorder rec("engine-agreement-exhaustive", nullptr);
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::string text(len, 'a');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (std::size_t i = 0; i < len; ++i) text[i] = (bits >> i) & 1 ? 'b' : 'a';
      compare_engines(rec, Word::from_text(text), true);
    }
  }
  return rec.take();
}

PropertyResult check_engines_random(std::uint64_t seed, std::size_t count, std::size_t max_length) {
  Recorder rec("engine-agreement-random", nullptr);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t letters = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(letters) - 1);
    std::string text(len, 'a');
    for (auto& c : text) c = static_cast<char>('a' + pick(rng));
    compare_engines(rec, Word::from_text(text), len <= 400);
  }
  return rec.take();
}

std::vector<PropertyResult> verify_spec(const DirectiveSpec& spec, const Options& options) {
  spec.require_closed_form();
  Horizon table_horizon;
  table_horizon.max_position = std::max<std::size_t>(64, options.lemmas.max_position + 2);
  table_horizon.max_length = std::max<std::size_t>(std::size_t{1} << 23, 4 * options.lemmas.max_length);
  const MorphismTable table(spec, table_horizon);

  const std::size_t z_factors = options.z_factors ? options.z_factors : (spec.alphabet_size() == 2 ? 8 : 6);
  const std::size_t horizon_run = z_factors + 2;
  const auto& hz = options.lemmas;

  const std::map<std::string, std::function<PropertyResult()>> runners = {
      {"closure-recursion", [&] { return check_closure_recursion(table, hz); }},
      {"increment-from-prefixes", [&] { return check_increment_from_prefixes(table, hz); }},
      {"increment-growth", [&] { return check_increment_growth(table, hz); }},
      {"increment-suffix", [&] { return check_increment_suffix(table, hz); }},
      {"run-powers", [&] { return check_run_powers(table, hz); }},
      {"primitivity", [&] { return check_primitivity(table, hz); }},
      {"morphism-agreement", [&] { return check_morphism_agreement(table, hz); }},
      {"episturmian-window", [&] { return check_episturmian_window(table, options.window_length); }},
      {"z-closed-form", [&] { return check_z_closed_form(table, z_factors); }},
      {"z-non-occurrence", [&] { return check_z_non_occurrence(table, z_factors); }},
      {"c-closed-form", [&] { return check_c_closed_form(table, horizon_run); }},
      {"c-non-occurrence", [&] { return check_c_non_occurrence(table, horizon_run); }},
      {"prefix-sums", [&] { return check_prefix_sums(table, z_factors); }},
      {"z-from-c", [&] { return check_z_from_c(table, options.z_from_c_span); }},
      {"sturmian-standard-words", [&] { return check_sturmian(table, options.sturmian_p_max); }},
      {"factor-counts", [&] { return check_factor_counts(table, options.count_min_length, horizon_run); }},
  };

  struct TraceScope {
    explicit TraceScope(bool on) { tracing = on; }
    ~TraceScope() { tracing = false; }
  } scope(options.trace);

  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) {
    if (!options.only.empty() && !options.only.contains(name)) continue;
    try {
      out.push_back(runners.at(name)());
    } catch (const std::exception& e) {
      PropertyResult failed;
      failed.name = name;
      failed.checks = 1;
      failed.failure_count = 1;
      failed.failures.push_back("spec \"" + spec.to_string() + "\" raised: " + e.what());
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::vector<PropertyResult> verify_corpus(const std::vector<DirectiveSpec>& specs, const Options& options,
                                          std::size_t jobs) {
  std::vector<std::vector<PropertyResult>> per_spec(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) per_spec[i] = verify_spec(specs[i], options);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, specs.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<PropertyResult> merged;
  for (const auto& results : per_spec) {
    for (const auto& r : results) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.name == r.name; });
      if (it == merged.end()) {
        merged.push_back(r);
      } else {
        it->merge(r);
      }
    }
  }
  return merged;
}

std::vector<DirectiveSpec> corpus(std::size_t alphabet, std::size_t max_runs, std::size_t max_exp) {
  if (alphabet < 2 || alphabet > kMaxAlphabet) throw PreconditionError("corpus alphabet must have 2..26 letters");
  std::vector<DirectiveSpec> out;
  for (std::size_t rotation = 0; rotation < alphabet; ++rotation) {
    std::vector<Run> tail;
    for (std::size_t t = 0; t < alphabet; ++t) tail.push_back({Letter((rotation + t) % alphabet), 1});

    // Depth-first over prefixes written right to left so the junction with
    // the tail is checked first.
    std::vector<Run> reversed_prefix;
    std::function<void()> extend = [&] {
      out.push_back(DirectiveSpec::create({reversed_prefix.rbegin(), reversed_prefix.rend()}, tail, alphabet));
      if (reversed_prefix.size() == max_runs) return;
      const Letter neighbour = reversed_prefix.empty() ? tail.front().letter : reversed_prefix.back().letter;
      for (std::size_t a = 0; a < alphabet; ++a) {
        if (Letter(a) == neighbour) continue;
        for (std::size_t e = 1; e <= max_exp; ++e) {
          reversed_prefix.push_back({Letter(a), e});
          extend();
          reversed_prefix.pop_back();
        }
      }
    };
    extend();
  }
  std::sort(out.begin(), out.end(),
            [](const DirectiveSpec& a, const DirectiveSpec& b) { return a.to_string() < b.to_string(); });
  return out;
}

}  // namespace epi::verify
