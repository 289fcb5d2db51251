// epifactor: generate standard episturmian words, factorize them by oracle
// and by closed form, verify the theorems over corpora, time the engines.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <thread>

#include "epi/closed_form.hpp"
#include "epi/directive.hpp"
#include "epi/episturmian.hpp"
#include "epi/errors.hpp"
#include "epi/factorizer.hpp"
#include "epi/json_io.hpp"
#include "epi/verify.hpp"

namespace {

using namespace epi;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

// Generous table limits; the closed forms and oracles stop well short.
Horizon cli_horizon() { return Horizon{256, std::size_t{1} << 26}; }

std::string joined_bars(const std::vector<Word>& factors) {
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += '|';
    out += factors[k].text();
  }
  return out;
}

struct GenerateArgs {
  std::string directive;
  std::size_t length = 0;
  std::string format = "text";
};

int cmd_generate(const GenerateArgs& a) {
  const auto spec = DirectiveSpec::parse(a.directive);
  const Word w = MorphismTable(spec, cli_horizon()).standard_prefix(a.length);
  if (a.format == "json") {
    std::cout << json{{"directive", spec.to_string()}, {"length", w.size()}, {"word", w.text()}}.dump() << '\n';
  } else {
    std::cout << w << '\n';
  }
  return kExitOk;
}

struct FactorizeArgs {
  std::string directive;
  std::optional<std::string> literal;
  std::string scheme = "z";
  std::string source = "oracle";
  std::string engine = "lpf";
  std::optional<std::size_t> count;
  std::optional<std::size_t> length;
  std::string format = "text";
};

Factorization run_oracle(const Word& w, Scheme scheme, const std::string& engine) {
  if (engine == "naive") return scheme == Scheme::Z ? z_factorize(w) : c_factorize(w);
  return factorize_via_lpf(w, scheme);
}

std::size_t settled_count(const Factorization& f) {
  return f.scheme == Scheme::Z ? f.complete_count() : f.trusted_count();
}

/// Oracle factorization of a prefix of the standard word long enough to
/// settle the first `count` factors, truncated to them.
Factorization oracle_first(const MorphismTable& table, Scheme scheme, std::size_t count, const std::string& engine) {
  const auto& spec = table.spec();
  for (std::size_t run = count + 2;; run += 2) {
    const Word& w = table.palindromic_prefix(run_start(spec, run));
    Factorization f = run_oracle(w, scheme, engine);
    if (settled_count(f) >= count) {
      f.factors.resize(count);
      f.last_complete = true;
      f.cut_by_input_end = false;
      return f;
    }
  }
}

std::optional<std::size_t> first_divergence(const Factorization& a, const Factorization& b, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    if (k >= a.factors.size() || k >= b.factors.size() || a.factors[k] != b.factors[k]) return k + 1;
  }
  return std::nullopt;
}

int cmd_factorize(const FactorizeArgs& a) {
  const Scheme scheme = a.scheme == "z" ? Scheme::Z : Scheme::C;
  const bool json_out = a.format == "json";

  if (a.literal) {
    if (a.source != "oracle") throw SpecError("--source " + a.source + " needs a directive word (-d)");
    const Word w = Word::from_text(*a.literal);
    const Factorization f = run_oracle(w, scheme, a.engine);
    if (json_out) {
      std::cout << to_json(f).dump() << '\n';
    } else {
      std::cout << joined_bars(f.factors) << '\n';
    }
    return kExitOk;
  }

  const auto spec = DirectiveSpec::parse(a.directive);
  const MorphismTable table(spec, cli_horizon());

  std::optional<Factorization> oracle;
  std::size_t count = a.count.value_or(8);
  if (a.source != "closed") {
    if (a.length) {
      oracle = run_oracle(table.standard_prefix(*a.length), scheme, a.engine);
      count = settled_count(*oracle);
    } else {
      oracle = oracle_first(table, scheme, count, a.engine);
    }
  }

  std::optional<Factorization> closed;
  std::optional<CTransient> transient;
  if (a.source != "oracle" && count > 0) {
    if (scheme == Scheme::Z) {
      closed = z_factorization(table, count);
    } else {
      transient = c_transient(table);
      closed = c_factorization(table, count);
    }
  }

  std::optional<std::size_t> divergence;
  if (oracle && closed) divergence = first_divergence(*oracle, *closed, count);

  if (json_out) {
    json out;
    if (oracle && !closed) out = to_json(*oracle);
    if (closed && !oracle) out = closed_form_json(*closed, transient ? &*transient : nullptr);
    if (oracle && closed) {
      json o = to_json(*oracle);
      o["source"] = "oracle";
      out = {{"oracle", o},
             {"closed_form", closed_form_json(*closed, transient ? &*transient : nullptr)},
             {"compared", count},
             {"verdict", divergence ? "MISMATCH" : "MATCH"},
             {"first_divergent_index", divergence ? json(*divergence) : json(nullptr)}};
    }
    std::cout << out.dump() << '\n';
  } else {
    if (oracle) std::cout << a.scheme << " oracle: " << joined_bars(oracle->factors) << '\n';
    if (closed) std::cout << a.scheme << " closed: " << joined_bars(closed->factors) << '\n';
    if (transient) {
      std::cout << "transient i=" << transient->i << " j=" << transient->j << " k0=" << transient->k0
                << " m=" << transient->m << " onset=" << z_from_c_onset(*transient) << '\n';
    }
    if (oracle && closed) std::cout << (divergence ? "MISMATCH" : "MATCH") << '\n';
  }
  if (divergence) {
    std::cerr << "first divergent " << a.scheme << "-factor index: " << *divergence << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::size_t> alphabets;
  std::size_t max_runs = 4;
  std::size_t max_exp = 3;
  std::vector<std::string> specs;
  std::vector<std::string> lemmas;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  verify::Options options;
  for (const auto& name : a.lemmas) {
    const auto resolved = verify::resolve_property(name);
    if (!resolved) throw SpecError("unknown property \"" + name + "\"");
    options.only.insert(*resolved);
  }

  std::vector<DirectiveSpec> specs;
  for (const auto& text : a.specs) specs.push_back(DirectiveSpec::parse(text));
  const bool corpus_mode = specs.empty();
  if (corpus_mode) {
    const std::vector<std::size_t> alphabets = a.alphabets.empty() ? std::vector<std::size_t>{2, 3} : a.alphabets;
    for (std::size_t k : alphabets) {
      auto part = verify::corpus(k, a.max_runs, a.max_exp);
      specs.insert(specs.end(), part.begin(), part.end());
    }
  }
  options.trace = specs.size() == 1;

  const std::size_t jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  auto results = verify::verify_corpus(specs, options, jobs);
  if (corpus_mode && options.only.empty()) {
    results.push_back(verify::check_engines_exhaustive(12));
    results.push_back(verify::check_engines_random(a.seed, 500, 2000));
  }

  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed() ? 0 : 1;

  if (a.format == "json") {
    json props = json::array();
    for (const auto& r : results) props.push_back(to_json(r));
    std::cout << json{{"specs", specs.size()},
                      {"seed", a.seed},
                      {"properties", props},
                      {"passed", failed == 0}}
                     .dump()
              << '\n';
  } else {
    for (const auto& r : results) {
      for (const auto& line : r.trace) std::cout << "  pass " << r.name << " " << line << '\n';
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks";
      if (!r.passed()) std::cout << ", " << r.failure_count << " failed";
      std::cout << '\n';
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    }
    if (failed == 0) {
      std::cout << "all " << results.size() << " properties passed over " << specs.size() << " specs\n";
    } else {
      std::cout << failed << " of " << results.size() << " properties failed over " << specs.size() << " specs\n";
    }
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::string engine = "lpf";
  std::string directive = "|a b";
  bool literal_random = false;
  std::size_t length = 100000;
  std::string scheme = "z";
  std::uint64_t seed = 7;
  std::size_t alphabet = 2;
  std::string format = "json";
};

int cmd_bench(const BenchArgs& a) {
  using clock = std::chrono::steady_clock;
  const Scheme scheme = a.scheme == "z" ? Scheme::Z : Scheme::C;

  const auto t0 = clock::now();
  Word w;
  std::string source;
  if (a.literal_random) {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(a.alphabet) - 1);
    std::string text(a.length, 'a');
    for (auto& c : text) c = static_cast<char>('a' + pick(rng));
    w = Word::from_text(text);
    source = "random";
  } else {
    const auto spec = DirectiveSpec::parse(a.directive);
    w = MorphismTable(spec, cli_horizon()).standard_prefix(a.length);
    source = spec.to_string();
  }
  const auto t1 = clock::now();
  const Factorization f = run_oracle(w, scheme, a.engine);
  const auto t2 = clock::now();

  const double generate_s = std::chrono::duration<double>(t1 - t0).count();
  const double factorize_s = std::chrono::duration<double>(t2 - t1).count();
  const json out{{"engine", a.engine},          {"source", source},
                 {"seed", a.literal_random ? json(a.seed) : json(nullptr)},
                 {"n", w.size()},               {"scheme", a.scheme},
                 {"factors", f.factors.size()}, {"complete_factors", f.complete_count()},
                 {"generate_seconds", generate_s}, {"seconds", factorize_s}};
  if (a.format == "json") {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << a.engine << " " << a.scheme << " n=" << w.size() << " factors=" << f.factors.size()
              << " time=" << factorize_s << "s\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard episturmian words and their Ziv-Lempel / Crochemore factorizations"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print a prefix of the standard word of a directive word");
  generate->add_option("-d,--directive", gen.directive, "Directive word, e.g. \"a^2 b | a b\"")->required();
  generate->add_option("-n,--length", gen.length, "Prefix length")->required();
  generate->add_option("--format", gen.format)->check(CLI::IsMember(formats));

  FactorizeArgs fac;
  auto* factorize = app.add_subcommand("factorize", "z- or c-factorization by oracle and/or closed form");
  auto* d_opt = factorize->add_option("-d,--directive", fac.directive, "Directive word");
  auto* lit_opt = factorize->add_option("--literal", fac.literal, "Factorize this word instead");
  d_opt->excludes(lit_opt);
  auto* k_opt = factorize->add_option("-k,--count", fac.count, "Number of factors (default 8)");
  auto* n_opt = factorize->add_option("-n,--length", fac.length, "Factorize the prefix of this length");
  k_opt->excludes(n_opt);
  k_opt->excludes(lit_opt);
  n_opt->excludes(lit_opt);
  factorize->add_option("--scheme", fac.scheme)->check(CLI::IsMember({"z", "c"}));
  factorize->add_option("--source", fac.source)->check(CLI::IsMember({"oracle", "closed", "both"}));
  factorize->add_option("--engine", fac.engine, "Oracle engine")->check(CLI::IsMember({"naive", "lpf"}));
  factorize->add_option("--format", fac.format)->check(CLI::IsMember(formats));

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check lemmas and theorems over a corpus of directive words");
  verify_cmd->add_option("--alphabet", ver.alphabets, "Alphabet sizes of the corpus (default 2 3)")
      ->check(CLI::Range(2, 26));
  verify_cmd->add_option("--max-runs", ver.max_runs, "Prefix runs in corpus specs");
  verify_cmd->add_option("--max-exp", ver.max_exp, "Largest prefix exponent")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--spec", ver.specs, "Verify these directive words instead of a corpus");
  verify_cmd->add_option("--lemma", ver.lemmas, "Restrict to these properties");
  verify_cmd->add_option("--seed", ver.seed, "Seed for the random engine-agreement words");
  verify_cmd->add_option("--jobs", ver.jobs, "Worker threads (default: hardware)");
  verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember(formats));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time a factorization engine");
  bench->add_option("--engine", bench_args.engine)->check(CLI::IsMember({"naive", "lpf"}));
  auto* bd_opt = bench->add_option("-d,--directive", bench_args.directive, "Directive word (default \"|a b\")");
  auto* rand_flag = bench->add_flag("--literal-random", bench_args.literal_random, "Seeded random word");
  bd_opt->excludes(rand_flag);
  bench->add_option("-n,--length", bench_args.length, "Input length")->check(CLI::PositiveNumber);
  bench->add_option("--scheme", bench_args.scheme)->check(CLI::IsMember({"z", "c"}));
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--alphabet", bench_args.alphabet, "Letters in the random word")->check(CLI::Range(1, 26));
  bench->add_option("--format", bench_args.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*factorize) {
      if (!*d_opt && !*lit_opt) throw SpecError("factorize needs -d or --literal");
      return cmd_factorize(fac);
    }
    if (*verify_cmd) return cmd_verify(ver);
    if (*bench) return cmd_bench(bench_args);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
