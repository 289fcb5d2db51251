#include "epi/directive.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "epi/errors.hpp"

namespace epi {

namespace {

std::string describe(std::string_view part, std::size_t idx, Letter a) {
  std::ostringstream os;
  os << part << " run " << idx + 1 << " (" << a.symbol() << ")";
  return os.str();
}

void check_junction(const Run& lhs, std::string_view lpart, std::size_t lidx, const Run& rhs,
                    std::string_view rpart, std::size_t ridx) {
  if (lhs.letter == rhs.letter) {
    throw SpecError("adjacent runs share letter '" + std::string(1, lhs.letter.symbol()) +
                    "' at junction " + describe(lpart, lidx, lhs.letter) + " -> " +
                    describe(rpart, ridx, rhs.letter));
  }
}

class RunListParser {
 public:
  explicit RunListParser(std::string_view text) : text_(text) {}

  std::vector<Run> parse() {
    std::vector<Run> runs;
    skip_separators();
    while (pos_ < text_.size()) {
      runs.push_back(parse_run());
      const std::size_t before = pos_;
      skip_separators();
      if (pos_ < text_.size() && pos_ == before) {
        fail("expected separator");
      }
    }
    return runs;
  }

 private:
  Run parse_run() {
    const char c = text_[pos_];
    if (c < 'a' || c > 'z') fail("expected a letter");
    ++pos_;
    Run run{Letter::from_symbol(c), 1};
    const std::size_t after_letter = pos_;
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      pos_ = after_letter;
    } else {
      ++pos_;
      skip_spaces();
      std::size_t exponent = 0;
      const auto* first = text_.data() + pos_;
      const auto* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{} || ptr == first) fail("expected an exponent after '^'");
      pos_ += static_cast<std::size_t>(ptr - first);
      run.exponent = exponent;
    }
    return run;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ',' || std::isspace(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::string_view what) const {
    throw SpecError("directive parse error at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\": " + std::string(what));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t total_length(const std::vector<Run>& runs) {
  std::size_t n = 0;
  for (const auto& r : runs) n += r.exponent;
  return n;
}

}  // namespace

DirectiveSpec DirectiveSpec::create(std::vector<Run> prefix, std::vector<Run> tail,
                                    std::optional<std::size_t> alphabet_size) {
  if (prefix.empty() && tail.empty()) throw SpecError("directive word is empty");

  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].exponent == 0) {
      throw SpecError("exponent must be positive at " + describe("prefix", i, prefix[i].letter));
    }
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i].exponent == 0) {
      throw SpecError("exponent must be positive at " + describe("tail", i, tail[i].letter));
    }
  }

  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    check_junction(prefix[i], "prefix", i, prefix[i + 1], "prefix", i + 1);
  }
  if (!prefix.empty() && !tail.empty()) {
    check_junction(prefix.back(), "prefix", prefix.size() - 1, tail.front(), "tail", 0);
  }
  for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
    check_junction(tail[i], "tail", i, tail[i + 1], "tail", i + 1);
  }
  if (tail.size() > 1) {
    check_junction(tail.back(), "tail", tail.size() - 1, tail.front(), "tail", 0);
  }

  // Remaining single-letter case: one tail run, e.g. "| a".
  if (!tail.empty()) {
    const bool single = std::all_of(tail.begin(), tail.end(),
                                    [&](const Run& r) { return r.letter == tail[0].letter; });
    if (single) {
      throw SpecError("tail uses the single letter '" + std::string(1, tail[0].letter.symbol()) +
                      "': the word would be periodic and its z-factors never terminate");
    }
  }

  bool used[kMaxAlphabet] = {};
  std::size_t max_index = 0;
  for (const auto* runs : {&prefix, &tail}) {
    for (const auto& r : *runs) {
      used[r.letter.index()] = true;
      max_index = std::max(max_index, r.letter.index());
    }
  }
  const std::size_t k = alphabet_size.value_or(max_index + 1);
  if (k == 0 || k > kMaxAlphabet || max_index >= k) {
    throw SpecError("alphabet size " + std::to_string(k) + " does not cover the letters used");
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!used[a]) {
      throw SpecError("letter '" + std::string(1, Letter(a).symbol()) +
                      "' of the alphabet never occurs in the directive word");
    }
  }

  DirectiveSpec spec;
  spec.prefix_ = std::move(prefix);
  spec.tail_ = std::move(tail);
  spec.alphabet_size_ = k;
  spec.prefix_length_ = total_length(spec.prefix_);
  spec.tail_length_ = total_length(spec.tail_);
  return spec;
}

DirectiveSpec DirectiveSpec::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos) {
    throw SpecError("directive \"" + std::string(text) + "\" has more than one '|'");
  }
  auto prefix = RunListParser(text.substr(0, bar)).parse();
  std::vector<Run> tail;
  if (bar != std::string_view::npos) tail = RunListParser(text.substr(bar + 1)).parse();
  return create(std::move(prefix), std::move(tail));
}

std::vector<Letter> DirectiveSpec::ultimate_letters() const {
  std::vector<Letter> out;
  for (const auto& r : tail_) {
    if (std::find(out.begin(), out.end(), r.letter) == out.end()) out.push_back(r.letter);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void DirectiveSpec::require_closed_form() const {
  if (ultimate_letters().size() < 2) {
    throw SpecError("directive \"" + to_string() +
                    "\" needs a periodic tail with at least two distinct letters");
  }
}

Letter DirectiveSpec::letter_at(std::size_t n) const {
  if (n == 0) throw PreconditionError("directive positions are 1-based");
  return run(run_index_at(n)).letter;
}

std::size_t DirectiveSpec::run_index_at(std::size_t n) const {
  if (n == 0) throw PreconditionError("directive positions are 1-based");
  std::size_t pos = n - 1;
  if (pos < prefix_length_) {
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (pos < prefix_[i].exponent) return i + 1;
      pos -= prefix_[i].exponent;
    }
  }
  if (tail_.empty()) {
    throw PreconditionError("position " + std::to_string(n) + " is past the end of the finite directive word");
  }
  pos -= prefix_length_;
  const std::size_t cycles = pos / tail_length_;
  pos %= tail_length_;
  for (std::size_t i = 0; i < tail_.size(); ++i) {
    if (pos < tail_[i].exponent) return prefix_.size() + cycles * tail_.size() + i + 1;
    pos -= tail_[i].exponent;
  }
  return 0;  // unreachable
}

Run DirectiveSpec::run(std::size_t m) const {
  if (m == 0) throw PreconditionError("run indices are 1-based");
  if (m <= prefix_.size()) return prefix_[m - 1];
  if (tail_.empty()) {
    throw PreconditionError("run " + std::to_string(m) + " is past the end of the finite directive word");
  }
  return tail_[(m - 1 - prefix_.size()) % tail_.size()];
}

std::size_t DirectiveSpec::finite_run_count() const {
  if (!tail_.empty()) throw PreconditionError("directive word is infinite");
  return prefix_.size();
}

std::string DirectiveSpec::to_string() const {
  std::ostringstream os;
  auto emit = [&os](const std::vector<Run>& runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i) os << ' ';
      os << runs[i].letter.symbol();
      if (runs[i].exponent != 1) os << '^' << runs[i].exponent;
    }
  };
  emit(prefix_);
  if (!tail_.empty()) {
    os << (prefix_.empty() ? "| " : " | ");
    emit(tail_);
  }
  return os.str();
}

Word expand_directive(const DirectiveSpec& spec, std::size_t n) {
  if (!spec.is_infinite() && n > spec.prefix_length()) {
    throw PreconditionError("cannot expand " + std::to_string(n) + " letters of a directive word of length " +
                            std::to_string(spec.prefix_length()));
  }
  Word::Builder b;
  b.reserve(n);
  for (std::size_t m = 1; b.size() < n; ++m) {
    const Run r = spec.run(m);
    for (std::size_t e = 0; e < r.exponent && b.size() < n; ++e) b.append(r.letter);
  }
  return std::move(b).build();
}

Run run_of(const DirectiveSpec& spec, std::size_t m) { return spec.run(m); }

std::size_t run_start(const DirectiveSpec& spec, std::size_t m) {
  if (m == 0) throw PreconditionError("run indices are 1-based");
  std::size_t start = 1;
  for (std::size_t t = 1; t < m; ++t) start += spec.run(t).exponent;
  return start;
}

std::optional<std::size_t> previous_occurrence(const DirectiveSpec& spec, std::size_t n) {
  const Letter target = spec.letter_at(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (spec.letter_at(i) == target) return i;
  }
  return std::nullopt;
}

}  // namespace epi
