#include "epi/factorizer.hpp"

#include <algorithm>
#include <utility>

#include "epi/errors.hpp"

namespace epi {

std::string_view scheme_name(Scheme s) { return s == Scheme::Z ? "z" : "c"; }

std::size_t Factorization::input_length() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.size();
  return n;
}

std::size_t Factorization::trusted_count() const {
  return factors.size() - (cut_by_input_end && !factors.empty() ? 1 : 0);
}

std::size_t Factorization::complete_count() const {
  return factors.size() - (!last_complete && !factors.empty() ? 1 : 0);
}

Word Factorization::joined() const { return concat(factors); }

namespace {

void require_nonempty(const Word& w, std::string_view who) {
  if (w.empty()) throw PreconditionError(std::string(who) + ": empty input");
}

/// Length of the longest prefix of w[q..] that also starts at some q' < q,
/// found by filtering the candidate starts one letter at a time.
std::size_t scan_previous_match(std::string_view t, std::size_t q, std::vector<std::size_t>& live) {
  live.clear();
  for (std::size_t s = 0; s < q; ++s) {
    if (t[s] == t[q]) live.push_back(s);
  }
  if (live.empty()) return 0;
  std::size_t len = 1;
  while (q + len < t.size()) {
    const char next = t[q + len];
    std::erase_if(live, [&](std::size_t s) { return t[s + len] != next; });
    if (live.empty()) break;
    ++len;
  }
  return len;
}

}  // namespace

Factorization c_factorize(const Word& w) {
  require_nonempty(w, "c_factorize");
  const std::string_view t = w.view();
  Factorization out{Scheme::C, {}, true, false};
  std::vector<std::size_t> live;
  std::size_t q = 0;
  while (q < t.size()) {
    const std::size_t match = scan_previous_match(t, q, live);
    const std::size_t len = std::max<std::size_t>(match, 1);
    out.factors.push_back(w.slice(q, len));
    q += len;
    out.cut_by_input_end = match > 0 && q == t.size();
  }
  return out;
}

Factorization z_factorize(const Word& w) {
  require_nonempty(w, "z_factorize");
  const std::string_view t = w.view();
  Factorization out{Scheme::Z, {}, true, false};
  std::vector<std::size_t> live;
  std::size_t q = 0;
  while (q < t.size()) {
    // Shortest prefix with no earlier start: one letter past the longest one that has.
    const std::size_t match = scan_previous_match(t, q, live);
    if (q + match >= t.size()) {
      out.factors.push_back(w.slice(q, t.size() - q));
      out.last_complete = false;
      out.cut_by_input_end = true;
      break;
    }
    out.factors.push_back(w.slice(q, match + 1));
    q += match + 1;
  }
  return out;
}

LpfArray lpf_naive(const Word& w) {
  const std::string_view t = w.view();
  LpfArray out(t.size(), 0);
  for (std::size_t q = 0; q < t.size(); ++q) {
    std::size_t best = 0;
    for (std::size_t s = 0; s < q; ++s) {
      std::size_t l = 0;
      while (q + l < t.size() && t[s + l] == t[q + l]) ++l;
      best = std::max(best, l);
    }
    out[q] = static_cast<std::uint32_t>(best);
  }
  return out;
}

std::vector<std::uint32_t> suffix_array(std::string_view text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n), next_rank(n);
  if (n == 0) return sa;

  std::size_t classes = 256;
  std::vector<std::uint32_t> cnt(std::max<std::size_t>(classes, n) + 1);
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(text[i]);
  for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i]];
  for (std::size_t c = 1; c < classes; ++c) cnt[c] += cnt[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--cnt[rank[i]]] = static_cast<std::uint32_t>(i);

  for (std::size_t k = 1;; k <<= 1) {
    // Order by second key: suffixes without a second half first.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t r = 0; r < n; ++r) {
      if (sa[r] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[r] - k);
    }
    // Stable counting sort by first key.
    std::fill(cnt.begin(), cnt.begin() + static_cast<std::ptrdiff_t>(classes), 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i]];
    for (std::size_t c = 1; c < classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t r = n; r-- > 0;) sa[--cnt[rank[tmp[r]]]] = tmp[r];

    auto second = [&](std::uint32_t i) -> std::int64_t {
      return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
    };
    next_rank[sa[0]] = 0;
    classes = 1;
    for (std::size_t r = 1; r < n; ++r) {
      const auto a = sa[r - 1];
      const auto b = sa[r];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      next_rank[b] = static_cast<std::uint32_t>(same ? classes - 1 : classes++);
    }
    std::swap(rank, next_rank);
    if (classes == n || k >= n) break;
  }
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::string_view text, const std::vector<std::uint32_t>& sa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

LpfArray lpf(const Word& w) {
  const std::string_view t = w.view();
  const std::size_t n = t.size();
  LpfArray out(n, 0);
  if (n == 0) return out;
  const auto sa = suffix_array(t);
  const auto lcp = lcp_array(t, sa);

  // The best earlier start for suffix sa[r] is the nearest rank on either
  // side holding a smaller text position. Each stack entry carries the
  // minimum lcp between it and the entry below it, so the lcp with the
  // nearest smaller value falls out of the pops.
  struct Entry {
    std::uint32_t rank;
    std::uint32_t min_lcp;
  };
  std::vector<Entry> stack;
  stack.reserve(n);

  for (std::size_t r = 0; r < n; ++r) {
    std::uint32_t run = r > 0 ? lcp[r] : 0;
    while (!stack.empty() && sa[stack.back().rank] > sa[r]) {
      run = std::min(run, stack.back().min_lcp);
      stack.pop_back();
    }
    out[sa[r]] = stack.empty() ? 0 : run;
    stack.push_back({static_cast<std::uint32_t>(r), run});
  }

  stack.clear();
  for (std::size_t r = n; r-- > 0;) {
    std::uint32_t run = r + 1 < n ? lcp[r + 1] : 0;
    while (!stack.empty() && sa[stack.back().rank] > sa[r]) {
      run = std::min(run, stack.back().min_lcp);
      stack.pop_back();
    }
    if (!stack.empty()) out[sa[r]] = std::max(out[sa[r]], run);
    stack.push_back({static_cast<std::uint32_t>(r), run});
  }
  return out;
}

Factorization factorize_via_lpf(const Word& w, const LpfArray& lpf_values, Scheme scheme) {
  require_nonempty(w, "factorize_via_lpf");
  if (lpf_values.size() != w.size()) throw PreconditionError("lpf array does not match word length");
  const std::size_t n = w.size();
  Factorization out{scheme, {}, true, false};
  std::size_t q = 0;
  while (q < n) {
    const std::size_t match = lpf_values[q];
    std::size_t len = scheme == Scheme::C ? std::max<std::size_t>(match, 1) : match + 1;
    if (q + len > n) {
      len = n - q;
      out.last_complete = false;
    }
    out.factors.push_back(w.slice(q, len));
    q += len;
    if (q == n) out.cut_by_input_end = match > 0 && q - len + match >= n;
  }
  return out;
}

Factorization factorize_via_lpf(const Word& w, Scheme scheme) {
  require_nonempty(w, "factorize_via_lpf");
  return factorize_via_lpf(w, lpf(w), scheme);
}

FactorCounts factor_counts(const Word& w) {
  const auto values = lpf(w);
  return {factorize_via_lpf(w, values, Scheme::Z).complete_count(),
          factorize_via_lpf(w, values, Scheme::C).factors.size()};
}

}  // namespace epi
