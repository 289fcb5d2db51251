#pragma once

// Brute-force reference implementations on plain std::string. Nothing here
// touches the library, so the tests compare two independent computations.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

inline std::string reversed(const std::string& w) { return {w.rbegin(), w.rend()}; }

inline bool palindrome(const std::string& w) { return w == reversed(w); }

/// Shortest palindrome with prefix w, by trying every completion length.
inline std::string closure(const std::string& w) {
  for (std::size_t k = 0; k <= w.size(); ++k) {
    std::string candidate = w + reversed(w.substr(0, k));
    if (palindrome(candidate)) return candidate;
  }
  return w + reversed(w);
}

inline std::size_t occurrences(const std::string& pattern, const std::string& text) {
  std::size_t n = 0;
  for (std::size_t q = 0; q + pattern.size() <= text.size(); ++q) {
    if (text.compare(q, pattern.size(), pattern) == 0) ++n;
  }
  return n;
}

inline bool primitive(const std::string& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    if (w.size() % p) continue;
    std::string repeated;
    while (repeated.size() < w.size()) repeated += w.substr(0, p);
    if (repeated == w) return false;
  }
  return true;
}

inline bool conjugate(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u.substr(r) + u.substr(0, r) == v) return true;
  }
  return false;
}

inline std::size_t distinct_factors(const std::string& w, std::size_t n) {
  std::vector<std::string> seen;
  for (std::size_t q = 0; q + n <= w.size(); ++q) seen.push_back(w.substr(q, n));
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

/// True if w[q, q+len) also starts at some position p < q (overlap allowed).
inline bool starts_earlier(const std::string& w, std::size_t q, std::size_t len) {
  const std::size_t p = w.find(w.substr(q, len));
  return p < q;
}

inline std::vector<std::size_t> lpf(const std::string& w) {
  std::vector<std::size_t> out(w.size(), 0);
  for (std::size_t q = 0; q < w.size(); ++q) {
    while (q + out[q] < w.size() && starts_earlier(w, q, out[q] + 1)) ++out[q];
  }
  return out;
}

struct Parse {
  std::vector<std::string> factors;
  bool last_complete = true;
};

/// Each factor is the shortest prefix of the remainder occurring exactly
/// once in the text read so far, itself included.
inline Parse z_parse(const std::string& w) {
  Parse out;
  std::size_t q = 0;
  while (q < w.size()) {
    std::size_t len = 1;
    while (q + len <= w.size() && occurrences(w.substr(q, len), w.substr(0, q + len)) != 1) ++len;
    if (q + len > w.size()) {
      out.factors.push_back(w.substr(q));
      out.last_complete = false;
      break;
    }
    out.factors.push_back(w.substr(q, len));
    q += len;
  }
  return out;
}

/// Each factor is the longest prefix of the remainder with an earlier
/// start, or a single fresh letter.
inline Parse c_parse(const std::string& w) {
  Parse out;
  std::size_t q = 0;
  while (q < w.size()) {
    std::size_t len = 0;
    while (q + len < w.size() && starts_earlier(w, q, len + 1)) ++len;
    len = std::max<std::size_t>(len, 1);
    out.factors.push_back(w.substr(q, len));
    q += len;
  }
  return out;
}

/// psi_a applied letter by letter.
inline std::string psi(char a, const std::string& w) {
  std::string out;
  for (char x : w) {
    if (x != a) out += a;
    out += x;
  }
  return out;
}

/// Palindromic prefixes u_1 .. u_count of the directive letters x_1 x_2 ...
inline std::vector<std::string> palindromic_prefixes(const std::string& directive, std::size_t count) {
  std::vector<std::string> u{""};
  for (std::size_t n = 1; n < count && n <= directive.size(); ++n) u.push_back(closure(u.back() + directive[n - 1]));
  return u;
}

}  // namespace oracle
