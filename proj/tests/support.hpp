#pragma once

#include <string>
#include <vector>

#include "jsjd/random.hpp"
#include "jsjd/words.hpp"

namespace jsjd::testing {

inline FreeWord W(const std::string& letters, int rank = 2) {
  return word_from_letters(letters, Alphabet{rank});
}

inline std::string S(const FreeWord& w) { return to_string(w); }

/// Unreduced letter sequence of a string, for oracles that must not share
/// the library's reduction code.
inline std::vector<int> raw_letters(const std::string& text) {
  std::vector<int> raw;
  for (char c : text) raw.push_back(c >= 'a' ? c - 'a' + 1 : -(c - 'A' + 1));
  return raw;
}

/// Naive reduction: repeatedly delete the first cancelling pair.
inline std::vector<int> naive_reduce(std::vector<int> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == -s[i + 1]) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

inline std::vector<int> to_raw(const FreeWord& w) { return {w.letters().begin(), w.letters().end()}; }

/// Every reduced word of exactly `length` letters over rank 2.
inline std::vector<FreeWord> all_reduced_words(std::size_t length, int rank = 2) {
  std::vector<FreeWord> out;
  std::vector<int> current;
  auto rec = [&](auto&& self) -> void {
    if (current.size() == length) {
      out.push_back(reduce(current, Alphabet{rank}));
      return;
    }
    for (int g = 1; g <= rank; ++g) {
      for (int sign : {1, -1}) {
        const int l = sign * g;
        if (!current.empty() && current.back() == -l) continue;
        current.push_back(l);
        self(self);
        current.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

}  // namespace jsjd::testing
