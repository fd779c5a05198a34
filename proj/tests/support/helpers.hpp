#pragma once

#include <initializer_list>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/nanophrase.hpp"

namespace testing {

using nanoword::AlphabetPtr;
using nanoword::Nanophrase;

inline AlphabetPtr one_symbol() { return nanoword::Alphabet::make({"a"}); }

inline AlphabetPtr curves_alphabet() {
  const std::pair<std::string, std::string> swaps[] = {{"a", "b"}};
  return nanoword::Alphabet::make({"a", "b"}, swaps);
}

/// Phrase from "A B | B A" and letter=symbol pairs.
inline Nanophrase phrase(const AlphabetPtr& alpha, const std::string& text,
                         std::initializer_list<std::pair<std::string, std::string>> proj) {
  nanoword::RawPhrase raw;
  raw.proj.assign(proj.begin(), proj.end());
  raw.components.emplace_back();
  std::istringstream in(text);
  for (std::string t; in >> t;) {
    if (t == "|") {
      raw.components.emplace_back();
    } else {
      raw.components.back().push_back(t);
    }
  }
  return nanoword::validate_nanophrase(alpha, raw);
}

/// Every letter projected to the same symbol.
inline Nanophrase uniform(const AlphabetPtr& alpha, const std::string& text,
                          const std::string& symbol) {
  nanoword::RawPhrase raw;
  raw.components.emplace_back();
  std::istringstream in(text);
  std::vector<std::string> seen;
  for (std::string t; in >> t;) {
    if (t == "|") {
      raw.components.emplace_back();
      continue;
    }
    raw.components.back().push_back(t);
    bool known = false;
    for (const auto& s : seen) known = known || s == t;
    if (!known) {
      seen.push_back(t);
      raw.proj.emplace_back(t, symbol);
    }
  }
  return nanoword::validate_nanophrase(alpha, raw);
}

}  // namespace testing
