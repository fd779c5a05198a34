#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nanoword/alphabet.hpp"

namespace nanoword {

using LetterId = std::uint16_t;

inline constexpr LetterId kNoLetter = 0xFFFF;

/// Non-owning view of a phrase: the concatenated word, the end offset of
/// each component, and the projection of each letter id.
struct PhraseView {
  std::span<const LetterId> word;
  std::span<const std::uint32_t> ends;
  std::span<const Symbol> proj;

  std::size_t components() const noexcept { return ends.size(); }
  std::size_t letters() const noexcept { return word.size() / 2; }
  std::uint32_t begin_of(std::size_t c) const noexcept { return c == 0 ? 0 : ends[c - 1]; }
  std::uint32_t size_of(std::size_t c) const noexcept { return ends[c] - begin_of(c); }
  /// Component holding position `pos`.
  std::size_t component_at(std::size_t pos) const noexcept;
};

/// Isomorphism-class representative: letters relabelled 0..n-1 by order of
/// first occurrence in the concatenation.
struct CanonicalForm {
  std::vector<LetterId> pattern;
  std::vector<std::uint32_t> ends;
  std::vector<Symbol> proj_seq;

  PhraseView view() const noexcept { return {pattern, ends, proj_seq}; }
  std::size_t letters() const noexcept { return proj_seq.size(); }
  std::size_t components() const noexcept { return ends.size(); }

  /// Compact byte encoding; equal keys iff equal forms.
  std::string key() const;
  static CanonicalForm from_key(std::string_view key);

  /// "1 2 | 2 1 ; a b": 1-based ranks with '|' between components, then
  /// ';' and the projections in rank order.
  std::string to_string(const Alphabet& alphabet) const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(PhraseView view);

/// Name used for rank `r` in canonical representatives: A..Z, A1..Z1, ...
std::string canonical_letter_name(std::size_t rank);

/// Unvalidated description of a phrase by names.
struct RawPhrase {
  std::vector<std::pair<std::string, std::string>> proj;  // letter -> symbol
  std::vector<std::vector<std::string>> components;
};

/// A nanophrase: k >= 1 words over a letter set in which every letter
/// occurs exactly twice, with a projection of letters into the alphabet.
/// Immutable after construction.
class Nanophrase {
 public:
  /// Throws LetterCountError / UnknownSymbol / ValidationError.
  Nanophrase(AlphabetPtr alphabet, std::vector<std::string> names, std::vector<Symbol> proj,
             std::vector<std::vector<LetterId>> components);

  /// Canonical representative with letters named by rank.
  static Nanophrase from_canonical(AlphabetPtr alphabet, const CanonicalForm& form);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  std::size_t components() const noexcept { return ends_.size(); }
  std::size_t letters() const noexcept { return names_.size(); }
  std::size_t length() const noexcept { return word_.size(); }

  PhraseView view() const noexcept { return {word_, ends_, proj_}; }
  std::span<const LetterId> word() const noexcept { return word_; }
  std::span<const LetterId> component(std::size_t c) const;

  Symbol proj(LetterId a) const { return proj_.at(a); }
  const std::string& name(LetterId a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<LetterId> find(std::string_view name) const;

  /// Positions of the two occurrences, ascending.
  std::array<std::uint32_t, 2> occurrences(LetterId a) const { return occ_.at(a); }
  std::size_t component_at(std::size_t pos) const noexcept { return view().component_at(pos); }

  /// "A B | B A"
  std::string to_string() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::string> names_;
  std::vector<Symbol> proj_;
  std::vector<LetterId> word_;
  std::vector<std::uint32_t> ends_;
  std::vector<std::array<std::uint32_t, 2>> occ_;
};

/// Validates a raw description. Every violating letter is reported.
Nanophrase validate_nanophrase(AlphabetPtr alphabet, const RawPhrase& raw);

CanonicalForm canonical_form(const Nanophrase& phrase);

/// Throws AlphabetMismatch when the alphabets differ.
bool are_isomorphic(const Nanophrase& a, const Nanophrase& b);

/// Calls `visit` once per isomorphism class of nanophrases with exactly
/// `letters` letters and `components` components, in a fixed order.
void for_each_nanophrase(const Alphabet& alphabet, std::size_t letters, std::size_t components,
                         const std::function<void(const CanonicalForm&)>& visit);

std::vector<CanonicalForm> enumerate_nanophrases(const Alphabet& alphabet, std::size_t letters,
                                                 std::size_t components);

}  // namespace nanoword
