#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/nanophrase.hpp"

namespace nanoword {

/// M1/M2 delete letters, M3 and M3inv transpose three adjacent pairs,
/// M1ins/M2ins are the inverses of M1/M2.
enum class MoveKind : std::uint8_t { M1, M2, M3, M3inv, M1ins, M2ins };

std::string_view to_string(MoveKind kind) noexcept;

/// Letters added (positive) or removed (negative) by a move.
int letter_delta(MoveKind kind) noexcept;

class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<MoveKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }
  static constexpr KindSet all() { return from_bits(0x3F); }
  static constexpr KindSet reducing() {
    return KindSet{MoveKind::M1, MoveKind::M2, MoveKind::M3, MoveKind::M3inv};
  }
  constexpr bool contains(MoveKind k) const { return (bits_ & bit(k)) != 0; }

 private:
  static constexpr std::uint8_t bit(MoveKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  static constexpr KindSet from_bits(std::uint8_t b) {
    KindSet s;
    s.bits_ = b;
    return s;
  }
  std::uint8_t bits_ = 0;
};

/// Insertion point: before offset `offset` of component `component`.
struct Gap {
  std::uint32_t component = 0;
  std::uint32_t offset = 0;
  friend auto operator<=>(const Gap&, const Gap&) = default;
};

/// Where a move applies.
///
/// `pairs` holds the start positions (in the concatenated word) of the
/// matched adjacent pairs: one for M1, two for M2 (AB ... BA), three for
/// M3 (AB ... AC ... BC) and M3inv (BA ... CA ... CB). Insertions use
/// `gaps` and `symbols` instead; M2ins puts AB at gaps[0] and BA at gaps[1]
/// with |A| = symbols[0], |B| = symbols[1].
struct MoveSite {
  MoveKind kind = MoveKind::M1;
  std::array<std::uint32_t, 3> pairs{};
  std::array<Gap, 2> gaps{};
  std::array<Symbol, 2> symbols{};

  /// Every matched letter position, ascending.
  std::vector<std::uint32_t> positions() const;

  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

inline constexpr std::size_t kNoInsertions = 0;

/// All sites of the requested kinds, sorted. Insertions are offered only
/// while the result stays within `max_letters` letters.
std::vector<MoveSite> find_move_sites(PhraseView phrase, const MoveSystem& system,
                                      KindSet kinds = KindSet::all(),
                                      std::size_t max_letters = kNoInsertions);
std::vector<MoveSite> find_move_sites(const Nanophrase& phrase, const MoveSystem& system,
                                      KindSet kinds = KindSet::all(),
                                      std::size_t max_letters = kNoInsertions);

/// The letter pattern of the site is present (ignores Q, R, S).
bool site_matches(PhraseView phrase, const MoveSite& site) noexcept;
/// The pattern is present and the move is permitted by the system.
bool site_allowed(PhraseView phrase, const MoveSite& site, const MoveSystem& system);

/// Applies the site and returns the canonical form of the result. When
/// `relabel` is given it receives, for each old letter id, its rank in
/// the result (kNoLetter if deleted), followed by the ranks of the
/// inserted letters. Throws StaleSite.
CanonicalForm apply_site(PhraseView phrase, const MoveSite& site,
                         std::vector<LetterId>* relabel = nullptr);

/// Applies the site keeping letter names; inserted letters get fresh names.
Nanophrase apply_move(const Nanophrase& phrase, const MoveSite& site);

/// The site on the result of `apply_site(before, site)` that undoes it.
MoveSite inverse_site(PhraseView before, const MoveSite& site);

}  // namespace nanoword
