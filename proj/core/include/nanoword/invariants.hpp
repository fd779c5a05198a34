#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/nanophrase.hpp"
#include "nanoword/pi_group.hpp"

namespace nanoword {

/// Coordinate of a sigma vector: component j (0-based) and the orbit pair
/// (p, q) (0-based, orbit order of the alphabet).
struct SigmaKey {
  std::uint32_t component = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  friend auto operator<=>(const SigmaKey&, const SigmaKey&) = default;
};

enum class SigmaType { Zero, I, II, III };

/// Sparse vector over the product of the coefficient groups K_(p,q):
/// integers when both orbits are free, integers mod 2 otherwise.
class SigmaVector {
 public:
  SigmaVector() = default;
  explicit SigmaVector(std::size_t free_orbits) : free_orbits_(free_orbits) {}

  bool integral(const SigmaKey& key) const noexcept {
    return key.p < free_orbits_ && key.q < free_orbits_;
  }
  /// Adds `delta` at `key`, reducing mod 2 where required.
  void add(const SigmaKey& key, std::int64_t delta);
  SigmaVector& operator+=(const SigmaVector& other);
  SigmaVector scaled(std::int64_t factor) const;
  /// Sum over components; every key moves to component 0.
  SigmaVector collapsed() const;

  bool is_zero() const noexcept { return entries_.empty(); }
  SigmaType type() const noexcept;
  std::int64_t at(const SigmaKey& key) const;
  const std::map<SigmaKey, std::int64_t>& entries() const noexcept { return entries_; }

  /// "[1:(1,1)=+1]" with 1-based indices; mod-2 entries print as "=1".
  /// Without components: "[(1,1)=+1]". The zero vector prints as "0".
  std::string to_string(bool with_component = true) const;

  friend bool operator==(const SigmaVector& a, const SigmaVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const SigmaVector& a, const SigmaVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::map<SigmaKey, std::int64_t> entries_;
  std::size_t free_orbits_ = 0;
};

/// Per component, the nonzero values of (B)_j keyed by nonzero vectors of
/// type (i) or (ii).
struct SoValue {
  std::vector<std::map<SigmaVector, std::int64_t>> components;

  /// "{[1:(1,1)=+1] -> 1, ...} | {...}"
  std::string to_string() const;
  friend bool operator==(const SoValue&, const SoValue&) = default;
};

struct SigmaEntry {
  LetterId first;
  LetterId second;
  SigmaKey key;
  std::int64_t value;  // +1 / -1, or 1 for mod-2 coordinates
};

/// Nonzero sigma values of interleaved pairs, ordered by (first, second).
/// Throws NonGraphR.
std::vector<SigmaEntry> sigma_table(const Nanophrase& phrase, const MoveSystem& system);

/// Throws NonGraphR / AlphabetMismatch.
SoValue so_phrase(const Nanophrase& phrase, const MoveSystem& system);
/// Throws ProjectionNotLifted.
SoValue so_lifted(const LiftedAlphabet& lifted, const Nanophrase& word);

/// Entry (i, j), i < j in lexicographic order: product of the projections
/// of the letters joining components i and j.
std::vector<PiElement> lk_phrase(const Nanophrase& phrase, const MoveSystem& system);
std::vector<PiElement> lk_lifted(const LiftedAlphabet& lifted, const Nanophrase& word);

/// Per component, the parity of letters joining it to another component.
std::vector<int> clv_phrase(const Nanophrase& phrase, const MoveSystem& system);
std::vector<int> clv_lifted(const LiftedAlphabet& lifted, const Nanophrase& word);

/// T_j as one collapsed block per component.
std::vector<SigmaVector> t_invariant(const Nanophrase& phrase, const MoveSystem& system);
/// Sum of v * (B)_j(v) over the entries of S_o, collapsed per component.
std::vector<SigmaVector> recover_t_from_so(const SoValue& so);

/// Every nonzero l(A) is of type (i) or (ii).
bool l_values_typed(const Nanophrase& phrase, const MoveSystem& system);

std::string render_lk(const std::vector<PiElement>& lk, const Alphabet& alphabet);
std::string render_lk_exponents(const std::vector<PiElement>& lk);
std::string render_clv(const std::vector<int>& clv);
std::string render_t(const std::vector<SigmaVector>& t);

}  // namespace nanoword
