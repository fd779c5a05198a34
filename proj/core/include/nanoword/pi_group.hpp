#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nanoword/alphabet.hpp"

namespace nanoword {

/// Element of the abelian group generated by the alphabet with relations
/// a * tau(a) = 1. Stored as one exponent per tau-orbit: an integer for a
/// free orbit (its representative counts +1, the other member -1) and a
/// value in {0, 1} for a fixed point.
class PiElement {
 public:
  PiElement() = default;
  explicit PiElement(const Alphabet& alphabet);

  static PiElement identity(const Alphabet& alphabet) { return PiElement(alphabet); }
  static PiElement generator(const Alphabet& alphabet, Symbol s);

  /// Multiplies in place by a symbol.
  PiElement& multiply(const Alphabet& alphabet, Symbol s);
  PiElement& operator*=(const PiElement& other);
  friend PiElement operator*(PiElement a, const PiElement& b) { return a *= b; }
  PiElement inverse() const;

  bool is_identity() const noexcept;
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

  /// Monomial in orbit representatives: "1", "a", "a^2", "a^-1*c".
  std::string to_string(const Alphabet& alphabet) const;
  /// Exponents per orbit in orbit order: "[1,0]".
  std::string exponent_list() const;

  friend bool operator==(const PiElement&, const PiElement&) = default;

 private:
  std::vector<std::int64_t> exponents_;
  std::size_t free_orbits_ = 0;
};

}  // namespace nanoword
