#include "nanoword/pi_group.hpp"

#include "nanoword/errors.hpp"

namespace nanoword {

PiElement::PiElement(const Alphabet& alphabet)
    : exponents_(alphabet.orbit_count(), 0), free_orbits_(alphabet.free_orbit_count()) {}

PiElement PiElement::generator(const Alphabet& alphabet, Symbol s) {
  PiElement e(alphabet);
  e.multiply(alphabet, s);
  return e;
}

PiElement& PiElement::multiply(const Alphabet& alphabet, Symbol s) {
  if (exponents_.size() != alphabet.orbit_count()) {
    throw AlphabetMismatch("group element belongs to another alphabet");
  }
  const auto o = alphabet.orbit_of(s);
  if (alphabet.is_free_orbit(o)) {
    exponents_[o] += alphabet.is_representative(s) ? 1 : -1;
  } else {
    exponents_[o] ^= 1;
  }
  return *this;
}

PiElement& PiElement::operator*=(const PiElement& other) {
  if (exponents_.size() != other.exponents_.size() || free_orbits_ != other.free_orbits_) {
    throw AlphabetMismatch("group elements belong to different alphabets");
  }
  for (std::size_t o = 0; o < exponents_.size(); ++o) {
    if (o < free_orbits_) {
      exponents_[o] += other.exponents_[o];
    } else {
      exponents_[o] ^= other.exponents_[o];
    }
  }
  return *this;
}

PiElement PiElement::inverse() const {
  PiElement e = *this;
  for (std::size_t o = 0; o < free_orbits_; ++o) e.exponents_[o] = -e.exponents_[o];
  return e;
}

bool PiElement::is_identity() const noexcept {
  for (auto x : exponents_) {
    if (x != 0) return false;
  }
  return true;
}

std::string PiElement::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t o = 0; o < exponents_.size(); ++o) {
    const auto x = exponents_[o];
    if (x == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(alphabet.representative(o));
    if (x != 1) out += "^" + std::to_string(x);
  }
  return out.empty() ? "1" : out;
}

std::string PiElement::exponent_list() const {
  std::string out = "[";
  for (std::size_t o = 0; o < exponents_.size(); ++o) {
    if (o) out += ',';
    out += std::to_string(exponents_[o]);
  }
  return out + "]";
}

}  // namespace nanoword
