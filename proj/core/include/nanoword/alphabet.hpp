#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nanoword {

using Symbol = std::uint16_t;
using SymbolPair = std::array<Symbol, 2>;
using SymbolTriple = std::array<Symbol, 3>;

/// A finite alphabet with an involution tau.
///
/// Orbits of tau are numbered deterministically: free orbits {a, tau(a)}
/// come first, ordered by their representative (the lexicographically
/// smaller member), followed by the fixed points in lexicographic order.
class Alphabet {
 public:
  /// `tau[s]` is the image of symbol `s`. Throws ValidationError unless the
  /// names are distinct and non-empty and tau is an involution.
  Alphabet(std::vector<std::string> names, std::vector<Symbol> tau);

  /// Builds an alphabet from names and the unordered pairs swapped by tau;
  /// unlisted symbols are fixed points.
  static std::shared_ptr<const Alphabet> make(
      std::vector<std::string> names,
      std::span<const std::pair<std::string, std::string>> swaps = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Symbol s) const { return names_.at(s); }
  std::optional<Symbol> find(std::string_view name) const;

  Symbol tau(Symbol s) const { return tau_.at(s); }

  std::size_t orbit_count() const noexcept { return reps_.size(); }
  std::size_t free_orbit_count() const noexcept { return free_orbits_; }
  std::size_t fixed_orbit_count() const noexcept { return reps_.size() - free_orbits_; }
  bool is_free_orbit(std::size_t orbit) const noexcept { return orbit < free_orbits_; }

  std::size_t orbit_of(Symbol s) const { return orbit_.at(s); }
  Symbol representative(std::size_t orbit) const { return reps_.at(orbit); }
  bool is_representative(Symbol s) const { return reps_[orbit_.at(s)] == s; }

  /// +1 on orbit representatives (fixed points included), -1 on tau of a
  /// free-orbit representative.
  int epsilon(Symbol s) const { return is_representative(s) ? 1 : -1; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.tau_ == b.tau_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Symbol> tau_;
  std::vector<std::size_t> orbit_;
  std::vector<Symbol> reps_;
  std::size_t free_orbits_ = 0;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Homotopy data (Q, R, S) gating moves 1, 2 and 3.
class MoveSystem {
 public:
  MoveSystem(AlphabetPtr alphabet, std::vector<Symbol> q, std::vector<SymbolPair> r,
             std::vector<SymbolTriple> s);

  /// Q = alphabet, R = graph of tau, with the given S.
  static MoveSystem homotopy(AlphabetPtr alphabet, std::vector<SymbolTriple> s);
  /// The diagonal {(a, a, a)} of the alphabet.
  static std::vector<SymbolTriple> diagonal(const Alphabet& alphabet);
  static std::vector<SymbolPair> tau_graph(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  std::span<const Symbol> q() const noexcept { return q_; }
  std::span<const SymbolPair> r() const noexcept { return r_; }
  std::span<const SymbolTriple> s() const noexcept { return s_; }

  bool allows_first(Symbol a) const noexcept { return a < q_mask_.size() && q_mask_[a]; }
  bool allows_second(Symbol a, Symbol b) const;
  bool allows_third(Symbol a, Symbol b, Symbol c) const;

  /// R equals {(a, tau(a))}.
  bool r_is_tau_graph() const noexcept { return r_is_tau_graph_; }
  bool q_is_full() const noexcept { return q_.size() == alphabet_->size(); }
  /// S is a subset of the diagonal.
  bool s_within_diagonal() const noexcept;

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> q_;
  std::vector<SymbolPair> r_;
  std::vector<SymbolTriple> s_;
  std::vector<char> q_mask_;
  bool r_is_tau_graph_ = false;
};

}  // namespace nanoword
