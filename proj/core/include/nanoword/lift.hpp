#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/nanophrase.hpp"

namespace nanoword {

/// The alphabet a_ij (a in the base, 1 <= i <= j <= k) with
/// tau_k(a_ij) = tau(a)_ij. Symbols are named "a_i_j" and ordered by base
/// symbol, then i, then j.
class LiftedAlphabet {
 public:
  struct Parts {
    Symbol base;
    std::uint32_t first;   // i, 1-based
    std::uint32_t second;  // j, 1-based, first <= second
  };

  LiftedAlphabet(AlphabetPtr base, std::size_t k);

  std::size_t k() const noexcept { return k_; }
  const Alphabet& base() const noexcept { return *base_; }
  const AlphabetPtr& base_ptr() const noexcept { return base_; }
  const Alphabet& alphabet() const noexcept { return *lifted_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return lifted_; }

  /// a_ij for 1-based component indices; the pair is sorted first.
  Symbol lift(Symbol a, std::size_t i, std::size_t j) const;
  Parts parts(Symbol lifted) const;

  /// {a_ii}
  std::vector<Symbol> q_lift() const;
  /// {(a_ij, tau(a)_ij)}
  std::vector<SymbolPair> r_lift() const;
  /// {(a_ij, b_il, c_jl) | (a, b, c) in s, i <= j <= l}
  std::vector<SymbolTriple> s_lift(std::span<const SymbolTriple> s) const;
  /// (Q_lift, R_lift, S_lift) for the S of `base_system`.
  MoveSystem lift_system(const MoveSystem& base_system) const;

 private:
  AlphabetPtr base_;
  std::size_t k_;
  AlphabetPtr lifted_;
};

/// The nanoword over alpha_k recording, for each letter, which components
/// its two occurrences lie in. Throws AlphabetMismatch / ValidationError.
Nanophrase phi(const LiftedAlphabet& lifted, const Nanophrase& phrase);

struct ConditionViolation {
  std::string first;
  std::string second;
  int condition;  // 1..4
};

/// Checks conditions (1)-(4) over ordered letter pairs, letters taken in
/// order of first occurrence. Returns the first violation.
std::optional<ConditionViolation> check_conditions(const LiftedAlphabet& lifted,
                                                   const Nanophrase& word);

/// Inverse of phi. Throws ConditionsViolated.
Nanophrase psi(const LiftedAlphabet& lifted, const Nanophrase& word);

/// A named base alphabet with its homotopy data and the lift to k
/// components.
struct HomotopyData {
  std::string name;
  MoveSystem base_system;
  std::shared_ptr<const LiftedAlphabet> lifted;
  MoveSystem lifted_system;

  const AlphabetPtr& base() const noexcept { return base_system.alphabet_ptr(); }
};

/// "curves", "links", "ornaments" or "diagonal". Throws UnknownName.
HomotopyData builtin_data(std::string_view name, std::size_t k);

/// Names accepted by builtin_data.
std::span<const std::string_view> builtin_names() noexcept;

}  // namespace nanoword
