#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/nanophrase.hpp"
#include "nanoword/search.hpp"

namespace nanoword {

/// Names of the phrase-level invariants that are valid for `system`:
/// lk and clv need R to be the graph of tau, S_o and T additionally need
/// S to lie in the diagonal.
std::vector<std::string> applicable_invariants(const MoveSystem& system);

/// Lifted invariants valid for a system over alpha_k: lk and clv need
/// Q and R within the lifted Q and R, S_o needs R within the lifted R and
/// S within the lifted diagonal.
std::vector<std::string> applicable_lifted_invariants(const LiftedAlphabet& lifted,
                                                      const MoveSystem& system);

/// The applicable invariants of a phrase joined into one comparable string.
std::string invariant_signature(const Nanophrase& phrase, const MoveSystem& system);

struct PhraseClass {
  CanonicalForm representative;
  std::vector<CanonicalForm> members;  // representative first
  std::string signature;
  /// Exploration from the representative visited its whole component
  /// within the letter budget.
  bool closed = false;
};

struct UnresolvedPair {
  CanonicalForm first;
  CanonicalForm second;
};

/// Phrases with different invariants found to be equivalent, or a path that
/// failed to replay.
struct Inconsistency {
  CanonicalForm from;
  CanonicalForm to;
  std::string detail;
};

struct Classification {
  std::size_t phrases = 0;
  std::vector<PhraseClass> classes;
  /// Class representatives with equal invariants that the search could
  /// neither join nor separate within budget.
  std::vector<UnresolvedPair> unknown;
  std::vector<Inconsistency> inconsistencies;
};

/// Classifies all phrases with at most `max_letters_enumerated` letters and
/// `components` components. Phrases are grouped by invariant signature;
/// equivalence classes come from breadth-first exploration, each join
/// being certified by a replayed path. Reaching a phrase with a different
/// signature is recorded as an inconsistency.
Classification classify(const MoveSystem& system, std::size_t max_letters_enumerated,
                        std::size_t components, const SearchBudget& budget);

}  // namespace nanoword
