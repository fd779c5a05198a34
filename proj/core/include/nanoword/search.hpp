#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/moves.hpp"
#include "nanoword/nanophrase.hpp"

namespace nanoword {

struct SearchBudget {
  /// Insertions never produce phrases with more letters than this.
  std::size_t max_letters = 8;
  /// Total number of distinct phrases the search may store.
  std::size_t max_states = 200000;
  /// Worker threads for neighbour generation; results do not depend on it.
  unsigned threads = 1;
};

enum class Outcome { Equivalent, NotEquivalent, Unknown };

std::string_view to_string(Outcome outcome) noexcept;

/// One move of a path: `site` applied to `before` gives `after`.
struct PathStep {
  CanonicalForm before;
  MoveSite site;
  CanonicalForm after;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<PathStep> path;  // filled for Equivalent
  std::size_t states = 0;
};

/// Bidirectional breadth-first search over canonical forms.
///
/// NotEquivalent means that the phrases reachable from one side within the
/// letter budget were exhausted without meeting the other side.
Verdict equivalent(const CanonicalForm& from, const CanonicalForm& to, const MoveSystem& system,
                   const SearchBudget& budget = {});
/// Throws AlphabetMismatch.
Verdict equivalent(const Nanophrase& from, const Nanophrase& to, const MoveSystem& system,
                   const SearchBudget& budget = {});

/// Checks that every step is allowed, applies to its predecessor and that
/// the path runs from `from` to `to`.
bool replay_path(const CanonicalForm& from, const CanonicalForm& to,
                 const std::vector<PathStep>& path, const MoveSystem& system);

/// Letters matched (or inserted) by a step, named by canonical rank.
std::vector<std::string> step_letters(const PathStep& step);

/// One line per step: "<index> <kind> <letters> -> <canonical form>".
std::string format_path(const std::vector<PathStep>& path, const Alphabet& alphabet);

/// Everything reachable from a phrase within a budget.
class ReachableSet {
 public:
  static ReachableSet explore(const CanonicalForm& start, const MoveSystem& system,
                              const SearchBudget& budget = {});

  /// True when the whole component (within the letter budget) was visited.
  bool closed() const noexcept { return closed_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(const CanonicalForm& form) const { return nodes_.count(form.key()) != 0; }
  /// Path from the start to `form`, if it was reached.
  std::optional<std::vector<PathStep>> path_to(const CanonicalForm& form) const;
  /// Keys of all reached phrases, sorted.
  std::vector<std::string> keys() const;

 private:
  struct Node {
    std::string parent;
    MoveSite site;
    bool root = false;
  };
  std::string start_;
  std::unordered_map<std::string, Node> nodes_;
  bool closed_ = false;
};

}  // namespace nanoword
