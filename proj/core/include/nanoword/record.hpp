#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "nanoword/alphabet.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/nanophrase.hpp"

namespace nanoword {

/// A parsed input record.
///
/// Recognised keys (one per line, '#' starts a comment):
///
///     builtin: curves          # or alpha/tau, not both
///     alpha: a b
///     tau: a=b                 # unlisted symbols are fixed points
///     Q: all                   # or a list of symbols
///     R: tau                   # or pairs a,b
///     S: diagonal              # or none, or triples a,a,a
///     k: 2                     # phrase is a nanoword over alpha_k
///     proj: A=a B=b
///     phrase: A B | B A        # '|' separates components, '∅' is empty
///
/// For a lifted record the move system is the lift of the base one; the
/// line `Q: all` then allows move 1 on every lifted symbol.
struct Record {
  std::optional<std::string> builtin;
  MoveSystem base_system;
  std::shared_ptr<const LiftedAlphabet> lifted;  // set for lifted records
  MoveSystem system;                             // over the phrase's alphabet
  std::optional<Nanophrase> phrase;
  bool lifted_q_all = false;

  const AlphabetPtr& base() const noexcept { return base_system.alphabet_ptr(); }
  const AlphabetPtr& alphabet() const noexcept { return system.alphabet_ptr(); }
  bool is_lifted() const noexcept { return lifted != nullptr; }
};

struct RecordOptions {
  /// Builtin data supplied from outside (e.g. the command line).
  std::optional<std::string> builtin;
  /// Treat the phrase as a nanoword over alpha_k.
  std::optional<std::size_t> lifted_k;
  bool require_phrase = true;
};

/// Throws ParseError (with the offending line) on malformed input and on
/// phrases that fail validation.
Record parse_record(std::string_view text, const RecordOptions& options = {});
Record read_record_file(const std::string& path, const RecordOptions& options = {});

/// Inverse of parse_record for the given phrase over the record's data.
std::string format_record(const Record& setting, const Nanophrase& phrase);

/// The same data lifted to `k` components, without a phrase.
Record lift_setting(const Record& setting, std::size_t k);
/// The base data of a lifted record, without a phrase.
Record base_setting(const Record& setting);

}  // namespace nanoword
