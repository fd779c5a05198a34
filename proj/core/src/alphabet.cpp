#include "nanoword/alphabet.hpp"

#include <algorithm>
#include <set>

#include "nanoword/errors.hpp"

namespace nanoword {

LetterCountError::LetterCountError(std::vector<Count> counts)
    : ValidationError([&] {
        std::string msg = "letters must occur exactly twice:";
        for (const auto& [name, n] : counts) {
          msg += " " + name + ":" + std::to_string(n) + "!=2";
        }
        return msg;
      }()),
      counts_(std::move(counts)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : ValidationError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

ConditionsViolated::ConditionsViolated(std::string first, std::string second, int condition)
    : Error("conditions violated: pair (" + first + "," + second + ") fails condition (" +
            std::to_string(condition) + ")"),
      first_(std::move(first)),
      second_(std::move(second)),
      condition_(condition) {}

namespace {

bool valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '=' || c == '|' || c == ',' || c == '#' || c == ';';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Symbol> tau)
    : names_(std::move(names)), tau_(std::move(tau)) {
  if (names_.size() > 0xFFFF) throw ValidationError("alphabet too large");
  if (tau_.size() != names_.size()) throw ValidationError("tau must be total on the alphabet");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_symbol_name(n)) throw ValidationError("invalid symbol name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate symbol '" + n + "'");
  }
  for (std::size_t s = 0; s < tau_.size(); ++s) {
    if (tau_[s] >= tau_.size() || tau_[tau_[s]] != s) {
      throw ValidationError("tau is not an involution at '" + names_[s] + "'");
    }
  }

  std::vector<Symbol> free_reps;
  std::vector<Symbol> fixed;
  for (std::size_t s = 0; s < names_.size(); ++s) {
    const auto sym = static_cast<Symbol>(s);
    if (tau_[s] == sym) {
      fixed.push_back(sym);
    } else if (names_[s] < names_[tau_[s]]) {
      free_reps.push_back(sym);
    }
  }
  auto by_name = [this](Symbol a, Symbol b) { return names_[a] < names_[b]; };
  std::sort(free_reps.begin(), free_reps.end(), by_name);
  std::sort(fixed.begin(), fixed.end(), by_name);

  free_orbits_ = free_reps.size();
  reps_ = std::move(free_reps);
  reps_.insert(reps_.end(), fixed.begin(), fixed.end());
  orbit_.assign(names_.size(), 0);
  for (std::size_t o = 0; o < reps_.size(); ++o) {
    orbit_[reps_[o]] = o;
    orbit_[tau_[reps_[o]]] = o;
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(
    std::vector<std::string> names, std::span<const std::pair<std::string, std::string>> swaps) {
  std::vector<Symbol> tau(names.size());
  for (std::size_t s = 0; s < tau.size(); ++s) tau[s] = static_cast<Symbol>(s);
  auto index = [&](const std::string& n) -> Symbol {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw UnknownSymbol("tau refers to unknown symbol '" + n + "'");
    return static_cast<Symbol>(it - names.begin());
  };
  std::vector<char> touched(names.size(), 0);
  for (const auto& [a, b] : swaps) {
    const Symbol x = index(a);
    const Symbol y = index(b);
    if (touched[x] || touched[y]) {
      throw ValidationError("symbol listed twice in tau: '" + (touched[x] ? a : b) + "'");
    }
    touched[x] = touched[y] = 1;
    tau[x] = y;
    tau[y] = x;
  }
  return std::make_shared<const Alphabet>(std::move(names), std::move(tau));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return static_cast<Symbol>(s);
  }
  return std::nullopt;
}

MoveSystem::MoveSystem(AlphabetPtr alphabet, std::vector<Symbol> q, std::vector<SymbolPair> r,
                       std::vector<SymbolTriple> s)
    : alphabet_(std::move(alphabet)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (!alphabet_) throw ValidationError("move system needs an alphabet");
  const auto n = alphabet_->size();
  auto check = [n](Symbol x) {
    if (x >= n) throw UnknownSymbol("move system refers to a symbol outside the alphabet");
  };
  for (auto x : q_) check(x);
  for (const auto& p : r_) std::for_each(p.begin(), p.end(), check);
  for (const auto& t : s_) std::for_each(t.begin(), t.end(), check);

  std::sort(q_.begin(), q_.end());
  q_.erase(std::unique(q_.begin(), q_.end()), q_.end());
  std::sort(r_.begin(), r_.end());
  r_.erase(std::unique(r_.begin(), r_.end()), r_.end());
  std::sort(s_.begin(), s_.end());
  s_.erase(std::unique(s_.begin(), s_.end()), s_.end());

  q_mask_.assign(n, 0);
  for (auto x : q_) q_mask_[x] = 1;
  r_is_tau_graph_ = (r_ == tau_graph(*alphabet_));
}

MoveSystem MoveSystem::homotopy(AlphabetPtr alphabet, std::vector<SymbolTriple> s) {
  std::vector<Symbol> q(alphabet->size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = static_cast<Symbol>(i);
  auto r = tau_graph(*alphabet);
  return MoveSystem(std::move(alphabet), std::move(q), std::move(r), std::move(s));
}

std::vector<SymbolTriple> MoveSystem::diagonal(const Alphabet& alphabet) {
  std::vector<SymbolTriple> d;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto a = static_cast<Symbol>(i);
    d.push_back({a, a, a});
  }
  return d;
}

std::vector<SymbolPair> MoveSystem::tau_graph(const Alphabet& alphabet) {
  std::vector<SymbolPair> g;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto a = static_cast<Symbol>(i);
    g.push_back({a, alphabet.tau(a)});
  }
  return g;
}

bool MoveSystem::allows_second(Symbol a, Symbol b) const {
  return std::binary_search(r_.begin(), r_.end(), SymbolPair{a, b});
}

bool MoveSystem::allows_third(Symbol a, Symbol b, Symbol c) const {
  return std::binary_search(s_.begin(), s_.end(), SymbolTriple{a, b, c});
}

bool MoveSystem::s_within_diagonal() const noexcept {
  return std::all_of(s_.begin(), s_.end(),
                     [](const SymbolTriple& t) { return t[0] == t[1] && t[1] == t[2]; });
}

}  // namespace nanoword
