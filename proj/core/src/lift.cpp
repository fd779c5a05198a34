#include "nanoword/lift.hpp"

#include <algorithm>
#include <array>

#include "nanoword/errors.hpp"

namespace nanoword {

namespace {

std::size_t pair_count(std::size_t k) { return k * (k + 1) / 2; }

// Offset of (i, j), 1 <= i <= j <= k, within a base symbol's block.
std::size_t pair_index(std::size_t k, std::size_t i, std::size_t j) {
  std::size_t idx = 0;
  for (std::size_t t = 1; t < i; ++t) idx += k - t + 1;
  return idx + (j - i);
}

AlphabetPtr make_lifted(const Alphabet& base, std::size_t k) {
  std::vector<std::string> names;
  std::vector<Symbol> tau;
  const auto block = pair_count(k);
  if (base.size() * block > 0xFFFF) throw ValidationError("lifted alphabet too large");
  for (std::size_t a = 0; a < base.size(); ++a) {
    const auto t = base.tau(static_cast<Symbol>(a));
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = i; j <= k; ++j) {
        names.push_back(base.name(static_cast<Symbol>(a)) + "_" + std::to_string(i) + "_" +
                        std::to_string(j));
        tau.push_back(static_cast<Symbol>(t * block + pair_index(k, i, j)));
      }
    }
  }
  return std::make_shared<const Alphabet>(std::move(names), std::move(tau));
}

}  // namespace

LiftedAlphabet::LiftedAlphabet(AlphabetPtr base, std::size_t k) : base_(std::move(base)), k_(k) {
  if (!base_) throw ValidationError("lifted alphabet needs a base alphabet");
  if (k_ == 0) throw ValidationError("k must be at least 1");
  lifted_ = make_lifted(*base_, k_);
}

Symbol LiftedAlphabet::lift(Symbol a, std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (a >= base_->size() || i < 1 || j > k_) throw ValidationError("lifted index out of range");
  return static_cast<Symbol>(a * pair_count(k_) + pair_index(k_, i, j));
}

LiftedAlphabet::Parts LiftedAlphabet::parts(Symbol lifted) const {
  const auto block = pair_count(k_);
  if (lifted >= lifted_->size()) throw ProjectionNotLifted("symbol outside the lifted alphabet");
  Parts p{static_cast<Symbol>(lifted / block), 1, 1};
  auto rest = lifted % block;
  while (rest >= k_ - p.first + 1) {
    rest -= k_ - p.first + 1;
    ++p.first;
  }
  p.second = static_cast<std::uint32_t>(p.first + rest);
  return p;
}

std::vector<Symbol> LiftedAlphabet::q_lift() const {
  std::vector<Symbol> q;
  for (std::size_t a = 0; a < base_->size(); ++a) {
    for (std::size_t i = 1; i <= k_; ++i) q.push_back(lift(static_cast<Symbol>(a), i, i));
  }
  return q;
}

std::vector<SymbolPair> LiftedAlphabet::r_lift() const {
  return MoveSystem::tau_graph(*lifted_);
}

std::vector<SymbolTriple> LiftedAlphabet::s_lift(std::span<const SymbolTriple> s) const {
  std::vector<SymbolTriple> out;
  for (const auto& [a, b, c] : s) {
    for (std::size_t i = 1; i <= k_; ++i) {
      for (std::size_t j = i; j <= k_; ++j) {
        for (std::size_t l = j; l <= k_; ++l) {
          out.push_back({lift(a, i, j), lift(b, i, l), lift(c, j, l)});
        }
      }
    }
  }
  return out;
}

MoveSystem LiftedAlphabet::lift_system(const MoveSystem& base_system) const {
  if (!(base_system.alphabet() == *base_)) {
    throw AlphabetMismatch("move system is not over the base alphabet");
  }
  return MoveSystem(lifted_, q_lift(), r_lift(), s_lift(base_system.s()));
}

Nanophrase phi(const LiftedAlphabet& lifted, const Nanophrase& phrase) {
  if (!(phrase.alphabet() == lifted.base())) {
    throw AlphabetMismatch("phrase is not over the base alphabet");
  }
  if (phrase.components() != lifted.k()) {
    throw ValidationError("phrase has " + std::to_string(phrase.components()) +
                          " components, lifted alphabet expects " + std::to_string(lifted.k()));
  }
  std::vector<Symbol> proj(phrase.letters());
  for (LetterId a = 0; a < phrase.letters(); ++a) {
    const auto occ = phrase.occurrences(a);
    proj[a] = lifted.lift(phrase.proj(a), phrase.component_at(occ[0]) + 1,
                          phrase.component_at(occ[1]) + 1);
  }
  std::vector<std::vector<LetterId>> word(1);
  word[0].assign(phrase.word().begin(), phrase.word().end());
  return Nanophrase(lifted.alphabet_ptr(), phrase.names(), std::move(proj), std::move(word));
}

namespace {

void require_lifted_word(const LiftedAlphabet& lifted, const Nanophrase& word) {
  if (!(word.alphabet() == lifted.alphabet())) {
    throw ProjectionNotLifted("word is not over the lifted alphabet");
  }
  if (word.components() != 1) throw ValidationError("expected a nanoword (one component)");
}

}  // namespace

std::optional<ConditionViolation> check_conditions(const LiftedAlphabet& lifted,
                                                   const Nanophrase& word) {
  require_lifted_word(lifted, word);
  std::vector<LetterId> order;
  for (std::size_t p = 0; p < word.length(); ++p) {
    const auto a = word.word()[p];
    if (word.occurrences(a)[0] == p) order.push_back(a);
  }
  for (auto a : order) {
    const auto [ia, ja] = word.occurrences(a);
    const auto pa = lifted.parts(word.proj(a));
    for (auto b : order) {
      if (a == b) continue;
      const auto [ib, jb] = word.occurrences(b);
      const auto pb = lifted.parts(word.proj(b));
      const std::array<bool, 4> ok = {
          !(ia <= ib) || pa.first <= pb.first,
          !(ia <= jb) || pa.first <= pb.second,
          !(ja <= ib) || pa.second <= pb.first,
          !(ja <= jb) || pa.second <= pb.second,
      };
      for (int c = 0; c < 4; ++c) {
        if (!ok[c]) return ConditionViolation{word.name(a), word.name(b), c + 1};
      }
    }
  }
  return std::nullopt;
}

Nanophrase psi(const LiftedAlphabet& lifted, const Nanophrase& word) {
  if (auto v = check_conditions(lifted, word)) {
    throw ConditionsViolated(v->first, v->second, v->condition);
  }
  std::vector<std::vector<LetterId>> comps(lifted.k());
  std::vector<Symbol> proj(word.letters());
  for (LetterId a = 0; a < word.letters(); ++a) proj[a] = lifted.parts(word.proj(a)).base;
  for (std::size_t p = 0; p < word.length(); ++p) {
    const auto a = word.word()[p];
    const auto parts = lifted.parts(word.proj(a));
    const auto c = word.occurrences(a)[0] == p ? parts.first : parts.second;
    comps[c - 1].push_back(a);
  }
  return Nanophrase(lifted.base_ptr(), word.names(), std::move(proj), std::move(comps));
}

namespace {

constexpr std::array<std::string_view, 4> kBuiltins = {"curves", "links", "ornaments", "diagonal"};

SymbolTriple triple(const Alphabet& alpha, std::string_view a, std::string_view b,
                    std::string_view c) {
  return {*alpha.find(a), *alpha.find(b), *alpha.find(c)};
}

}  // namespace

std::span<const std::string_view> builtin_names() noexcept { return kBuiltins; }

HomotopyData builtin_data(std::string_view name, std::size_t k) {
  if (k == 0) throw ValidationError("k must be at least 1");
  AlphabetPtr base;
  std::vector<SymbolTriple> s;
  if (name == "curves" || name == "ornaments") {
    const std::pair<std::string, std::string> swaps[] = {{"a", "b"}};
    base = Alphabet::make({"a", "b"}, swaps);
    s = {triple(*base, "a", "a", "a"), triple(*base, "b", "b", "b")};
  } else if (name == "links") {
    const std::pair<std::string, std::string> swaps[] = {{"a+", "b-"}, {"a-", "b+"}};
    base = Alphabet::make({"a+", "a-", "b+", "b-"}, swaps);
    for (std::string_view x : {"a", "b"}) {
      const std::string p = std::string(x) + "+", m = std::string(x) + "-";
      for (const auto& [u, v] : {std::pair{p, m}, std::pair{m, p}}) {
        s.push_back(triple(*base, u, u, u));
        s.push_back(triple(*base, u, u, v));
        s.push_back(triple(*base, v, u, u));
      }
    }
  } else if (name == "diagonal") {
    base = Alphabet::make({"a"});
    s = MoveSystem::diagonal(*base);
  } else {
    throw UnknownName("unknown builtin '" + std::string(name) +
                      "' (expected curves, links, ornaments or diagonal)");
  }
  auto base_system = MoveSystem::homotopy(base, std::move(s));
  auto lifted = std::make_shared<const LiftedAlphabet>(base, k);
  auto lifted_system = lifted->lift_system(base_system);
  if (name == "ornaments") {
    std::vector<SymbolTriple> kept;
    for (const auto& t : lifted_system.s()) {
      const auto p0 = lifted->parts(t[0]);
      const auto p2 = lifted->parts(t[2]);
      // (c_ij, c_il, c_jl) with i, j, l pairwise distinct
      const bool distinct = p0.first < p0.second && p0.second < p2.second;
      if (!distinct) kept.push_back(t);
    }
    lifted_system = MoveSystem(lifted->alphabet_ptr(),
                               std::vector<Symbol>(lifted_system.q().begin(), lifted_system.q().end()),
                               std::vector<SymbolPair>(lifted_system.r().begin(), lifted_system.r().end()),
                               std::move(kept));
  }
  return HomotopyData{std::string(name), std::move(base_system), std::move(lifted),
                      std::move(lifted_system)};
}

}  // namespace nanoword
