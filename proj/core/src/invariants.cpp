#include "nanoword/invariants.hpp"

#include <algorithm>

#include "nanoword/errors.hpp"

namespace nanoword {

namespace {

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

}  // namespace

void SigmaVector::add(const SigmaKey& key, std::int64_t delta) {
  auto it = entries_.find(key);
  std::int64_t v = (it == entries_.end() ? 0 : it->second) + delta;
  if (!integral(key)) v = mod2(v);
  if (v == 0) {
    if (it != entries_.end()) entries_.erase(it);
  } else if (it == entries_.end()) {
    entries_.emplace(key, v);
  } else {
    it->second = v;
  }
}

SigmaVector& SigmaVector::operator+=(const SigmaVector& other) {
  for (const auto& [k, v] : other.entries_) add(k, v);
  return *this;
}

SigmaVector SigmaVector::scaled(std::int64_t factor) const {
  SigmaVector out(free_orbits_);
  for (const auto& [k, v] : entries_) out.add(k, v * factor);
  return out;
}

SigmaVector SigmaVector::collapsed() const {
  SigmaVector out(free_orbits_);
  for (const auto& [k, v] : entries_) out.add({0, k.p, k.q}, v);
  return out;
}

SigmaType SigmaVector::type() const noexcept {
  if (entries_.empty()) return SigmaType::Zero;
  bool low = false, high = false;
  for (const auto& [k, v] : entries_) (k.p < free_orbits_ ? low : high) = true;
  if (low && high) return SigmaType::III;
  return low ? SigmaType::I : SigmaType::II;
}

std::int64_t SigmaVector::at(const SigmaKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

std::string SigmaVector::to_string(bool with_component) const {
  if (entries_.empty()) return "0";
  std::string out = "[";
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    if (with_component) out += std::to_string(k.component + 1) + ":";
    out += "(" + std::to_string(k.p + 1) + "," + std::to_string(k.q + 1) + ")=";
    if (integral(k) && v > 0) out += "+";
    out += std::to_string(v);
  }
  return out + "]";
}

std::string SoValue::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j) out += " | ";
    out += "{";
    bool first = true;
    for (const auto& [v, c] : components[j]) {
      if (!first) out += ", ";
      first = false;
      out += v.to_string() + " -> " + std::to_string(c);
    }
    out += "}";
  }
  return out;
}

namespace {

// Per-letter data shared by the phrase and lifted computations: the base
// symbol, the component of the first occurrence and of the second one
// (read from subscripts for lifted words), and the two positions.
struct Facet {
  Symbol base;
  std::uint32_t first;
  std::uint32_t second;
  std::uint32_t i;
  std::uint32_t j;
};

struct Facets {
  const Alphabet* base = nullptr;
  std::size_t k = 0;
  std::vector<Facet> letters;
};

void require_graph(const Nanophrase& phrase, const MoveSystem& system) {
  if (!(phrase.alphabet() == system.alphabet())) {
    throw AlphabetMismatch("phrase and move system use different alphabets");
  }
  if (!system.r_is_tau_graph()) throw NonGraphR("R must be the graph of tau");
}

Facets phrase_facets(const Nanophrase& phrase) {
  Facets f{&phrase.alphabet(), phrase.components(), {}};
  for (LetterId a = 0; a < phrase.letters(); ++a) {
    const auto occ = phrase.occurrences(a);
    f.letters.push_back({phrase.proj(a), static_cast<std::uint32_t>(phrase.component_at(occ[0])),
                         static_cast<std::uint32_t>(phrase.component_at(occ[1])), occ[0], occ[1]});
  }
  return f;
}

Facets lifted_facets(const LiftedAlphabet& lifted, const Nanophrase& word) {
  if (!(word.alphabet() == lifted.alphabet())) {
    throw ProjectionNotLifted("word is not over the lifted alphabet");
  }
  Facets f{&lifted.base(), lifted.k(), {}};
  for (LetterId a = 0; a < word.letters(); ++a) {
    const auto occ = word.occurrences(a);
    const auto parts = lifted.parts(word.proj(a));
    f.letters.push_back({parts.base, parts.first - 1, parts.second - 1, occ[0], occ[1]});
  }
  return f;
}

// sigma(A, B) for an ordered pair; nullopt when not interleaved.
std::optional<std::pair<SigmaKey, std::int64_t>> sigma(const Facets& f, LetterId a, LetterId b) {
  const auto& A = f.letters[a];
  const auto& B = f.letters[b];
  const auto& alpha = *f.base;
  const bool abab = A.i < B.i && B.i < A.j && A.j < B.j;
  const bool baba = B.i < A.i && A.i < B.j && B.j < A.j;
  if (!abab && !baba) return std::nullopt;
  const bool rep = alpha.is_representative(B.base);
  SigmaKey key{abab ? B.second : B.first, static_cast<std::uint32_t>(alpha.orbit_of(A.base)),
               static_cast<std::uint32_t>(alpha.orbit_of(B.base))};
  std::int64_t sign = (abab == rep) ? 1 : -1;
  const bool integral = key.p < alpha.free_orbit_count() && key.q < alpha.free_orbit_count();
  if (!integral) sign = 1;
  return std::pair{key, sign};
}

std::vector<SigmaVector> l_values(const Facets& f) {
  const auto n = f.letters.size();
  std::vector<SigmaVector> l(n, SigmaVector(f.base->free_orbit_count()));
  for (LetterId a = 0; a < n; ++a) {
    for (LetterId b = 0; b < n; ++b) {
      if (a == b) continue;
      if (auto s = sigma(f, a, b)) l[a].add(s->first, s->second);
    }
  }
  return l;
}

SoValue so_from_facets(const Facets& f) {
  const auto l = l_values(f);
  std::vector<std::map<SigmaVector, std::int64_t>> raw(f.k);
  for (std::size_t a = 0; a < f.letters.size(); ++a) {
    const auto& A = f.letters[a];
    if (A.first != A.second || l[a].is_zero()) continue;
    raw[A.first][l[a]] += f.base->epsilon(A.base);
  }
  SoValue so;
  so.components.resize(f.k);
  for (std::size_t j = 0; j < f.k; ++j) {
    for (const auto& [v, c] : raw[j]) {
      std::int64_t value = 0;
      switch (v.type()) {
        case SigmaType::I: value = c; break;
        case SigmaType::II: value = mod2(c); break;
        default: value = 0; break;
      }
      if (value != 0) so.components[j].emplace(v, value);
    }
  }
  return so;
}

std::vector<PiElement> lk_from_facets(const Facets& f) {
  std::vector<PiElement> out;
  for (std::size_t i = 0; i < f.k; ++i) {
    for (std::size_t j = i + 1; j < f.k; ++j) {
      PiElement e(*f.base);
      for (const auto& A : f.letters) {
        if (A.first == i && A.second == j) e.multiply(*f.base, A.base);
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<int> clv_from_facets(const Facets& f) {
  std::vector<int> out(f.k, 0);
  for (const auto& A : f.letters) {
    if (A.first == A.second) continue;
    out[A.first] ^= 1;
    out[A.second] ^= 1;
  }
  return out;
}

}  // namespace

std::vector<SigmaEntry> sigma_table(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  const auto f = phrase_facets(phrase);
  std::vector<SigmaEntry> out;
  for (LetterId a = 0; a < phrase.letters(); ++a) {
    for (LetterId b = 0; b < phrase.letters(); ++b) {
      if (a == b) continue;
      if (auto s = sigma(f, a, b)) out.push_back({a, b, s->first, s->second});
    }
  }
  return out;
}

SoValue so_phrase(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  return so_from_facets(phrase_facets(phrase));
}

SoValue so_lifted(const LiftedAlphabet& lifted, const Nanophrase& word) {
  return so_from_facets(lifted_facets(lifted, word));
}

std::vector<PiElement> lk_phrase(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  return lk_from_facets(phrase_facets(phrase));
}

std::vector<PiElement> lk_lifted(const LiftedAlphabet& lifted, const Nanophrase& word) {
  return lk_from_facets(lifted_facets(lifted, word));
}

std::vector<int> clv_phrase(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  return clv_from_facets(phrase_facets(phrase));
}

std::vector<int> clv_lifted(const LiftedAlphabet& lifted, const Nanophrase& word) {
  return clv_from_facets(lifted_facets(lifted, word));
}

std::vector<SigmaVector> t_invariant(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  const auto f = phrase_facets(phrase);
  const auto l = l_values(f);
  std::vector<SigmaVector> t(f.k, SigmaVector(f.base->free_orbit_count()));
  for (std::size_t a = 0; a < f.letters.size(); ++a) {
    const auto& A = f.letters[a];
    if (A.first != A.second) continue;
    t[A.first] += l[a].collapsed().scaled(f.base->epsilon(A.base));
  }
  return t;
}

std::vector<SigmaVector> recover_t_from_so(const SoValue& so) {
  std::vector<SigmaVector> t;
  for (const auto& comp : so.components) {
    SigmaVector sum;
    bool sized = false;
    for (const auto& [v, c] : comp) {
      if (!sized) {
        sum = v.scaled(0);
        sized = true;
      }
      sum += v.collapsed().scaled(c);
    }
    t.push_back(std::move(sum));
  }
  return t;
}

bool l_values_typed(const Nanophrase& phrase, const MoveSystem& system) {
  require_graph(phrase, system);
  for (const auto& v : l_values(phrase_facets(phrase))) {
    if (v.type() == SigmaType::III) return false;
  }
  return true;
}

std::string render_lk(const std::vector<PiElement>& lk, const Alphabet& alphabet) {
  std::string out = "(";
  for (std::size_t i = 0; i < lk.size(); ++i) {
    if (i) out += ",";
    out += lk[i].to_string(alphabet);
  }
  return out + ")";
}

std::string render_lk_exponents(const std::vector<PiElement>& lk) {
  std::string out = "(";
  for (std::size_t i = 0; i < lk.size(); ++i) {
    if (i) out += ",";
    out += lk[i].exponent_list();
  }
  return out + ")";
}

std::string render_clv(const std::vector<int>& clv) {
  std::string out = "(";
  for (std::size_t i = 0; i < clv.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(clv[i]);
  }
  return out + ")";
}

std::string render_t(const std::vector<SigmaVector>& t) {
  std::string out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) out += " | ";
    out += t[j].to_string(false);
  }
  return out;
}

}  // namespace nanoword
