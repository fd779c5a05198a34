#include "nanoword/nanophrase.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "nanoword/errors.hpp"

namespace nanoword {

std::size_t PhraseView::component_at(std::size_t pos) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(ends.begin(), ends.end(), pos) - ends.begin());
}

namespace {

void put16(std::string& out, std::size_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

std::size_t get16(std::string_view in, std::size_t at) {
  return (static_cast<std::size_t>(static_cast<unsigned char>(in[at])) << 8) |
         static_cast<unsigned char>(in[at + 1]);
}

}  // namespace

std::string CanonicalForm::key() const {
  std::string out;
  out.reserve(2 * (1 + ends.size() + pattern.size() + proj_seq.size()));
  put16(out, ends.size());
  for (auto e : ends) put16(out, e);
  for (auto x : pattern) put16(out, x);
  for (auto s : proj_seq) put16(out, s);
  return out;
}

CanonicalForm CanonicalForm::from_key(std::string_view key) {
  CanonicalForm f;
  std::size_t at = 0;
  const auto k = get16(key, at);
  at += 2;
  f.ends.resize(k);
  for (auto& e : f.ends) {
    e = static_cast<std::uint32_t>(get16(key, at));
    at += 2;
  }
  const std::size_t length = k == 0 ? 0 : f.ends.back();
  f.pattern.resize(length);
  for (auto& x : f.pattern) {
    x = static_cast<LetterId>(get16(key, at));
    at += 2;
  }
  f.proj_seq.resize(length / 2);
  for (auto& s : f.proj_seq) {
    s = static_cast<Symbol>(get16(key, at));
    at += 2;
  }
  return f;
}

std::string CanonicalForm::to_string(const Alphabet& alphabet) const {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < ends.size(); ++c) {
    if (c > 0) tokens.emplace_back("|");
    for (; pos < ends[c]; ++pos) tokens.push_back(std::to_string(pattern[pos] + 1));
  }
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  if (!out.empty()) out += ' ';
  out += ';';
  for (auto s : proj_seq) out += ' ' + alphabet.name(s);
  return out;
}

CanonicalForm canonicalize(PhraseView view) {
  CanonicalForm f;
  f.ends.assign(view.ends.begin(), view.ends.end());
  f.pattern.resize(view.word.size());
  f.proj_seq.reserve(view.word.size() / 2);
  std::vector<LetterId> rank(view.proj.size(), kNoLetter);
  for (std::size_t p = 0; p < view.word.size(); ++p) {
    const LetterId a = view.word[p];
    if (rank[a] == kNoLetter) {
      rank[a] = static_cast<LetterId>(f.proj_seq.size());
      f.proj_seq.push_back(view.proj[a]);
    }
    f.pattern[p] = rank[a];
  }
  return f;
}

std::string canonical_letter_name(std::size_t rank) {
  std::string name(1, static_cast<char>('A' + rank % 26));
  if (rank >= 26) name += std::to_string(rank / 26);
  return name;
}

Nanophrase::Nanophrase(AlphabetPtr alphabet, std::vector<std::string> names,
                       std::vector<Symbol> proj, std::vector<std::vector<LetterId>> components)
    : alphabet_(std::move(alphabet)), names_(std::move(names)), proj_(std::move(proj)) {
  if (!alphabet_) throw ValidationError("nanophrase needs an alphabet");
  if (components.empty()) throw ValidationError("a nanophrase has at least one component");
  if (proj_.size() != names_.size()) throw ValidationError("projection must be total on letters");
  if (names_.size() >= kNoLetter) throw ValidationError("too many letters");
  {
    std::vector<std::string_view> sorted(names_.begin(), names_.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("duplicate letter names");
    }
  }
  for (std::size_t a = 0; a < proj_.size(); ++a) {
    if (proj_[a] >= alphabet_->size()) {
      throw UnknownSymbol("projection of '" + names_[a] + "' is outside the alphabet");
    }
  }

  std::vector<std::size_t> count(names_.size(), 0);
  for (const auto& comp : components) {
    for (auto a : comp) {
      if (a >= names_.size()) throw ValidationError("letter id out of range");
      ++count[a];
      word_.push_back(a);
    }
    ends_.push_back(static_cast<std::uint32_t>(word_.size()));
  }
  std::vector<LetterCountError::Count> bad;
  for (std::size_t a = 0; a < count.size(); ++a) {
    if (count[a] != 2) bad.emplace_back(names_[a], count[a]);
  }
  if (!bad.empty()) throw LetterCountError(std::move(bad));

  occ_.assign(names_.size(), {0, 0});
  std::vector<char> seen(names_.size(), 0);
  for (std::size_t p = 0; p < word_.size(); ++p) {
    const auto a = word_[p];
    occ_[a][seen[a]++] = static_cast<std::uint32_t>(p);
  }
}

Nanophrase Nanophrase::from_canonical(AlphabetPtr alphabet, const CanonicalForm& form) {
  std::vector<std::string> names(form.letters());
  for (std::size_t r = 0; r < names.size(); ++r) names[r] = canonical_letter_name(r);
  std::vector<std::vector<LetterId>> comps(form.components());
  const auto view = form.view();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    comps[c].assign(form.pattern.begin() + view.begin_of(c), form.pattern.begin() + form.ends[c]);
  }
  return Nanophrase(std::move(alphabet), std::move(names), form.proj_seq, std::move(comps));
}

std::span<const LetterId> Nanophrase::component(std::size_t c) const {
  const auto v = view();
  return std::span<const LetterId>(word_).subspan(v.begin_of(c), v.size_of(c));
}

std::optional<LetterId> Nanophrase::find(std::string_view name) const {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return static_cast<LetterId>(a);
  }
  return std::nullopt;
}

std::string Nanophrase::to_string() const {
  std::string out;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < ends_.size(); ++c) {
    if (c > 0) out += out.empty() ? "|" : " |";
    for (; pos < ends_[c]; ++pos) {
      if (!out.empty()) out += ' ';
      out += names_[word_[pos]];
    }
  }
  return out;
}

Nanophrase validate_nanophrase(AlphabetPtr alphabet, const RawPhrase& raw) {
  if (!alphabet) throw ValidationError("nanophrase needs an alphabet");
  std::vector<std::string> names;
  std::vector<Symbol> proj;
  std::map<std::string, LetterId, std::less<>> index;
  std::vector<std::string> unknown;
  for (const auto& [letter, symbol] : raw.proj) {
    if (index.count(letter)) throw ValidationError("letter '" + letter + "' projected twice");
    const auto s = alphabet->find(symbol);
    if (!s) unknown.push_back(letter + "=" + symbol);
    index.emplace(letter, static_cast<LetterId>(names.size()));
    names.push_back(letter);
    proj.push_back(s.value_or(0));
  }
  if (!unknown.empty()) {
    std::string msg = "projection outside the alphabet:";
    for (const auto& u : unknown) msg += " " + u;
    throw UnknownSymbol(msg);
  }

  std::vector<std::string> missing;
  std::vector<std::vector<LetterId>> comps;
  std::vector<std::size_t> count(names.size(), 0);
  for (const auto& comp : raw.components) {
    auto& out = comps.emplace_back();
    for (const auto& letter : comp) {
      auto it = index.find(letter);
      if (it == index.end()) {
        if (std::find(missing.begin(), missing.end(), letter) == missing.end()) {
          missing.push_back(letter);
        }
        continue;
      }
      ++count[it->second];
      out.push_back(it->second);
    }
  }
  if (!missing.empty()) {
    std::string msg = "letters without projection:";
    for (const auto& m : missing) msg += " " + m;
    throw ValidationError(msg);
  }
  if (comps.empty()) comps.emplace_back();
  return Nanophrase(std::move(alphabet), std::move(names), std::move(proj), std::move(comps));
}

CanonicalForm canonical_form(const Nanophrase& phrase) { return canonicalize(phrase.view()); }

bool are_isomorphic(const Nanophrase& a, const Nanophrase& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("phrases over different alphabets");
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Double-occurrence patterns in which first occurrences appear in rank order.
void for_each_pattern(std::vector<LetterId>& pattern, std::vector<char>& open, std::size_t pos,
                      std::size_t next, std::size_t open_count,
                      const std::function<void()>& visit) {
  const std::size_t n = open.size();
  if (pos == pattern.size()) {
    visit();
    return;
  }
  for (std::size_t a = 0; a < next; ++a) {
    if (!open[a]) continue;
    open[a] = 0;
    pattern[pos] = static_cast<LetterId>(a);
    for_each_pattern(pattern, open, pos + 1, next, open_count - 1, visit);
    open[a] = 1;
  }
  if (next < n && open_count + 2 * (n - next) <= pattern.size() - pos) {
    open[next] = 1;
    pattern[pos] = static_cast<LetterId>(next);
    for_each_pattern(pattern, open, pos + 1, next + 1, open_count + 1, visit);
    open[next] = 0;
  }
}

void for_each_split(std::vector<std::uint32_t>& ends, std::size_t c, std::uint32_t lo,
                    const std::function<void()>& visit) {
  if (c + 1 == ends.size()) {
    visit();
    return;
  }
  for (std::uint32_t e = lo; e <= ends.back(); ++e) {
    ends[c] = e;
    for_each_split(ends, c + 1, e, visit);
  }
}

}  // namespace

void for_each_nanophrase(const Alphabet& alphabet, std::size_t letters, std::size_t components,
                         const std::function<void(const CanonicalForm&)>& visit) {
  if (components == 0) throw ValidationError("a nanophrase has at least one component");
  if (letters > 0 && alphabet.size() == 0) return;
  CanonicalForm f;
  f.pattern.resize(2 * letters);
  f.proj_seq.assign(letters, 0);
  f.ends.assign(components, static_cast<std::uint32_t>(2 * letters));
  std::vector<char> open(letters, 0);
  const auto symbols = alphabet.size();

  auto each_projection = [&] {
    std::fill(f.proj_seq.begin(), f.proj_seq.end(), Symbol{0});
    while (true) {
      visit(f);
      std::size_t i = letters;
      while (i > 0) {
        --i;
        if (++f.proj_seq[i] < symbols) break;
        f.proj_seq[i] = 0;
        if (i == 0) return;
      }
      if (letters == 0) return;
    }
  };
  for_each_pattern(f.pattern, open, 0, 0, 0,
                   [&] { for_each_split(f.ends, 0, 0, each_projection); });
}

std::vector<CanonicalForm> enumerate_nanophrases(const Alphabet& alphabet, std::size_t letters,
                                                 std::size_t components) {
  std::vector<CanonicalForm> out;
  for_each_nanophrase(alphabet, letters, components,
                      [&](const CanonicalForm& f) { out.push_back(f); });
  return out;
}

}  // namespace nanoword
