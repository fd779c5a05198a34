#include "nanoword/moves.hpp"

#include <algorithm>
#include <set>

#include "nanoword/errors.hpp"

namespace nanoword {

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::M1: return "M1";
    case MoveKind::M2: return "M2";
    case MoveKind::M3: return "M3";
    case MoveKind::M3inv: return "M3inv";
    case MoveKind::M1ins: return "M1ins";
    case MoveKind::M2ins: return "M2ins";
  }
  return "?";
}

int letter_delta(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::M1: return -1;
    case MoveKind::M2: return -2;
    case MoveKind::M1ins: return 1;
    case MoveKind::M2ins: return 2;
    default: return 0;
  }
}

std::vector<std::uint32_t> MoveSite::positions() const {
  std::size_t used = 0;
  switch (kind) {
    case MoveKind::M1: used = 1; break;
    case MoveKind::M2: used = 2; break;
    case MoveKind::M3:
    case MoveKind::M3inv: used = 3; break;
    default: return {};
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < used; ++i) {
    out.push_back(pairs[i]);
    out.push_back(pairs[i] + 1);
  }
  return out;
}

namespace {

// Per-position component index and partner position.
struct Layout {
  std::vector<std::uint32_t> comp;
  std::vector<std::uint32_t> other;

  explicit Layout(PhraseView v) : comp(v.word.size()), other(v.word.size()) {
    std::size_t c = 0;
    for (std::size_t p = 0; p < v.word.size(); ++p) {
      while (p >= v.ends[c]) ++c;
      comp[p] = static_cast<std::uint32_t>(c);
    }
    std::vector<std::uint32_t> first(v.proj.size(), UINT32_MAX);
    for (std::size_t p = 0; p < v.word.size(); ++p) {
      auto& f = first[v.word[p]];
      if (f == UINT32_MAX) {
        f = static_cast<std::uint32_t>(p);
      } else {
        other[p] = f;
        other[f] = static_cast<std::uint32_t>(p);
      }
    }
  }

  bool adjacent(std::size_t p) const noexcept {
    return p + 1 < comp.size() && comp[p] == comp[p + 1];
  }
};

bool adjacent_in(PhraseView v, std::size_t p) noexcept {
  if (p + 1 >= v.word.size()) return false;
  return v.component_at(p) == v.component_at(p + 1);
}

bool gap_valid(PhraseView v, const Gap& g) noexcept {
  return g.component < v.components() && g.offset <= v.size_of(g.component);
}

}  // namespace

bool site_matches(PhraseView v, const MoveSite& s) noexcept {
  const auto& w = v.word;
  const auto L = w.size();
  const auto p = s.pairs[0], q = s.pairs[1], r = s.pairs[2];
  switch (s.kind) {
    case MoveKind::M1:
      return adjacent_in(v, p) && w[p] == w[p + 1];
    case MoveKind::M2:
      return q + 1 < L && q >= p + 2 && adjacent_in(v, p) && adjacent_in(v, q) &&
             w[p] != w[p + 1] && w[q] == w[p + 1] && w[q + 1] == w[p];
    case MoveKind::M3:
    case MoveKind::M3inv: {
      if (!(r + 1 < L && q >= p + 2 && r >= q + 2)) return false;
      if (!adjacent_in(v, p) || !adjacent_in(v, q) || !adjacent_in(v, r)) return false;
      if (s.kind == MoveKind::M3) {
        // A B ... A C ... B C
        const auto a = w[p], b = w[p + 1], c = w[q + 1];
        return a != b && a != c && b != c && w[q] == a && w[r] == b && w[r + 1] == c;
      }
      // B A ... C A ... C B
      const auto b = w[p], a = w[p + 1], c = w[q];
      return a != b && a != c && b != c && w[q + 1] == a && w[r] == c && w[r + 1] == b;
    }
    case MoveKind::M1ins:
      return gap_valid(v, s.gaps[0]);
    case MoveKind::M2ins:
      return gap_valid(v, s.gaps[0]) && gap_valid(v, s.gaps[1]) && s.gaps[0] <= s.gaps[1];
  }
  return false;
}

bool site_allowed(PhraseView v, const MoveSite& s, const MoveSystem& m) {
  if (!site_matches(v, s)) return false;
  const auto& w = v.word;
  const auto proj = [&](std::size_t pos) { return v.proj[w[pos]]; };
  const auto p = s.pairs[0], q = s.pairs[1];
  switch (s.kind) {
    case MoveKind::M1: return m.allows_first(proj(p));
    case MoveKind::M2: return m.allows_second(proj(p), proj(p + 1));
    case MoveKind::M3: return m.allows_third(proj(p), proj(p + 1), proj(q + 1));
    case MoveKind::M3inv: return m.allows_third(proj(p + 1), proj(p), proj(q));
    case MoveKind::M1ins:
      return s.symbols[0] < m.alphabet().size() && m.allows_first(s.symbols[0]);
    case MoveKind::M2ins: return m.allows_second(s.symbols[0], s.symbols[1]);
  }
  return false;
}

std::vector<MoveSite> find_move_sites(PhraseView v, const MoveSystem& m, KindSet kinds,
                                      std::size_t max_letters) {
  std::vector<MoveSite> out;
  const auto& w = v.word;
  const auto L = w.size();
  const Layout lay(v);
  const auto proj = [&](std::size_t pos) { return v.proj[w[pos]]; };

  for (std::uint32_t p = 0; p + 1 < L; ++p) {
    if (!lay.adjacent(p)) continue;
    const auto a = w[p], b = w[p + 1];
    if (a == b) {
      if (kinds.contains(MoveKind::M1) && m.allows_first(proj(p))) {
        out.push_back({MoveKind::M1, {p, 0, 0}, {}, {}});
      }
      continue;
    }
    if (kinds.contains(MoveKind::M2)) {
      const auto q = lay.other[p + 1];
      if (q > p + 1 && lay.adjacent(q) && w[q + 1] == a && m.allows_second(proj(p), proj(p + 1))) {
        out.push_back({MoveKind::M2, {p, q, 0}, {}, {}});
      }
    }
    if (kinds.contains(MoveKind::M3)) {
      // A B ... A C ... B C
      const auto q = lay.other[p];
      if (q > p + 1 && lay.adjacent(q)) {
        const auto c = w[q + 1];
        const auto r = lay.other[p + 1];
        if (c != a && c != b && r > q + 1 && lay.adjacent(r) && w[r + 1] == c &&
            m.allows_third(proj(p), proj(p + 1), proj(q + 1))) {
          out.push_back({MoveKind::M3, {p, q, r}, {}, {}});
        }
      }
    }
    if (kinds.contains(MoveKind::M3inv)) {
      // B A ... C A ... C B
      const auto second_a = lay.other[p + 1];
      if (second_a >= p + 3) {
        const auto q = second_a - 1;
        if (lay.adjacent(q)) {
          const auto c = w[q];
          if (c != a && c != b) {
            const auto r = lay.other[q];
            if (r > q + 1 && lay.adjacent(r) && w[r + 1] == a &&
                m.allows_third(proj(p + 1), proj(p), proj(q))) {
              out.push_back({MoveKind::M3inv, {p, q, r}, {}, {}});
            }
          }
        }
      }
    }
  }

  const auto letters = v.letters();
  std::vector<Gap> gaps;
  if ((kinds.contains(MoveKind::M1ins) && letters + 1 <= max_letters) ||
      (kinds.contains(MoveKind::M2ins) && letters + 2 <= max_letters)) {
    for (std::uint32_t c = 0; c < v.components(); ++c) {
      for (std::uint32_t o = 0; o <= v.size_of(c); ++o) gaps.push_back({c, o});
    }
  }
  if (kinds.contains(MoveKind::M1ins) && letters + 1 <= max_letters) {
    for (const auto& g : gaps) {
      for (auto s : m.q()) out.push_back({MoveKind::M1ins, {}, {g, Gap{}}, {s, 0}});
    }
  }
  if (kinds.contains(MoveKind::M2ins) && letters + 2 <= max_letters) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      for (std::size_t j = i; j < gaps.size(); ++j) {
        for (const auto& pr : m.r()) {
          out.push_back({MoveKind::M2ins, {}, {gaps[i], gaps[j]}, {pr[0], pr[1]}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MoveSite> find_move_sites(const Nanophrase& phrase, const MoveSystem& system,
                                      KindSet kinds, std::size_t max_letters) {
  if (!(phrase.alphabet() == system.alphabet())) {
    throw AlphabetMismatch("phrase and move system use different alphabets");
  }
  return find_move_sites(phrase.view(), system, kinds, max_letters);
}

CanonicalForm apply_site(PhraseView v, const MoveSite& s, std::vector<LetterId>* relabel) {
  if (!site_matches(v, s)) {
    throw StaleSite("move " + std::string(to_string(s.kind)) + " does not match the phrase");
  }
  std::vector<LetterId> word(v.word.begin(), v.word.end());
  std::vector<std::uint32_t> ends(v.ends.begin(), v.ends.end());
  std::vector<Symbol> proj(v.proj.begin(), v.proj.end());
  const auto old_letters = static_cast<LetterId>(proj.size());

  auto erase_pair = [&](std::uint32_t at) {
    const auto c = v.component_at(at);
    word.erase(word.begin() + at, word.begin() + at + 2);
    for (auto i = c; i < ends.size(); ++i) ends[i] -= 2;
  };
  auto flat = [&](const Gap& g) { return v.begin_of(g.component) + g.offset; };

  switch (s.kind) {
    case MoveKind::M1:
      erase_pair(s.pairs[0]);
      break;
    case MoveKind::M2:
      erase_pair(s.pairs[1]);
      erase_pair(s.pairs[0]);
      break;
    case MoveKind::M3:
    case MoveKind::M3inv:
      for (auto at : s.pairs) std::swap(word[at], word[at + 1]);
      break;
    case MoveKind::M1ins: {
      const auto at = flat(s.gaps[0]);
      word.insert(word.begin() + at, 2, old_letters);
      proj.push_back(s.symbols[0]);
      for (auto i = s.gaps[0].component; i < ends.size(); ++i) ends[i] += 2;
      break;
    }
    case MoveKind::M2ins: {
      const LetterId a = old_letters, b = old_letters + 1;
      const auto at1 = flat(s.gaps[0]), at2 = flat(s.gaps[1]);
      const LetterId ba[2] = {b, a};
      const LetterId ab[2] = {a, b};
      word.insert(word.begin() + at2, ba, ba + 2);
      word.insert(word.begin() + at1, ab, ab + 2);
      proj.push_back(s.symbols[0]);
      proj.push_back(s.symbols[1]);
      for (std::size_t i = 0; i < ends.size(); ++i) {
        if (i >= s.gaps[0].component) ends[i] += 2;
        if (i >= s.gaps[1].component) ends[i] += 2;
      }
      break;
    }
  }

  CanonicalForm f;
  f.ends = std::move(ends);
  f.pattern.resize(word.size());
  f.proj_seq.reserve(word.size() / 2);
  std::vector<LetterId> rank(proj.size(), kNoLetter);
  for (std::size_t p = 0; p < word.size(); ++p) {
    const auto a = word[p];
    if (rank[a] == kNoLetter) {
      rank[a] = static_cast<LetterId>(f.proj_seq.size());
      f.proj_seq.push_back(proj[a]);
    }
    f.pattern[p] = rank[a];
  }
  if (relabel) {
    rank.resize(old_letters + 2, kNoLetter);
    *relabel = std::move(rank);
  }
  return f;
}

Nanophrase apply_move(const Nanophrase& phrase, const MoveSite& site) {
  std::vector<LetterId> relabel;
  const auto f = apply_site(phrase.view(), site, &relabel);
  std::vector<std::string> names(f.letters());
  std::set<std::string> used(phrase.names().begin(), phrase.names().end());
  for (std::size_t a = 0; a < phrase.letters(); ++a) {
    if (relabel[a] != kNoLetter) names[relabel[a]] = phrase.name(static_cast<LetterId>(a));
  }
  std::size_t fresh = 0;
  for (std::size_t i = phrase.letters(); i < relabel.size(); ++i) {
    if (relabel[i] == kNoLetter) continue;
    std::string name;
    do {
      name = canonical_letter_name(fresh++);
    } while (used.count(name));
    used.insert(name);
    names[relabel[i]] = name;
  }
  std::vector<std::vector<LetterId>> comps(f.components());
  const auto view = f.view();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    comps[c].assign(f.pattern.begin() + view.begin_of(c), f.pattern.begin() + f.ends[c]);
  }
  return Nanophrase(phrase.alphabet_ptr(), std::move(names), f.proj_seq, std::move(comps));
}

MoveSite inverse_site(PhraseView before, const MoveSite& s) {
  auto gap_at = [&](std::uint32_t pos) {
    const auto c = static_cast<std::uint32_t>(before.component_at(pos));
    return Gap{c, pos - before.begin_of(c)};
  };
  MoveSite inv;
  switch (s.kind) {
    case MoveKind::M1:
      inv.kind = MoveKind::M1ins;
      inv.gaps[0] = gap_at(s.pairs[0]);
      inv.symbols[0] = before.proj[before.word[s.pairs[0]]];
      break;
    case MoveKind::M2: {
      inv.kind = MoveKind::M2ins;
      inv.gaps[0] = gap_at(s.pairs[0]);
      inv.gaps[1] = gap_at(s.pairs[1]);
      if (inv.gaps[1].component == inv.gaps[0].component) inv.gaps[1].offset -= 2;
      inv.symbols = {before.proj[before.word[s.pairs[0]]], before.proj[before.word[s.pairs[0] + 1]]};
      break;
    }
    case MoveKind::M3:
      inv = s;
      inv.kind = MoveKind::M3inv;
      break;
    case MoveKind::M3inv:
      inv = s;
      inv.kind = MoveKind::M3;
      break;
    case MoveKind::M1ins:
      inv.kind = MoveKind::M1;
      inv.pairs[0] = before.begin_of(s.gaps[0].component) + s.gaps[0].offset;
      break;
    case MoveKind::M2ins: {
      inv.kind = MoveKind::M2;
      const auto at1 = before.begin_of(s.gaps[0].component) + s.gaps[0].offset;
      const auto at2 = before.begin_of(s.gaps[1].component) + s.gaps[1].offset;
      inv.pairs[0] = at1;
      inv.pairs[1] = at2 + 2;
      break;
    }
  }
  return inv;
}

}  // namespace nanoword
