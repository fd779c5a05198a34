#pragma once

// Independent reference implementations used to check the library. They
// work on a plain nested-vector representation and share no code with the
// library beyond reading alphabet and move-system data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/invariants.hpp"
#include "nanoword/nanophrase.hpp"

namespace oracle {

struct Phrase {
  std::vector<std::vector<int>> comps;
  std::vector<int> proj;  // by letter id
};

inline Phrase from_form(const nanoword::CanonicalForm& f) {
  Phrase p;
  std::size_t pos = 0;
  for (auto end : f.ends) {
    auto& c = p.comps.emplace_back();
    for (; pos < end; ++pos) c.push_back(f.pattern[pos]);
  }
  for (auto s : f.proj_seq) p.proj.push_back(s);
  return p;
}

inline Phrase from_phrase(const nanoword::Nanophrase& phrase) {
  Phrase p;
  for (std::size_t c = 0; c < phrase.components(); ++c) {
    auto comp = phrase.component(c);
    p.comps.emplace_back(comp.begin(), comp.end());
  }
  for (std::size_t a = 0; a < phrase.letters(); ++a) {
    p.proj.push_back(phrase.proj(static_cast<nanoword::LetterId>(a)));
  }
  return p;
}

/// Relabels letters by first appearance; "0 1 | 1 0 ; 0 1".
inline std::string canon(const Phrase& p) {
  std::map<int, int> rank;
  std::vector<int> proj;
  std::string out;
  for (std::size_t c = 0; c < p.comps.size(); ++c) {
    if (c) out += "| ";
    for (int x : p.comps[c]) {
      auto it = rank.find(x);
      if (it == rank.end()) {
        it = rank.emplace(x, static_cast<int>(rank.size())).first;
        proj.push_back(p.proj[x]);
      }
      out += std::to_string(it->second) + " ";
    }
  }
  out += ";";
  for (int s : proj) out += " " + std::to_string(s);
  return out;
}

inline std::string canon(const nanoword::CanonicalForm& f) { return canon(from_form(f)); }

/// All phrases with n letters and k components over `symbols` symbols, by
/// brute force: every arrangement of the multiset {0,0,1,1,...}, every
/// placement of k-1 cut points, every projection; deduplicated by canon.
inline std::set<std::string> all_phrases(int symbols, int n, int k) {
  std::set<std::string> out;
  std::vector<int> word;
  for (int a = 0; a < n; ++a) {
    word.push_back(a);
    word.push_back(a);
  }
  const int len = 2 * n;
  do {
    // cut points: nondecreasing sequence in [0, len]
    std::vector<int> c(k - 1, 0);
    while (true) {
      int total = 1;
      for (int i = 0; i < n; ++i) total *= symbols;
      for (int code = 0; code < total; ++code) {
        Phrase p;
        p.proj.resize(n);
        int x = code;
        for (int i = 0; i < n; ++i) {
          p.proj[i] = x % symbols;
          x /= symbols;
        }
        int start = 0;
        for (int i = 0; i <= k - 1; ++i) {
          const int end = i < k - 1 ? c[i] : len;
          p.comps.emplace_back(word.begin() + start, word.begin() + end);
          start = end;
        }
        out.insert(canon(p));
      }
      int i = k - 2;
      while (i >= 0 && c[i] == len) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k - 1; ++j) c[j] = c[i];
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

struct Flat {
  std::vector<int> letter;
  std::vector<int> comp;
  std::vector<std::vector<int>> occ;
};

inline Flat flatten(const Phrase& p) {
  Flat f;
  f.occ.resize(p.proj.size());
  for (std::size_t c = 0; c < p.comps.size(); ++c) {
    for (int x : p.comps[c]) {
      f.occ[x].push_back(static_cast<int>(f.letter.size()));
      f.letter.push_back(x);
      f.comp.push_back(static_cast<int>(c));
    }
  }
  return f;
}

inline Phrase rebuild(const Phrase& p, const Flat& f, const std::vector<int>& letters) {
  Phrase q;
  q.proj = p.proj;
  q.comps.resize(p.comps.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= 0) q.comps[f.comp[i]].push_back(letters[i]);
  }
  return q;
}

/// Canonical strings of every phrase one move away, read straight off the
/// move patterns.
inline std::set<std::string> neighbours(const Phrase& p, const nanoword::MoveSystem& m,
                                        std::size_t max_letters) {
  std::set<std::string> out;
  const auto f = flatten(p);
  const int n = static_cast<int>(p.proj.size());
  auto pair_at = [&](int i, int j) { return j == i + 1 && f.comp[i] == f.comp[j]; };
  auto sym = [&](int a) { return static_cast<nanoword::Symbol>(p.proj[a]); };

  for (int a = 0; a < n; ++a) {
    if (pair_at(f.occ[a][0], f.occ[a][1]) && m.allows_first(sym(a))) {
      auto letters = f.letter;
      letters[f.occ[a][0]] = letters[f.occ[a][1]] = -1;
      out.insert(canon(rebuild(p, f, letters)));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto &A = f.occ[a], &B = f.occ[b];
      // x A B y B A z
      if (pair_at(A[0], B[0]) && pair_at(B[1], A[1]) && m.allows_second(sym(a), sym(b))) {
        auto letters = f.letter;
        for (int i : {A[0], A[1], B[0], B[1]}) letters[i] = -1;
        out.insert(canon(rebuild(p, f, letters)));
      }
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const auto& C = f.occ[c];
        // x A B y A C z B C t  ->  x B A y C A z C B t
        if (pair_at(A[0], B[0]) && pair_at(A[1], C[0]) && pair_at(B[1], C[1]) &&
            m.allows_third(sym(a), sym(b), sym(c))) {
          auto letters = f.letter;
          std::swap(letters[A[0]], letters[B[0]]);
          std::swap(letters[A[1]], letters[C[0]]);
          std::swap(letters[B[1]], letters[C[1]]);
          out.insert(canon(rebuild(p, f, letters)));
        }
        // x B A y C A z C B t  ->  x A B y A C z B C t
        if (pair_at(B[0], A[0]) && pair_at(C[0], A[1]) && pair_at(C[1], B[1]) &&
            m.allows_third(sym(a), sym(b), sym(c))) {
          auto letters = f.letter;
          std::swap(letters[A[0]], letters[B[0]]);
          std::swap(letters[A[1]], letters[C[0]]);
          std::swap(letters[B[1]], letters[C[1]]);
          out.insert(canon(rebuild(p, f, letters)));
        }
      }
    }
  }

  std::vector<std::pair<int, int>> gaps;
  for (std::size_t c = 0; c < p.comps.size(); ++c) {
    for (std::size_t o = 0; o <= p.comps[c].size(); ++o) gaps.emplace_back(c, o);
  }
  auto insert_at = [](Phrase q, std::pair<int, int> gap, std::vector<int> seq) {
    auto& comp = q.comps[gap.first];
    comp.insert(comp.begin() + gap.second, seq.begin(), seq.end());
    return q;
  };
  if (static_cast<std::size_t>(n) + 1 <= max_letters) {
    for (auto q : m.q()) {
      for (const auto& g : gaps) {
        Phrase r = p;
        r.proj.push_back(q);
        out.insert(canon(insert_at(r, g, {n, n})));
      }
    }
  }
  if (static_cast<std::size_t>(n) + 2 <= max_letters) {
    for (const auto& pr : m.r()) {
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        for (std::size_t j = i; j < gaps.size(); ++j) {
          Phrase r = p;
          r.proj.push_back(pr[0]);
          r.proj.push_back(pr[1]);
          // insert the later gap first so the earlier offset stays valid
          r = insert_at(r, gaps[j], {n + 1, n});
          r = insert_at(r, gaps[i], {n, n + 1});
          out.insert(canon(r));
        }
      }
    }
  }
  return out;
}

/// S_o computed directly from its definition. Keys: component j (0-based)
/// -> sorted list of (j', p, q, value) -> count.
using SoMap = std::map<int, std::map<std::vector<std::tuple<int, int, int, long>>, long>>;

struct Orbits {
  std::vector<int> orbit;
  std::vector<bool> rep;
  int free = 0;
};

inline Orbits orbits(const nanoword::Alphabet& alpha) {
  Orbits o;
  const int n = static_cast<int>(alpha.size());
  std::vector<std::string> free_reps, fixed;
  for (int s = 0; s < n; ++s) {
    const auto& name = alpha.name(static_cast<nanoword::Symbol>(s));
    const auto& other = alpha.name(alpha.tau(static_cast<nanoword::Symbol>(s)));
    if (name == other) {
      fixed.push_back(name);
    } else if (name < other) {
      free_reps.push_back(name);
    }
  }
  std::sort(free_reps.begin(), free_reps.end());
  std::sort(fixed.begin(), fixed.end());
  o.free = static_cast<int>(free_reps.size());
  std::vector<std::string> reps = free_reps;
  reps.insert(reps.end(), fixed.begin(), fixed.end());
  o.orbit.resize(n);
  o.rep.resize(n);
  for (int s = 0; s < n; ++s) {
    const auto& name = alpha.name(static_cast<nanoword::Symbol>(s));
    const auto& other = alpha.name(alpha.tau(static_cast<nanoword::Symbol>(s)));
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (reps[r] == name || reps[r] == other) o.orbit[s] = static_cast<int>(r);
    }
    o.rep[s] = std::find(reps.begin(), reps.end(), name) != reps.end();
  }
  return o;
}

inline SoMap so(const Phrase& p, const nanoword::Alphabet& alpha) {
  const auto o = orbits(alpha);
  const auto f = flatten(p);
  const int n = static_cast<int>(p.proj.size());
  auto ring2 = [&](int pp, int qq) { return !(pp < o.free && qq < o.free); };
  SoMap out;
  std::map<int, std::map<std::map<std::tuple<int, int, int>, long>, long>> raw;
  for (int a = 0; a < n; ++a) {
    if (f.comp[f.occ[a][0]] != f.comp[f.occ[a][1]]) continue;
    std::map<std::tuple<int, int, int>, long> l;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto &A = f.occ[a], &B = f.occ[b];
      const int pp = o.orbit[p.proj[a]], qq = o.orbit[p.proj[b]];
      const bool brep = o.rep[p.proj[b]];
      long value = 0;
      int j = 0;
      if (A[0] < B[0] && B[0] < A[1] && A[1] < B[1]) {
        j = f.comp[B[1]];
        value = brep ? 1 : -1;
      } else if (B[0] < A[0] && A[0] < B[1] && B[1] < A[1]) {
        j = f.comp[B[0]];
        value = brep ? -1 : 1;
      } else {
        continue;
      }
      auto& slot = l[{j, pp, qq}];
      slot += value;
      if (ring2(pp, qq)) slot = ((slot % 2) + 2) % 2;
    }
    std::map<std::tuple<int, int, int>, long> nz;
    for (const auto& [key, v] : l) {
      if (v != 0) nz.emplace(key, v);
    }
    if (nz.empty()) continue;
    raw[f.comp[f.occ[a][0]]][nz] += o.rep[p.proj[a]] ? 1 : -1;
  }
  for (const auto& [j, m] : raw) {
    for (const auto& [v, count] : m) {
      bool low = false, high = false;
      for (const auto& [key, x] : v) (std::get<1>(key) < o.free ? low : high) = true;
      long value = 0;
      if (low && !high) value = count;
      if (high && !low) value = ((count % 2) + 2) % 2;
      if (value == 0) continue;
      std::vector<std::tuple<int, int, int, long>> flat;
      for (const auto& [key, x] : v) {
        flat.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), x);
      }
      out[j][flat] = value;
    }
  }
  return out;
}

/// The library's S_o value in the oracle's shape.
inline SoMap reshape(const nanoword::SoValue& v) {
  SoMap out;
  for (std::size_t j = 0; j < v.components.size(); ++j) {
    for (const auto& [vec, count] : v.components[j]) {
      std::vector<std::tuple<int, int, int, long>> flat;
      for (const auto& [key, x] : vec.entries()) {
        flat.emplace_back(key.component, key.p, key.q, x);
      }
      out[static_cast<int>(j)][flat] = count;
    }
  }
  return out;
}

}  // namespace oracle
