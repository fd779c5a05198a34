// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "nanoword/classify.hpp"
#include "nanoword/invariants.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/moves.hpp"
#include "nanoword/search.hpp"

using namespace nanoword;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

void report(int number, const char* name, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", number, name, o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

bool all_passed = true;

Result verdict(bool ok, const std::string& detail) {
  all_passed = all_passed && ok;
  return {ok, detail};
}

MoveSystem with_all_q(const MoveSystem& m) {
  std::vector<Symbol> q;
  for (Symbol s = 0; s < m.alphabet().size(); ++s) q.push_back(s);
  return MoveSystem(m.alphabet_ptr(), q, {m.r().begin(), m.r().end()}, {m.s().begin(), m.s().end()});
}

// 1. Values over {a}_2 for AA with |A| = a_1_2 and for the empty word.
Result linking_values() {
  const auto base = testing::one_symbol();
  LiftedAlphabet lifted(base, 2);
  auto aa = testing::phrase(lifted.alphabet_ptr(), "A A", {{"A", "a_1_2"}});
  auto empty = testing::phrase(lifted.alphabet_ptr(), "", {});
  const auto lk1 = render_lk(lk_lifted(lifted, aa), *base);
  const auto clv1 = render_clv(clv_lifted(lifted, aa));
  const auto lk2 = render_lk(lk_lifted(lifted, empty), *base);
  const auto clv2 = render_clv(clv_lifted(lifted, empty));

  // The two words are one unrestricted move 1 apart.
  const auto unrestricted = with_all_q(lifted.lift_system(MoveSystem::homotopy(base, {{0, 0, 0}})));
  bool linked = false;
  for (const auto& s : find_move_sites(aa, unrestricted, KindSet{MoveKind::M1})) {
    linked = linked || apply_site(aa.view(), s) == canonical_form(empty);
  }
  const bool ok = lk1 == "(a)" && clv1 == "(1,1)" && lk2 == "(1)" && clv2 == "(0,0)" && linked &&
                  lk1 != lk2 && clv1 != clv2;
  return verdict(ok, "lk " + lk1 + " vs " + lk2 + ", clv " + clv1 + " vs " + clv2 +
                         (linked ? ", related by move 1" : ", move 1 missing"));
}

struct PhraseInvariants {
  std::vector<PiElement> lk;
  std::vector<int> clv;
  SoValue so;
  std::vector<SigmaVector> t;
  bool operator==(const PhraseInvariants&) const = default;
};

PhraseInvariants phrase_invariants(const Nanophrase& p, const MoveSystem& m) {
  return {lk_phrase(p, m), clv_phrase(p, m), so_phrase(p, m), t_invariant(p, m)};
}

struct LiftedInvariants {
  std::vector<PiElement> lk;
  std::vector<int> clv;
  SoValue so;
  bool operator==(const LiftedInvariants&) const = default;
};

LiftedInvariants lifted_invariants(const LiftedAlphabet& lifted, const Nanophrase& w) {
  return {lk_lifted(lifted, w), clv_lifted(lifted, w), so_lifted(lifted, w)};
}

// 2. Every site of every enumerated phrase or lifted word preserves the
// claimed invariants.
Result invariance_suites() {
  const auto curves = builtin_data("curves", 1);
  const auto base = curves.base();
  const auto delta = MoveSystem::homotopy(base, MoveSystem::diagonal(*base));
  std::size_t checks = 0, violations = 0;

  for (const MoveSystem* m : {&delta, &curves.base_system}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_nanophrases(*base, n, k)) {
          const auto p = Nanophrase::from_canonical(base, f);
          const auto before = phrase_invariants(p, *m);
          for (const auto& s : find_move_sites(p, *m, KindSet::all(), n + 2)) {
            ++checks;
            violations += !(phrase_invariants(apply_move(p, s), *m) == before);
          }
        }
      }
    }
  }

  for (std::size_t k = 1; k <= 2; ++k) {
    LiftedAlphabet lifted(base, k);
    const auto& alpha = lifted.alphabet_ptr();
    for (const MoveSystem* m : {&delta, &curves.base_system}) {
      const auto system = lifted.lift_system(*m);
      const auto unrestricted = with_all_q(system);
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_nanophrases(*alpha, n, 1)) {
          const auto w = Nanophrase::from_canonical(alpha, f);
          const auto before = lifted_invariants(lifted, w);
          for (const auto& s : find_move_sites(w, system, KindSet::all(), n + 2)) {
            ++checks;
            violations += !(lifted_invariants(lifted, apply_move(w, s)) == before);
          }
          for (const auto& s : find_move_sites(w, unrestricted, KindSet::all(), n + 2)) {
            ++checks;
            violations += !(so_lifted(lifted, apply_move(w, s)) == before.so);
          }
        }
      }
    }
  }
  return verdict(violations == 0 && checks > 0, std::to_string(checks) + " moves, " +
                                                   std::to_string(violations) + " violations");
}

// 3. psi(phi(P)) = P, phi(psi(w)) = w, and the condition checker accepts
// exactly the image of phi.
Result lift_round_trip() {
  const auto base = testing::curves_alphabet();
  std::size_t phrases = 0, words = 0, mismatches = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    LiftedAlphabet lifted(base, k);
    const auto& alpha = lifted.alphabet_ptr();
    std::set<std::string> image;
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& f : enumerate_nanophrases(*base, n, k)) {
        ++phrases;
        const auto w = phi(lifted, Nanophrase::from_canonical(base, f));
        image.insert(canonical_form(w).key());
        if (check_conditions(lifted, w) || canonical_form(psi(lifted, w)) != f) ++mismatches;
      }
    }
    std::set<std::string> accepted;
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& f : enumerate_nanophrases(*alpha, n, 1)) {
        ++words;
        const auto w = Nanophrase::from_canonical(alpha, f);
        if (check_conditions(lifted, w)) continue;
        accepted.insert(f.key());
        if (canonical_form(phi(lifted, psi(lifted, w))) != f) ++mismatches;
      }
    }
    if (accepted != image) ++mismatches;
  }
  return verdict(mismatches == 0, std::to_string(phrases) + " phrases, " + std::to_string(words) +
                                      " lifted words, " + std::to_string(mismatches) +
                                      " mismatches");
}

// 4. Each base move has a lifted counterpart between the phi-images.
Result move_correspondence() {
  std::mt19937 rng(20240611);
  const HomotopyData systems[] = {builtin_data("curves", 1), builtin_data("links", 1)};
  const std::size_t trials = 1200;
  std::size_t found = 0, attempted = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& data = systems[t % 2];
    const auto base = data.base();
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    std::vector<CanonicalForm> forms;
    for_each_nanophrase(*base, n, k, [&](const CanonicalForm& f) { forms.push_back(f); });
    const auto& f = forms[std::uniform_int_distribution<std::size_t>(0, forms.size() - 1)(rng)];
    const auto sites = find_move_sites(f.view(), data.base_system, KindSet::all(), n + 2);
    if (sites.empty()) continue;
    const auto& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const auto after = apply_site(f.view(), site);
    ++attempted;

    LiftedAlphabet lifted(base, k);
    const auto system = lifted.lift_system(data.base_system);
    const auto w1 = phi(lifted, Nanophrase::from_canonical(base, f));
    const auto w2 = canonical_form(phi(lifted, Nanophrase::from_canonical(base, after)));
    for (const auto& s : find_move_sites(w1, system, KindSet::all(), n + 2)) {
      if (apply_site(w1.view(), s) == w2) {
        ++found;
        break;
      }
    }
  }
  return verdict(attempted >= 1000 && found == attempted,
                 std::to_string(found) + "/" + std::to_string(attempted) + " moves matched");
}

// 5. The six-letter shapes and ABAB reduce by search over {a} with S = Delta.
Result reduction_searches() {
  const auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  const auto& alpha = m.alphabet_ptr();
  struct Instance {
    const char* from;
    const char* to;
    std::size_t max_letters;
  };
  const Instance instances[] = {
      {"A B C A B C", "B A A C C B", 7},
      {"A B C A C B", "B A A C B C", 7},
      {"A B A C C B", "B A C A B C", 7},
      {"A B D D C A B C", "B A D D A C C B", 9},
      {"A B A B", "", 8},
      {"A B C C A B", "C C", 8},
  };
  std::size_t ok = 0;
  std::ostringstream steps;
  for (const auto& in : instances) {
    const auto a = canonical_form(testing::uniform(alpha, in.from, "a"));
    const auto b = canonical_form(testing::uniform(alpha, in.to, "a"));
    const auto v = equivalent(a, b, m, {in.max_letters, 2000000, 4});
    const bool good = v.outcome == nanoword::Outcome::Equivalent && replay_path(a, b, v.path, m);
    ok += good;
    steps << " " << v.path.size();
  }
  const std::size_t total = std::size(instances);
  return verdict(ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                                  " equivalent, path lengths" + steps.str());
}

// 6. Classification never joins phrases with different invariants.
Result consistency_gate() {
  std::size_t runs = 0, classes = 0, phrases = 0, bad = 0, unknown = 0;
  for (const char* name : {"curves", "links"}) {
    const auto data = builtin_data(name, 1);
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t n = 0; n <= 3; ++n) {
        const auto c = classify(data.base_system, n, k, {n + 2, 20000, 4});
        ++runs;
        classes += c.classes.size();
        phrases += c.phrases;
        unknown += c.unknown.size();
        bad += c.inconsistencies.size();
        for (const auto& cls : c.classes) {
          for (const auto& f : cls.members) {
            const auto p = Nanophrase::from_canonical(data.base(), f);
            bad += invariant_signature(p, data.base_system) != cls.signature;
          }
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(runs) + " runs, " + std::to_string(phrases) +
                               " phrases, " + std::to_string(classes) + " classes, " +
                               std::to_string(unknown) + " unknown pairs, " +
                               std::to_string(bad) + " inconsistencies");
}

// 7. T is recovered from S_o whenever every l(A) is of type (i) or (ii).
Result so_t_recovery() {
  const std::pair<std::string, std::string> swaps[] = {{"a", "b"}};
  const auto mixed = Alphabet::make({"a", "b", "c"}, swaps);
  std::vector<MoveSystem> systems = {builtin_data("curves", 1).base_system,
                                     builtin_data("links", 1).base_system,
                                     MoveSystem::homotopy(mixed, MoveSystem::diagonal(*mixed)),
                                     builtin_data("diagonal", 1).base_system};
  std::size_t checked = 0, skipped = 0, mismatches = 0;
  for (const auto& m : systems) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_nanophrases(m.alphabet(), n, k)) {
          const auto p = Nanophrase::from_canonical(m.alphabet_ptr(), f);
          if (!l_values_typed(p, m)) {
            ++skipped;
            continue;
          }
          ++checked;
          mismatches += recover_t_from_so(so_phrase(p, m)) != t_invariant(p, m);
        }
      }
    }
  }
  return verdict(mismatches == 0 && checked > 0,
                 std::to_string(checked) + " instances, " + std::to_string(skipped) +
                     " skipped (type iii), " + std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
  report(1, "linking-values", linking_values);
  report(2, "invariance-suites", invariance_suites);
  report(3, "lift-round-trip", lift_round_trip);
  report(4, "move-correspondence", move_correspondence);
  report(5, "reduction-searches", reduction_searches);
  report(6, "consistency-gate", consistency_gate);
  report(7, "so-t-recovery", so_t_recovery);
  return all_passed ? 0 : 1;
}
