#include "nanoword/search.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "nanoword/errors.hpp"

namespace nanoword {

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Equivalent: return "Equivalent";
    case Outcome::NotEquivalent: return "NotEquivalent";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct Node {
  std::string parent;
  MoveSite site;
  bool root = false;
};

using NodeMap = std::unordered_map<std::string, Node>;

struct Candidate {
  MoveSite site;
  std::string key;
};

constexpr std::size_t kBatch = 2048;

// Neighbours of frontier[begin, end) not already in `known`, per node in
// site order.
std::vector<std::vector<Candidate>> expand_batch(const std::vector<std::string>& frontier,
                                                 std::size_t begin, std::size_t end,
                                                 const NodeMap& known, const MoveSystem& system,
                                                 std::size_t max_letters, unsigned threads) {
  std::vector<std::vector<Candidate>> out(end - begin);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto form = CanonicalForm::from_key(frontier[begin + i]);
      const auto view = form.view();
      for (const auto& site : find_move_sites(view, system, KindSet::all(), max_letters)) {
        auto key = apply_site(view, site).key();
        if (known.count(key)) continue;
        out[i].push_back({site, std::move(key)});
      }
    }
  };
  const std::size_t n = end - begin;
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, n / 8 + 1));
  if (t == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + t - 1) / t;
  for (std::size_t lo = 0; lo < n; lo += chunk) {
    pool.emplace_back(work, lo, std::min(n, lo + chunk));
  }
  for (auto& th : pool) th.join();
  return out;
}

// Steps from the root of `nodes` to `key`.
std::vector<PathStep> chain_to(const NodeMap& nodes, const std::string& key) {
  std::vector<PathStep> steps;
  std::string cur = key;
  while (true) {
    const auto& node = nodes.at(cur);
    if (node.root) break;
    steps.push_back({CanonicalForm::from_key(node.parent), node.site, CanonicalForm::from_key(cur)});
    cur = node.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

Verdict equivalent(const CanonicalForm& from, const CanonicalForm& to, const MoveSystem& system,
                   const SearchBudget& budget) {
  Verdict verdict;
  if (from == to) {
    verdict.outcome = Outcome::Equivalent;
    verdict.states = 1;
    return verdict;
  }
  if (from.components() != to.components()) {
    // Moves never change the number of components.
    verdict.outcome = Outcome::NotEquivalent;
    return verdict;
  }
  if (std::max(from.letters(), to.letters()) > budget.max_letters) {
    throw ValidationError("max_letters is smaller than the phrases being compared");
  }

  std::array<NodeMap, 2> seen;
  std::array<std::vector<std::string>, 2> frontier;
  const std::array<std::string, 2> roots = {from.key(), to.key()};
  for (int s = 0; s < 2; ++s) {
    seen[s].emplace(roots[s], Node{{}, {}, true});
    frontier[s].push_back(roots[s]);
  }

  std::optional<std::string> meet;
  bool exhausted = false;
  while (!meet && !exhausted) {
    const int s = frontier[1].size() < frontier[0].size() ? 1 : 0;
    auto& mine = seen[s];
    const auto& other = seen[1 - s];
    std::vector<std::string> next;
    for (std::size_t b = 0; b < frontier[s].size() && !meet && !exhausted; b += kBatch) {
      const auto e = std::min(frontier[s].size(), b + kBatch);
      auto batch = expand_batch(frontier[s], b, e, mine, system, budget.max_letters,
                                std::max(1u, budget.threads));
      for (std::size_t i = 0; i < batch.size() && !meet && !exhausted; ++i) {
        for (auto& cand : batch[i]) {
          auto [it, inserted] = mine.emplace(std::move(cand.key), Node{frontier[s][b + i], cand.site, false});
          if (!inserted) continue;
          if (other.count(it->first)) {
            meet = it->first;
            break;
          }
          next.push_back(it->first);
          if (seen[0].size() + seen[1].size() > budget.max_states) {
            exhausted = true;
            break;
          }
        }
      }
    }
    verdict.states = seen[0].size() + seen[1].size();
    if (meet || exhausted) break;
    if (next.empty()) {
      verdict.outcome = Outcome::NotEquivalent;
      return verdict;
    }
    std::sort(next.begin(), next.end());
    frontier[s] = std::move(next);
  }

  if (!meet) {
    verdict.outcome = Outcome::Unknown;
    return verdict;
  }
  verdict.outcome = Outcome::Equivalent;
  verdict.path = chain_to(seen[0], *meet);
  // Walk the backward tree from the meeting point to `to`, inverting moves.
  auto back = chain_to(seen[1], *meet);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    const auto inv = inverse_site(it->before.view(), it->site);
    verdict.path.push_back({it->after, inv, it->before});
  }
  return verdict;
}

Verdict equivalent(const Nanophrase& from, const Nanophrase& to, const MoveSystem& system,
                   const SearchBudget& budget) {
  if (!(from.alphabet() == to.alphabet()) || !(from.alphabet() == system.alphabet())) {
    throw AlphabetMismatch("phrases and move system must share one alphabet");
  }
  return equivalent(canonical_form(from), canonical_form(to), system, budget);
}

bool replay_path(const CanonicalForm& from, const CanonicalForm& to,
                 const std::vector<PathStep>& path, const MoveSystem& system) {
  CanonicalForm cur = from;
  for (const auto& step : path) {
    if (!(step.before == cur)) return false;
    if (!site_allowed(cur.view(), step.site, system)) return false;
    auto next = apply_site(cur.view(), step.site);
    if (!(next == step.after)) return false;
    cur = std::move(next);
  }
  return cur == to;
}

std::vector<std::string> step_letters(const PathStep& step) {
  std::vector<std::string> names;
  const auto& s = step.site;
  if (s.kind == MoveKind::M1ins || s.kind == MoveKind::M2ins) {
    std::vector<LetterId> relabel;
    apply_site(step.before.view(), s, &relabel);
    const auto added = s.kind == MoveKind::M1ins ? 1u : 2u;
    for (std::size_t i = 0; i < added; ++i) {
      names.push_back(canonical_letter_name(relabel[step.before.letters() + i]));
    }
    return names;
  }
  std::vector<LetterId> seen;
  for (auto p : s.positions()) {
    const auto a = step.before.pattern[p];
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    names.push_back(canonical_letter_name(a));
  }
  return names;
}

std::string format_path(const std::vector<PathStep>& path, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    out += std::to_string(i + 1) + " " + std::string(to_string(path[i].site.kind));
    std::string letters;
    for (const auto& n : step_letters(path[i])) letters += (letters.empty() ? "" : ",") + n;
    out += " " + letters + " -> " + path[i].after.to_string(alphabet) + "\n";
  }
  return out;
}

ReachableSet ReachableSet::explore(const CanonicalForm& start, const MoveSystem& system,
                                   const SearchBudget& budget) {
  ReachableSet rs;
  rs.start_ = start.key();
  NodeMap seen;
  seen.emplace(rs.start_, ::nanoword::Node{{}, {}, true});
  std::vector<std::string> frontier = {rs.start_};
  bool exhausted = false;
  while (!frontier.empty() && !exhausted) {
    std::vector<std::string> next;
    for (std::size_t b = 0; b < frontier.size() && !exhausted; b += kBatch) {
      const auto e = std::min(frontier.size(), b + kBatch);
      auto batch = expand_batch(frontier, b, e, seen, system, budget.max_letters,
                                std::max(1u, budget.threads));
      for (std::size_t i = 0; i < batch.size() && !exhausted; ++i) {
        for (auto& cand : batch[i]) {
          auto [it, inserted] =
              seen.emplace(std::move(cand.key), ::nanoword::Node{frontier[b + i], cand.site, false});
          if (!inserted) continue;
          next.push_back(it->first);
          if (seen.size() > budget.max_states) {
            exhausted = true;
            break;
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  rs.closed_ = !exhausted;
  for (auto& [key, node] : seen) rs.nodes_.emplace(key, Node{node.parent, node.site, node.root});
  return rs;
}

std::optional<std::vector<PathStep>> ReachableSet::path_to(const CanonicalForm& form) const {
  const auto key = form.key();
  if (!nodes_.count(key)) return std::nullopt;
  std::vector<PathStep> steps;
  std::string cur = key;
  while (!nodes_.at(cur).root) {
    const auto& node = nodes_.at(cur);
    steps.push_back({CanonicalForm::from_key(node.parent), node.site, CanonicalForm::from_key(cur)});
    cur = node.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<std::string> ReachableSet::keys() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& [key, node] : nodes_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nanoword
