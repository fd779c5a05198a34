#include "nanoword/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "nanoword/invariants.hpp"

namespace nanoword {

std::vector<std::string> applicable_invariants(const MoveSystem& system) {
  if (!system.r_is_tau_graph()) return {};
  std::vector<std::string> names = {"lk", "clv"};
  if (system.s_within_diagonal()) {
    names.emplace_back("so");
    names.emplace_back("t");
  }
  return names;
}

std::vector<std::string> applicable_lifted_invariants(const LiftedAlphabet& lifted,
                                                      const MoveSystem& system) {
  auto subset = [](auto have, auto allowed) {
    std::sort(allowed.begin(), allowed.end());
    return std::all_of(have.begin(), have.end(), [&](const auto& x) {
      return std::binary_search(allowed.begin(), allowed.end(), x);
    });
  };
  if (!(system.alphabet() == lifted.alphabet())) return {};
  const bool r_ok = subset(system.r(), lifted.r_lift());
  const bool q_ok = subset(system.q(), lifted.q_lift());
  const bool s_ok = subset(system.s(), lifted.s_lift(MoveSystem::diagonal(lifted.base())));
  std::vector<std::string> names;
  if (q_ok && r_ok) {
    names.emplace_back("lk");
    names.emplace_back("clv");
  }
  if (r_ok && s_ok) names.emplace_back("so");
  return names;
}

std::string invariant_signature(const Nanophrase& phrase, const MoveSystem& system) {
  std::string out;
  for (const auto& name : applicable_invariants(system)) {
    if (!out.empty()) out += "; ";
    out += name + "=";
    if (name == "lk") {
      out += render_lk(lk_phrase(phrase, system), phrase.alphabet());
    } else if (name == "clv") {
      out += render_clv(clv_phrase(phrase, system));
    } else if (name == "so") {
      out += so_phrase(phrase, system).to_string();
    } else {
      out += render_t(t_invariant(phrase, system));
    }
  }
  return out;
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Classification classify(const MoveSystem& system, std::size_t max_letters_enumerated,
                        std::size_t components, const SearchBudget& budget) {
  const auto& alphabet = system.alphabet_ptr();
  std::vector<CanonicalForm> forms;
  for (std::size_t n = 0; n <= max_letters_enumerated; ++n) {
    for_each_nanophrase(*alphabet, n, components,
                        [&](const CanonicalForm& f) { forms.push_back(f); });
  }
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> signature;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    index.emplace(forms[i].key(), i);
    signature.push_back(invariant_signature(Nanophrase::from_canonical(alphabet, forms[i]), system));
  }

  Classification result;
  result.phrases = forms.size();
  Dsu dsu(forms.size());
  std::vector<char> covered(forms.size(), 0);
  std::vector<char> closed(forms.size(), 0);
  SearchBudget explore_budget = budget;
  explore_budget.max_letters = std::max(budget.max_letters, max_letters_enumerated);

  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (covered[i]) continue;
    covered[i] = 1;
    const auto reach = ReachableSet::explore(forms[i], system, explore_budget);
    if (reach.closed()) closed[i] = 1;
    for (const auto& key : reach.keys()) {
      auto it = index.find(key);
      if (it == index.end() || it->second == i) continue;
      const auto j = it->second;
      const auto path = *reach.path_to(forms[j]);
      if (!replay_path(forms[i], forms[j], path, system)) {
        result.inconsistencies.push_back({forms[i], forms[j], "path failed to replay"});
        continue;
      }
      if (signature[i] != signature[j]) {
        result.inconsistencies.push_back(
            {forms[i], forms[j],
             "equivalent phrases with different invariants: " + signature[i] + " vs " + signature[j]});
        continue;
      }
      covered[j] = 1;
      dsu.join(i, j);
    }
  }

  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto root = dsu.find(i);
    auto [it, inserted] = class_of_root.emplace(root, result.classes.size());
    if (inserted) {
      result.classes.push_back({forms[root], {}, signature[root], false});
    }
    auto& cls = result.classes[it->second];
    cls.members.push_back(forms[i]);
    if (closed[i]) cls.closed = true;
  }

  for (std::size_t a = 0; a < result.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < result.classes.size(); ++b) {
      const auto& x = result.classes[a];
      const auto& y = result.classes[b];
      if (x.signature != y.signature || x.closed || y.closed) continue;
      result.unknown.push_back({x.representative, y.representative});
    }
  }
  return result;
}

}  // namespace nanoword
