#include "nanoword_cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nanoword/classify.hpp"
#include "nanoword/errors.hpp"
#include "nanoword/invariants.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/record.hpp"
#include "nanoword/search.hpp"

namespace nanoword::cli {

namespace {

RecordOptions record_options(const RunConfig& config, bool require_phrase = true) {
  RecordOptions o;
  o.builtin = config.builtin;
  if (config.lifted) o.lifted_k = config.k;
  o.require_phrase = require_phrase;
  return o;
}

Record load(const RunConfig& config, std::size_t index = 0) {
  if (index >= config.inputs.size()) throw ValidationError("missing input file");
  return read_record_file(config.inputs[index], record_options(config));
}

// The alphabet and move system for commands that do not need a phrase.
Record load_setting(const RunConfig& config) {
  if (!config.inputs.empty()) {
    return read_record_file(config.inputs[0], record_options(config, false));
  }
  if (!config.builtin) throw ValidationError("give an input file or --builtin");
  return parse_record("", record_options(config, false));
}

struct Value {
  std::string name;
  std::string text;
};

// Every invariant value of a record's phrase, plus the names that are
// invariants of the record's move system.
struct InvariantValues {
  std::vector<Value> values;
  std::vector<std::string> applicable;

  const Value* find(const std::string& name) const {
    for (const auto& v : values) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }
};

InvariantValues invariant_values(const Record& rec, Format format) {
  InvariantValues iv;
  const auto& p = *rec.phrase;
  auto lk_text = [&](const std::vector<PiElement>& lk, const Alphabet& base) {
    return format == Format::Tsv ? render_lk_exponents(lk) : render_lk(lk, base);
  };
  if (rec.is_lifted()) {
    const auto& L = *rec.lifted;
    iv.values.push_back({"lk", lk_text(lk_lifted(L, p), L.base())});
    iv.values.push_back({"clv", render_clv(clv_lifted(L, p))});
    iv.values.push_back({"so", so_lifted(L, p).to_string()});
    iv.applicable = applicable_lifted_invariants(L, rec.system);
  } else if (rec.system.r_is_tau_graph()) {
    iv.values.push_back({"lk", lk_text(lk_phrase(p, rec.system), p.alphabet())});
    iv.values.push_back({"clv", render_clv(clv_phrase(p, rec.system))});
    iv.values.push_back({"so", so_phrase(p, rec.system).to_string()});
    iv.values.push_back({"t", render_t(t_invariant(p, rec.system))});
    iv.applicable = applicable_invariants(rec.system);
  }
  return iv;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

void put(std::ostream& out, Format format, const std::string& key, const std::string& value) {
  if (format == Format::Tsv) {
    out << key << '\t' << value << '\n';
  } else {
    out << key << ": " << value << '\n';
  }
}

bool same_system(const MoveSystem& a, const MoveSystem& b) {
  return a.alphabet() == b.alphabet() && std::ranges::equal(a.q(), b.q()) &&
         std::ranges::equal(a.r(), b.r()) && std::ranges::equal(a.s(), b.s());
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const auto rec = load(config);
  const auto& p = *rec.phrase;
  put(out, config.format, "valid", "k=" + std::to_string(p.components()) +
                                       " n=" + std::to_string(p.letters()));
  return kOk;
}

int cmd_canon(const RunConfig& config, std::ostream& out) {
  const auto rec = load(config);
  out << canonical_form(*rec.phrase).to_string(rec.phrase->alphabet()) << '\n';
  return kOk;
}

int cmd_invariants(const RunConfig& config, std::ostream& out) {
  const auto rec = load(config);
  const auto& p = *rec.phrase;
  put(out, config.format, "canonical", canonical_form(p).to_string(p.alphabet()));
  if (!rec.is_lifted() && !rec.system.r_is_tau_graph()) {
    put(out, config.format, "invariants", "none (R is not the graph of tau)");
    return kOk;
  }
  const auto iv = invariant_values(rec, config.format);
  for (const auto& v : iv.values) put(out, config.format, v.name, v.text);
  put(out, config.format, "invariant-under-system", iv.applicable.empty() ? "none" : join(iv.applicable));
  if (rec.is_lifted()) {
    const auto v = check_conditions(*rec.lifted, p);
    put(out, config.format, "conditions",
        v ? "violated (" + v->first + "," + v->second + ") condition " + std::to_string(v->condition)
          : "satisfied");
  }
  return kOk;
}

int cmd_equiv(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.size() != 2) throw ValidationError("equiv needs two input files");
  const auto a = load(config, 0);
  const auto b = load(config, 1);
  if (!same_system(a.system, b.system) || a.is_lifted() != b.is_lifted()) {
    throw AlphabetMismatch("the two inputs use different alphabets or move systems");
  }
  const auto& pa = *a.phrase;
  const auto& pb = *b.phrase;

  std::vector<std::string> separators;
  if (a.is_lifted() || a.system.r_is_tau_graph()) {
    const auto va = invariant_values(a, Format::Report);
    const auto vb = invariant_values(b, Format::Report);
    for (const auto& name : va.applicable) {
      if (va.find(name)->text != vb.find(name)->text) separators.push_back(name);
    }
  }

  SearchBudget budget;
  budget.max_letters = std::max({config.max_letters, pa.letters(), pb.letters()});
  budget.max_states = config.max_states;
  budget.threads = config.threads;
  const auto fa = canonical_form(pa);
  const auto fb = canonical_form(pb);
  const auto verdict = equivalent(fa, fb, a.system, budget);
  const auto states = std::to_string(verdict.states) + " states";

  if (verdict.outcome == Outcome::Equivalent &&
      !replay_path(fa, fb, verdict.path, a.system)) {
    err << "internal error: search path failed to replay\n";
    return kInconsistent;
  }
  if (!separators.empty()) {
    if (verdict.outcome == Outcome::Equivalent) {
      err << "internal error: search found a path between phrases separated by "
          << join(separators) << '\n';
      return kInconsistent;
    }
    put(out, config.format, "verdict", "NotEquivalent");
    put(out, config.format, "separated-by", join(separators));
    put(out, config.format, "search", std::string(to_string(verdict.outcome)) + " (" + states + ")");
    return kOk;
  }
  put(out, config.format, "verdict", std::string(to_string(verdict.outcome)));
  switch (verdict.outcome) {
    case Outcome::Equivalent:
      put(out, config.format, "steps", std::to_string(verdict.path.size()));
      out << format_path(verdict.path, pa.alphabet());
      return kOk;
    case Outcome::NotEquivalent:
      put(out, config.format, "search", "exhausted (" + states + ")");
      return kOk;
    case Outcome::Unknown:
      put(out, config.format, "search", "budget exhausted (" + states + ")");
      return kUnknown;
  }
  return kOk;
}

int cmd_lift(const RunConfig& config, std::ostream& out) {
  auto options = record_options(config);
  options.lifted_k.reset();
  if (config.inputs.empty()) throw ValidationError("missing input file");
  const auto rec = read_record_file(config.inputs[0], options);
  if (rec.is_lifted()) throw ValidationError("lift expects a phrase over the base alphabet");
  const auto setting = lift_setting(rec, rec.phrase->components());
  out << format_record(setting, phi(*setting.lifted, *rec.phrase));
  return kOk;
}

int cmd_project(const RunConfig& config, std::ostream& out) {
  const auto rec = load(config);
  if (!rec.is_lifted()) throw ValidationError("project expects a nanoword over alpha_k (use k: or --lifted)");
  out << format_record(base_setting(rec), psi(*rec.lifted, *rec.phrase));
  return kOk;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  const auto rec = load_setting(config);
  std::size_t count = 0;
  for_each_nanophrase(*rec.alphabet(), config.n, config.k, [&](const CanonicalForm& f) {
    out << f.to_string(*rec.alphabet()) << '\n';
    ++count;
  });
  if (config.format == Format::Report) out << "count: " << count << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto rec = load_setting(config);
  SearchBudget budget;
  budget.max_letters = config.max_letters_given ? config.max_letters : config.n + 2;
  budget.max_states = config.max_states;
  budget.threads = config.threads;
  const auto result = classify(rec.system, config.n, config.k, budget);
  const auto& alpha = *rec.alphabet();

  put(out, config.format, "phrases", std::to_string(result.phrases));
  put(out, config.format, "classes", std::to_string(result.classes.size()));
  put(out, config.format, "invariants", join(applicable_invariants(rec.system)));
  put(out, config.format, "unknown-pairs", std::to_string(result.unknown.size()));
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    const auto& cls = result.classes[c];
    const auto label = "class " + std::to_string(c + 1);
    if (config.format == Format::Tsv) {
      for (const auto& m : cls.members) {
        out << (c + 1) << '\t' << m.to_string(alpha) << '\t' << cls.signature << '\n';
      }
      continue;
    }
    out << label << ": size " << cls.members.size() << (cls.closed ? ", closed" : ", open")
        << (cls.signature.empty() ? "" : ", " + cls.signature) << '\n';
    for (const auto& m : cls.members) out << "  " << m.to_string(alpha) << '\n';
  }
  for (const auto& u : result.unknown) {
    put(out, config.format, "unknown", u.first.to_string(alpha) + " ~ " + u.second.to_string(alpha));
  }
  if (!result.inconsistencies.empty()) {
    for (const auto& bad : result.inconsistencies) {
      err << "internal error: " << bad.from.to_string(alpha) << " -> " << bad.to.to_string(alpha)
          << ": " << bad.detail << '\n';
    }
    return kInconsistent;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nanowords, nanophrases and their homotopy invariants", "nanoword"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "report";

  app.add_option("--builtin", config.builtin, "Builtin homotopy data")
      ->check(CLI::IsMember({"curves", "links", "ornaments", "diagonal"}));
  auto* k_opt = app.add_option("--k", config.k, "Number of components")->check(CLI::PositiveNumber);
  app.add_flag("--lifted", config.lifted, "Read phrases as nanowords over alpha_k");
  app.add_option("--n", config.n, "Number of letters to enumerate");
  auto* ml = app.add_option("--max-letters", config.max_letters, "Letter budget for searches")
                 ->check(CLI::PositiveNumber);
  app.add_option("--max-states", config.max_states, "State budget for searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads, "Worker threads for searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"report", "tsv"}));

  struct Sub {
    const char* name;
    const char* help;
    int files;
  };
  const Sub subs[] = {
      {"validate", "Validate a phrase", 1},
      {"canon", "Print the canonical form", 1},
      {"invariants", "Print the invariants of a phrase", 1},
      {"equiv", "Decide homotopy of two phrases by search", 2},
      {"lift", "Map a phrase to a nanoword over alpha_k", 1},
      {"project", "Map a nanoword over alpha_k back to a phrase", 1},
      {"enumerate", "List phrases with --n letters and --k components", -1},
      {"classify", "Partition phrases with up to --n letters", -1},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    auto* files = sub->add_option("files", config.inputs, "Input records");
    if (s.files > 0) {
      files->required()->expected(s.files);
    } else {
      files->expected(0, 1);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.k_given = k_opt->count() > 0;
  config.max_letters_given = ml->count() > 0;
  config.format = format == "tsv" ? Format::Tsv : Format::Report;

  try {
    const auto& c = config.subcommand;
    if (c == "validate") return cmd_validate(config, out);
    if (c == "canon") return cmd_canon(config, out);
    if (c == "invariants") return cmd_invariants(config, out);
    if (c == "equiv") return cmd_equiv(config, out, err);
    if (c == "lift") return cmd_lift(config, out);
    if (c == "project") return cmd_project(config, out);
    if (c == "enumerate") return cmd_enumerate(config, out);
    if (c == "classify") return cmd_classify(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace nanoword::cli
