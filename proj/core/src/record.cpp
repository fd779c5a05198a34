#include "nanoword/record.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "nanoword/errors.hpp"

namespace nanoword {

namespace {

struct Line {
  std::size_t number = 0;
  std::string value;
};

constexpr std::string_view kKeys[] = {"builtin", "alpha", "tau", "Q", "R", "S", "k", "proj", "phrase"};
constexpr std::string_view kEmptyMark = "\xE2\x88\x85";  // U+2205

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

Symbol symbol_at(const Alphabet& alpha, const std::string& name, std::size_t line) {
  const auto s = alpha.find(name);
  if (!s) throw ParseError(line, "unknown symbol '" + name + "'");
  return *s;
}

std::map<std::string, Line, std::less<>> read_lines(std::string_view text) {
  std::map<std::string, Line, std::less<>> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'key: value'");
    auto key = trim(std::string_view(line).substr(0, colon));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError(number, "unknown key '" + key + "'");
    }
    if (lines.count(key)) throw ParseError(number, "duplicate key '" + key + "'");
    lines.emplace(std::move(key), Line{number, trim(std::string_view(line).substr(colon + 1))});
  }
  return lines;
}

AlphabetPtr parse_alphabet(const Line& alpha, const Line* tau) {
  auto names = tokens(alpha.value);
  if (names.empty()) throw ParseError(alpha.number, "alphabet is empty");
  std::vector<std::pair<std::string, std::string>> swaps;
  if (tau) {
    for (const auto& t : tokens(tau->value)) {
      const auto parts = split(t, '=');
      if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
        throw ParseError(tau->number, "malformed tau pair '" + t + "' (expected a=b)");
      }
      swaps.emplace_back(parts[0], parts[1]);
    }
  }
  try {
    for (const auto& [a, b] : swaps) {
      if (a == b) throw ValidationError("tau pair '" + a + "=" + b + "' lists a fixed point");
    }
    return Alphabet::make(std::move(names), swaps);
  } catch (const ValidationError& e) {
    throw ParseError(tau && !swaps.empty() ? tau->number : alpha.number, e.what());
  }
}

MoveSystem parse_system(const AlphabetPtr& alpha, const Line* q, const Line* r, const Line* s) {
  std::vector<Symbol> qs;
  if (!q || q->value == "all") {
    for (std::size_t i = 0; i < alpha->size(); ++i) qs.push_back(static_cast<Symbol>(i));
  } else {
    for (const auto& t : tokens(q->value)) qs.push_back(symbol_at(*alpha, t, q->number));
  }
  std::vector<SymbolPair> rs;
  if (!r || r->value == "tau") {
    rs = MoveSystem::tau_graph(*alpha);
  } else {
    for (const auto& t : tokens(r->value)) {
      const auto parts = split(t, ',');
      if (parts.size() != 2) throw ParseError(r->number, "malformed pair '" + t + "' (expected a,b)");
      rs.push_back({symbol_at(*alpha, parts[0], r->number), symbol_at(*alpha, parts[1], r->number)});
    }
  }
  std::vector<SymbolTriple> ss;
  if (!s || s->value == "diagonal") {
    ss = MoveSystem::diagonal(*alpha);
  } else if (s->value != "none") {
    for (const auto& t : tokens(s->value)) {
      const auto parts = split(t, ',');
      if (parts.size() != 3) {
        throw ParseError(s->number, "malformed triple '" + t + "' (expected a,b,c)");
      }
      ss.push_back({symbol_at(*alpha, parts[0], s->number), symbol_at(*alpha, parts[1], s->number),
                    symbol_at(*alpha, parts[2], s->number)});
    }
  }
  return MoveSystem(alpha, std::move(qs), std::move(rs), std::move(ss));
}

MoveSystem with_full_q(const MoveSystem& m) {
  std::vector<Symbol> q(m.alphabet().size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = static_cast<Symbol>(i);
  return MoveSystem(m.alphabet_ptr(), std::move(q), {m.r().begin(), m.r().end()},
                    {m.s().begin(), m.s().end()});
}

Record lifted_record(const Record& base, std::size_t k, bool q_all) {
  std::shared_ptr<const LiftedAlphabet> lifted;
  std::optional<MoveSystem> system;
  if (base.builtin) {
    auto data = builtin_data(*base.builtin, k);
    lifted = data.lifted;
    system.emplace(std::move(data.lifted_system));
  } else {
    lifted = std::make_shared<const LiftedAlphabet>(base.base(), k);
    system.emplace(lifted->lift_system(base.base_system));
  }
  if (q_all) system.emplace(with_full_q(*system));
  return Record{base.builtin, base.base_system, std::move(lifted), std::move(*system),
                std::nullopt, q_all};
}

RawPhrase parse_phrase_lines(const Line* proj, const Line& phrase) {
  RawPhrase raw;
  if (proj) {
    for (const auto& t : tokens(proj->value)) {
      const auto parts = split(t, '=');
      if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
        throw ParseError(proj->number, "malformed projection '" + t + "' (expected A=a)");
      }
      raw.proj.emplace_back(parts[0], parts[1]);
    }
  }
  std::string spaced;
  for (char c : phrase.value) {
    if (c == '|') {
      spaced += " | ";
    } else {
      spaced += c;
    }
  }
  raw.components.emplace_back();
  for (const auto& t : tokens(spaced)) {
    if (t == "|") {
      raw.components.emplace_back();
    } else if (t != kEmptyMark) {
      raw.components.back().push_back(t);
    }
  }
  return raw;
}

}  // namespace

Record parse_record(std::string_view text, const RecordOptions& options) {
  const auto lines = read_lines(text);
  auto get = [&](std::string_view key) -> const Line* {
    auto it = lines.find(key);
    return it == lines.end() ? nullptr : &it->second;
  };

  std::optional<std::string> builtin = options.builtin;
  if (const auto* b = get("builtin")) {
    if (builtin && *builtin != b->value) {
      throw ParseError(b->number, "builtin '" + b->value + "' conflicts with '" + *builtin + "'");
    }
    builtin = b->value;
  }
  std::optional<MoveSystem> base_system;
  if (builtin) {
    for (auto key : {"alpha", "tau", "Q", "R", "S"}) {
      if (const auto* l = get(key); l && !(l->value == "all" && std::string_view(key) == "Q")) {
        throw ParseError(l->number, std::string("'") + key + "' cannot be combined with builtin data");
      }
    }
    try {
      base_system.emplace(builtin_data(*builtin, 1).base_system);
    } catch (const UnknownName& e) {
      const auto* b = get("builtin");
      throw ParseError(b ? b->number : 0, e.what());
    }
  } else {
    const auto* alpha = get("alpha");
    if (!alpha) throw ParseError(0, "missing 'alpha' (or builtin data)");
    const auto base = parse_alphabet(*alpha, get("tau"));
    base_system.emplace(parse_system(base, get("Q"), get("R"), get("S")));
  }

  std::optional<std::size_t> lifted_k = options.lifted_k;
  if (const auto* k = get("k")) {
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(k->value, &used);
      if (used != k->value.size() || value == 0) throw std::invalid_argument("k");
    } catch (const std::logic_error&) {
      throw ParseError(k->number, "k must be a positive integer");
    }
    if (lifted_k && *lifted_k != value) {
      throw ParseError(k->number, "k conflicts with the requested component count");
    }
    lifted_k = value;
  }

  Record record{builtin, *base_system, nullptr, *base_system, std::nullopt, false};
  if (lifted_k) {
    const auto* q = get("Q");
    record = lifted_record(record, *lifted_k, q && q->value == "all");
  }

  const auto* phrase = get("phrase");
  if (!phrase) {
    if (options.require_phrase) throw ParseError(0, "missing 'phrase'");
    return record;
  }
  const auto* proj = get("proj");
  const auto raw = parse_phrase_lines(proj, *phrase);
  try {
    record.phrase.emplace(validate_nanophrase(record.alphabet(), raw));
  } catch (const UnknownSymbol& e) {
    throw ParseError(proj ? proj->number : phrase->number, e.what());
  } catch (const ValidationError& e) {
    throw ParseError(phrase->number, e.what());
  }
  return record;
}

Record read_record_file(const std::string& path, const RecordOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_record(buf.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.message());
  }
}

std::string format_record(const Record& setting, const Nanophrase& phrase) {
  std::string out;
  const auto& base = *setting.base();
  if (setting.builtin) {
    out += "builtin: " + *setting.builtin + "\n";
  } else {
    out += "alpha:";
    for (const auto& n : base.names()) out += " " + n;
    out += "\n";
    std::string tau;
    for (std::size_t s = 0; s < base.size(); ++s) {
      const auto t = base.tau(static_cast<Symbol>(s));
      if (t > s) tau += " " + base.name(static_cast<Symbol>(s)) + "=" + base.name(t);
    }
    if (!tau.empty()) out += "tau:" + tau + "\n";
    const auto& m = setting.base_system;
    if (!m.q_is_full()) {
      out += "Q:";
      for (auto s : m.q()) out += " " + base.name(s);
      out += "\n";
    }
    if (!m.r_is_tau_graph()) {
      out += "R:";
      for (const auto& p : m.r()) out += " " + base.name(p[0]) + "," + base.name(p[1]);
      out += "\n";
    }
    const auto diag = MoveSystem::diagonal(base);
    if (!std::equal(m.s().begin(), m.s().end(), diag.begin(), diag.end())) {
      out += "S:";
      if (m.s().empty()) out += " none";
      for (const auto& t : m.s()) {
        out += " " + base.name(t[0]) + "," + base.name(t[1]) + "," + base.name(t[2]);
      }
      out += "\n";
    }
  }
  if (setting.lifted) {
    out += "k: " + std::to_string(setting.lifted->k()) + "\n";
    if (setting.lifted_q_all) out += "Q: all\n";
  }
  out += "proj:";
  for (LetterId a = 0; a < phrase.letters(); ++a) {
    out += " " + phrase.name(a) + "=" + phrase.alphabet().name(phrase.proj(a));
  }
  out += "\nphrase:";
  const auto text = phrase.to_string();
  if (!text.empty()) out += " " + text;
  return out + "\n";
}

Record lift_setting(const Record& setting, std::size_t k) {
  return lifted_record(base_setting(setting), k, false);
}

Record base_setting(const Record& setting) {
  return Record{setting.builtin, setting.base_system, nullptr, setting.base_system, std::nullopt,
                false};
}

}  // namespace nanoword
