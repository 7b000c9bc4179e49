#include "shqip/morphogrammar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace shqip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool vowel_final(std::string_view word) {
  GraphemeString g = segment(word);
  if (g.empty()) return false;
  const Grapheme& last = g[g.size() - 1];
  return !last.opaque() && letter_at(last.letter).is_vowel;
}

void push_unique(std::vector<Analysis>& out, Analysis a) {
  for (const Analysis& have : out)
    if (same_reading(have, a)) return;
  out.push_back(std::move(a));
}

constexpr std::string_view kDefaultNumerals = R"(# numeral atoms: atom TAB value
# +10 marks the teen infix added after a unit (dymbëdhjetë = 12)
zero	0
një	1
dy	2
tre	3
tri	3
katër	4
pesë	5
gjashtë	6
shtatë	7
tetë	8
nëntë	9
dhjetë	10
njëzet	20
dyzet	40
qind	100
mijë	1000
mbëdhjetë	+10
)";

constexpr std::string_view kDefaultPrefixes = R"(# XY-word prefixes, one per line
gjysmë
bashkë
pa
nën
mbi
para
)";

constexpr std::string_view kDefaultNumericSuffixes =
    R"(# numeric compound suffixes: suffix TAB categories TAB features
vjeçar	A	+m
mujor	A	+m
katësh	A
dhëmbësh	A
motorësh	A
orësh	A
fish	N,ADV
fishoj	V
)";

}  // namespace

NumeralLexicon NumeralLexicon::defaults() { return load(kDefaultNumerals); }

NumeralLexicon NumeralLexicon::load(std::string_view tab_text) {
  NumeralLexicon lex;
  for (std::string_view line : data_lines(tab_text)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw error("numerals table: expected 'atom TAB value' in '" + std::string(line) + "'");
    std::string atom{trim(line.substr(0, tab))};
    std::string value{trim(line.substr(tab + 1))};
    if (atom.empty() || value.empty())
      throw error("numerals table: bad line '" + std::string(line) + "'");
    if (value.front() == '+') {
      lex.teen_infix_ = atom;
      continue;
    }
    long v = std::stol(value);
    if (v < 0) throw error("numerals table: negative value for " + atom);
    if (lex.atoms_.count(atom)) throw error("numerals table: duplicate atom " + atom);
    lex.atoms_[atom] = v;
  }

  // ordinal bodies keyed by the final atom; several atoms are their own body
  auto ord = [&](const char* atom, std::initializer_list<const char*> bodies) {
    auto& v = lex.ordinal_bodies_[atom];
    for (const char* b : bodies) v.emplace_back(b);
  };
  ord("një", {"njëhtë"});
  ord("dy", {"dytë"});
  ord("tre", {"tretë"});
  ord("katër", {"katërt"});
  ord("pesë", {"pestë"});
  ord("gjashtë", {"gjashtë"});
  ord("shtatë", {"shtatë"});
  ord("tetë", {"tetë"});
  ord("nëntë", {"nëntë"});
  ord("dhjetë", {"dhjetë"});
  ord("njëzet", {"njëzetë"});
  ord("dyzet", {"dyzetë"});
  ord("qind", {"qindtë"});
  ord("mijë", {"mijtë"});
  if (!lex.teen_infix_.empty()) ord(lex.teen_infix_.c_str(), {lex.teen_infix_.c_str()});
  return lex;
}

NumeralLexicon NumeralLexicon::load_file(const std::string& path) {
  return load(read_file(path));
}

long NumeralLexicon::atom_value(std::string_view atom) const {
  auto it = atoms_.find(std::string(atom));
  return it == atoms_.end() ? -1 : it->second;
}

// One numeral group starting at pos: unit [multiplier|teen-infix], a bare
// ten, or an atom ten like dyzet. rank: 1 units, 2 tens/teens, 3 hundreds,
// 4 thousands; groups must appear in strictly decreasing rank.
bool NumeralLexicon::parse_groups(std::string_view token, std::size_t pos,
                                  int max_rank, long sum, bool after_link,
                                  CardinalParse& out) const {
  if (pos == token.size()) return false;  // caller accepts only inside a group

  for (const auto& [atom, value] : atoms_) {
    if (!starts_with(token.substr(pos), atom)) continue;
    std::size_t after = pos + atom.size();

    struct Alt {
      long value;
      int rank;
      std::size_t end;
      const std::string* last;
      bool terminal;
    };
    std::vector<Alt> alts;

    if (value >= 1 && value <= 9) {
      if (starts_with(token.substr(after), teen_infix_))
        alts.push_back({value + 10, 2, after + teen_infix_.size(), &teen_infix_, true});
      for (const auto& [matom, mvalue] : atoms_) {
        if (mvalue != 10 && mvalue != 100 && mvalue != 1000) continue;
        if (!starts_with(token.substr(after), matom)) continue;
        int rank = mvalue == 10 ? 2 : mvalue == 100 ? 3 : 4;
        alts.push_back({value * mvalue, rank, after + matom.size(), &matom, false});
      }
      alts.push_back({value, 1, after, &atom, false});
    } else if (value == 10) {
      alts.push_back({value, 2, after, &atom, true});  // bare dhjetë ends a number
    } else if (value >= 20 && value < 100) {
      alts.push_back({value, 2, after, &atom, false});
    } else if (value == 0) {
      if (pos == 0 && after == token.size() && !after_link) {
        out.value = 0;
        out.last_atom = atom;
        return true;
      }
      continue;
    } else {
      continue;  // qind and mijë need a coefficient
    }

    for (const Alt& alt : alts) {
      if (alt.rank >= max_rank) continue;
      long total = sum + alt.value;
      if (alt.end == token.size()) {
        out.value = total;
        out.last_atom = *alt.last;
        return true;
      }
      if (alt.terminal) continue;
      if (parse_groups(token, alt.end, alt.rank, total, false, out)) return true;
      if (token[alt.end] == 'e' &&
          parse_groups(token, alt.end + 1, alt.rank, total, true, out))
        return true;
    }
  }
  return false;
}

std::optional<CardinalParse> NumeralLexicon::parse_cardinal_full(
    std::string_view token) const {
  if (token.empty()) return std::nullopt;
  CardinalParse out;
  if (!parse_groups(token, 0, 5, 0, false, out)) return std::nullopt;
  return out;
}

std::optional<long> NumeralLexicon::parse_cardinal(std::string_view token) const {
  auto parsed = parse_cardinal_full(token);
  if (!parsed) return std::nullopt;
  return parsed->value;
}

std::string NumeralLexicon::render_cardinal(long n) const {
  auto canon = [&](long v) -> std::string {
    // first atom with the value, in table order
    for (const auto& [atom, value] : atoms_)
      if (value == v) return atom;
    throw error("no numeral atom for value " + std::to_string(v));
  };
  if (n < 0 || n > 999)
    throw error("render_cardinal supports 0..999, got " + std::to_string(n));
  if (n == 0) return canon(0);

  std::string out;
  long h = n / 100;
  long rem = n % 100;
  if (h) out += canon(h) + canon(100);
  if (!rem) return out;
  if (h && rem < 10) out += 'e';  // tens skipped: dyqindedy

  if (rem == 10) {
    out += canon(10);
  } else if (rem > 10 && rem < 20) {
    out += canon(rem - 10) + teen_infix_;
  } else if (rem < 10) {
    out += canon(rem);
  } else {
    long t = rem / 10;
    long u = rem % 10;
    bool have_atom_ten = false;
    for (const auto& [atom, value] : atoms_)
      if (value == t * 10) { have_atom_ten = true; break; }
    if (have_atom_ten) {
      out += canon(t * 10);
      if (u) out += "e" + canon(u);  // dyzet e një, concatenated
    } else {
      // composed tens: the 3 coefficient is tri (tridhjetë)
      std::string coeff = canon(t);
      if (t == 3 && atoms_.count("tri")) coeff = "tri";
      out += coeff + canon(10);
      if (u) out += canon(u);  // pesëdhjetëpesë
    }
  }
  return out;
}

std::optional<long> NumeralLexicon::match_ordinal_body(std::string_view token) const {
  for (const auto& [atom, bodies] : ordinal_bodies_) {
    for (const std::string& body : bodies) {
      if (!ends_with(token, body)) continue;
      std::string cardinal{token.substr(0, token.size() - body.size())};
      cardinal += atom;
      auto parsed = parse_cardinal_full(cardinal);
      if (parsed && parsed->last_atom == atom && parsed->value > 0)
        return parsed->value;
    }
  }
  return std::nullopt;
}

std::string render_roman(long n) {
  static const std::pair<long, const char*> table[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"}};
  if (n < 1 || n > 3999)
    throw error("render_roman supports 1..3999, got " + std::to_string(n));
  std::string out;
  for (const auto& [value, sym] : table) {
    while (n >= value) {
      out += sym;
      n -= value;
    }
  }
  return out;
}

std::optional<long> parse_roman(std::string_view token) {
  if (token.empty()) return std::nullopt;
  auto digit = [](char c) -> long {
    switch (c) {
      case 'I': return 1;
      case 'V': return 5;
      case 'X': return 10;
      case 'L': return 50;
      case 'C': return 100;
      case 'D': return 500;
      case 'M': return 1000;
      default: return 0;
    }
  };
  long total = 0;
  for (std::size_t i = 0; i < token.size(); ++i) {
    long v = digit(token[i]);
    if (v == 0) return std::nullopt;
    long next = i + 1 < token.size() ? digit(token[i + 1]) : 0;
    total += v < next ? -v : v;
  }
  if (total < 1 || total > 3999) return std::nullopt;
  // only the canonical spelling is a Roman numeral (rejects IIII, VX)
  if (render_roman(total) != token) return std::nullopt;
  return total;
}

AffixTable AffixTable::defaults() {
  AffixTable t;
  t.load_prefixes(kDefaultPrefixes);
  t.load_numeric_suffixes(kDefaultNumericSuffixes);
  t.suffix_forms = {"fob", "fobi"};
  return t;
}

void AffixTable::load_prefixes(std::string_view tab_text) {
  for (std::string_view line : data_lines(tab_text)) prefixes.emplace_back(line);
  sort_prefixes();
}

void AffixTable::load_numeric_suffixes(std::string_view tab_text) {
  for (std::string_view line : data_lines(tab_text)) {
    std::size_t tab1 = line.find('\t');
    if (tab1 == std::string_view::npos)
      throw error("numeric suffix table: bad line '" + std::string(line) + "'");
    NumericSuffix s;
    s.suffix = std::string(trim(line.substr(0, tab1)));
    std::string_view rest = line.substr(tab1 + 1);
    std::size_t tab2 = rest.find('\t');
    std::string_view cats = tab2 == std::string_view::npos ? rest : rest.substr(0, tab2);
    cats = trim(cats);
    std::size_t pos = 0;
    while (pos <= cats.size()) {
      std::size_t comma = cats.find(',', pos);
      if (comma == std::string_view::npos) comma = cats.size();
      std::string_view cat = trim(cats.substr(pos, comma - pos));
      if (!cat.empty()) s.categories.emplace_back(cat);
      pos = comma + 1;
    }
    if (tab2 != std::string_view::npos)
      s.features = FeatureSet::parse(trim(rest.substr(tab2 + 1)));
    if (s.suffix.empty() || s.categories.empty())
      throw error("numeric suffix table: bad line '" + std::string(line) + "'");
    numeric_suffixes.push_back(std::move(s));
  }
}

void AffixTable::load_prefixes_file(const std::string& path) {
  prefixes.clear();
  load_prefixes(read_file(path));
}

void AffixTable::load_numeric_suffixes_file(const std::string& path) {
  numeric_suffixes.clear();
  load_numeric_suffixes(read_file(path));
}

const NumericSuffix* AffixTable::find_numeric(std::string_view suffix) const {
  for (const NumericSuffix& s : numeric_suffixes)
    if (s.suffix == suffix) return &s;
  return nullptr;
}

void AffixTable::sort_prefixes() {
  std::sort(prefixes.begin(), prefixes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
}

std::vector<Analysis> recognize_numeric_compound(std::string_view token,
                                                 const CompiledLexicon& lex,
                                                 const NumeralLexicon& numerals,
                                                 const AffixTable& affixes) {
  std::vector<Analysis> out;

  // the registered suffixes themselves
  for (const NumericSuffix& s : affixes.numeric_suffixes) {
    if (!ends_with(token, s.suffix) || token.size() <= s.suffix.size()) continue;
    std::string_view head = token.substr(0, token.size() - s.suffix.size());
    auto value = numerals.parse_cardinal(head);
    if (!value) continue;
    for (const std::string& category : s.categories) {
      Analysis a;
      a.surface = std::string(token);
      a.lemma = std::to_string(*value) + s.suffix;
      a.category = category;
      a.features = s.features;
      a.provenance = Provenance::morphogrammar;
      push_unique(out, std::move(a));
    }
  }

  // inflected suffixes (fishoj conjugated) resolve through the lexicon
  for (std::size_t i = 1; i + 1 <= token.size(); ++i) {
    std::string_view head = token.substr(0, i);
    std::string_view tail = token.substr(i);
    if (affixes.find_numeric(tail)) continue;  // handled above
    auto value = numerals.parse_cardinal(head);
    if (!value) continue;
    for (const LexPayload& payload : lex.lookup(tail)) {
      const NumericSuffix* s = affixes.find_numeric(payload.lemma);
      if (!s) continue;
      if (std::find(s->categories.begin(), s->categories.end(), payload.category) ==
          s->categories.end())
        continue;
      Analysis a;
      a.surface = std::string(token);
      a.lemma = std::to_string(*value) + payload.lemma;
      a.category = payload.category;
      a.features = payload.features;
      a.provenance = Provenance::morphogrammar;
      push_unique(out, std::move(a));
    }
  }
  return out;
}

std::vector<Analysis> recognize_affixed(std::string_view token,
                                        const CompiledLexicon& lex,
                                        const AffixTable& affixes) {
  std::vector<Analysis> out;
  for (const std::string& prefix : affixes.prefixes) {
    if (!starts_with(token, prefix) || token.size() <= prefix.size()) continue;
    std::string_view rest = token.substr(prefix.size());
    for (const LexPayload& payload : lex.lookup(rest)) {
      if (payload.category != "N" && payload.category != "V" && payload.category != "A")
        continue;
      Analysis a;
      a.surface = std::string(token);
      a.lemma = prefix + payload.lemma;
      a.category = payload.category;
      a.features = payload.features;
      a.provenance = Provenance::morphogrammar;
      push_unique(out, std::move(a));
    }
  }
  for (const std::string& sf : affixes.suffix_forms) {
    if (!ends_with(token, sf) || token.size() <= sf.size()) continue;
    Analysis a;
    a.surface = std::string(token);
    a.lemma = std::string(token);
    a.category = "N";
    a.provenance = Provenance::morphogrammar;
    push_unique(out, std::move(a));
  }
  return out;
}

std::optional<Analysis> recognize_ordinal_body(std::string_view token,
                                               const NumeralLexicon& numerals) {
  auto value = numerals.match_ordinal_body(token);
  if (!value) return std::nullopt;
  Analysis a;
  a.surface = std::string(token);
  a.lemma = std::string(token);
  a.category = "A";
  a.features.add(std::to_string(*value));
  a.provenance = Provenance::morphogrammar;
  return a;
}

namespace {

std::vector<LexPayload> imperative_payloads(const CompiledLexicon& lex,
                                            std::string_view surface,
                                            const char* number) {
  std::vector<LexPayload> out;
  for (LexPayload& payload : lex.lookup(surface)) {
    if (payload.category != "V") continue;
    if (!payload.features.contains("IP") || !payload.features.contains("2")) continue;
    if (!payload.features.contains(number)) continue;
    out.push_back(std::move(payload));
  }
  return out;
}

Analysis clitic_analysis(const std::string& clitic) {
  Analysis a;
  a.surface = clitic;
  a.lemma = clitic;
  a.category = "PRO";
  a.provenance = Provenance::morphogrammar;
  return a;
}

// the epenthetic j appears only between a stem-final vowel and the clitic
void stem_candidates(std::string_view stem, std::vector<std::string>& out) {
  out.emplace_back(stem);
  if (stem.size() > 1 && stem.back() == 'j') {
    std::string_view bare = stem.substr(0, stem.size() - 1);
    if (vowel_final(bare)) out.emplace_back(bare);
  }
}

}  // namespace

std::vector<std::pair<Analysis, Analysis>> split_clitic_imperative(
    std::string_view token, const CompiledLexicon& lex,
    const std::vector<std::string>& clitics) {
  std::vector<std::pair<Analysis, Analysis>> out;
  auto push = [&](const std::string& clitic, const LexPayload& payload) {
    Analysis verb;
    verb.surface = std::string(token);
    verb.lemma = payload.lemma;
    verb.category = payload.category;
    verb.features = payload.features;
    verb.provenance = Provenance::morphogrammar;
    for (const auto& [c, v] : out)
      if (c.lemma == clitic && same_reading(v, verb)) return;
    out.emplace_back(clitic_analysis(clitic), std::move(verb));
  };

  // plural: stem [j] clitic "ni", valid when stem+"ni" is a 2p imperative
  if (ends_with(token, "ni") && token.size() > 2) {
    std::string_view body = token.substr(0, token.size() - 2);
    for (const std::string& clitic : clitics) {
      if (!ends_with(body, clitic) || body.size() <= clitic.size()) continue;
      std::vector<std::string> stems;
      stem_candidates(body.substr(0, body.size() - clitic.size()), stems);
      for (const std::string& stem : stems)
        for (const LexPayload& payload : imperative_payloads(lex, stem + "ni", "p"))
          push(clitic, payload);
    }
  }

  // singular: 2s imperative [j] clitic
  for (const std::string& clitic : clitics) {
    if (!ends_with(token, clitic) || token.size() <= clitic.size()) continue;
    std::vector<std::string> stems;
    stem_candidates(token.substr(0, token.size() - clitic.size()), stems);
    for (const std::string& stem : stems)
      for (const LexPayload& payload : imperative_payloads(lex, stem, "s"))
        push(clitic, payload);
  }
  return out;
}

}  // namespace shqip
