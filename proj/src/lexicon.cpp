#include "shqip/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

namespace shqip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// printed part-of-speech markers and the case features prepositions govern
const std::map<std::string, std::string, std::less<>> kPosMarkers = {
    {"adv.", "ADV"}, {"prep.", "PREP"}, {"excl.", "INTERJ"}, {"conj.", "CONJ"}};
const std::map<std::string, std::string, std::less<>> kCaseMarkers = {
    {"abl.", "rrjedh"}, {"acc.", "kallez"}, {"gen.", "gjin"},
    {"nom.", "emer"},   {"dat.", "dhan"}};

PrintedEntry problem_entry(std::string_view line, std::string reason) {
  PrintedEntry pe;
  pe.raw = std::string(line);
  pe.kind = PrintedEntry::Kind::problem;
  pe.problem = std::move(reason);
  return pe;
}

}  // namespace

PrintedEntry parse_printed(std::string_view raw_line) {
  std::string line{trim(raw_line)};
  if (line.empty()) return problem_entry(raw_line, "empty line");

  PrintedEntry pe;
  pe.raw = std::string(raw_line);
  std::smatch m;

  // articulated adjective: mirë (i,e) good
  static const std::regex articulated(R"(^(\S+)\s*\(\s*i\s*,\s*e\s*\)\s*(.*)$)");
  if (std::regex_match(line, m, articulated)) {
    PrintedEntry::Adjective adj;
    adj.form = m[1];
    adj.articulated = true;
    pe.kind = PrintedEntry::Kind::adjective;
    pe.gloss = m[2];
    pe.parsed = adj;
    return pe;
  }

  // adjective with -e feminine: absurd(e) absurd
  static const std::regex e_adj(R"(^([^\s()]+)\(e\)\s*(.*)$)");
  if (std::regex_match(line, m, e_adj)) {
    PrintedEntry::Adjective adj;
    adj.form = m[1];
    adj.e_feminine = true;
    pe.kind = PrintedEntry::Kind::adjective;
    pe.gloss = m[2];
    pe.parsed = adj;
    return pe;
  }

  // verb: laj (lava, larë) / lahem (u lava, larë)
  static const std::regex verb(R"(^(\S+)\s*\(\s*(u\s+)?([^,()]+?)\s*,\s*([^,()]+?)\s*\)\s*(.*)$)");
  if (std::regex_match(line, m, verb)) {
    PrintedEntry::Verb v;
    v.form1 = m[1];
    v.non_active = m[2].matched;
    v.form2 = m[3];
    v.participle = m[4];
    pe.kind = v.non_active ? PrintedEntry::Kind::nonactive_verb : PrintedEntry::Kind::verb;
    pe.gloss = m[5];
    pe.parsed = v;
    return pe;
  }

  // noun: rad/t1,-t2 g. pl. (-t3, -t4)
  static const std::regex noun(
      R"(^([^,/()]+?)(?:/([^,()\s]+))?\s*,\s*-?([^\s,()]+)\s+(m|f)\.(?:\s+pl\.\s*\(\s*-?([^\s,()]*)\s*,\s*-?([^\s,()]*)\s*\))?\s*(.*)$)");
  if (std::regex_match(line, m, noun)) {
    PrintedEntry::Noun n;
    n.radical = m[1];
    n.t1 = m[2];
    n.t2 = m[3];
    n.gender = m[4];
    if (m[5].matched) {
      n.t3 = m[5];
      n.t4 = m[6];
      n.has_plural = true;
    }
    pe.kind = PrintedEntry::Kind::noun;
    pe.gloss = m[7];
    pe.parsed = n;
    return pe;
  }

  // invariant words carry a trailing POS marker: afër adv. and prep. + abl.
  auto tokens = whitespace_tokens(line);
  std::size_t first_marker = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (kPosMarkers.count(tokens[i])) {
      first_marker = i;
      break;
    }
  }
  if (first_marker < tokens.size()) {
    if (first_marker == 0) return problem_entry(raw_line, "marker without entry word");
    PrintedEntry::Invariant inv;
    for (std::size_t i = 0; i < first_marker; ++i) {
      if (i) inv.lemma += ' ';
      inv.lemma += tokens[i];
    }
    while (!inv.lemma.empty() && inv.lemma.back() == '!') inv.lemma.pop_back();

    std::size_t i = first_marker;
    for (; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      if (tok == "and" || tok == "+") continue;
      if (auto pos = kPosMarkers.find(tok); pos != kPosMarkers.end()) {
        inv.readings.emplace_back(pos->second, FeatureSet{});
        continue;
      }
      if (auto cs = kCaseMarkers.find(tok); cs != kCaseMarkers.end()) {
        if (inv.readings.empty())
          return problem_entry(raw_line, "case marker without part of speech");
        inv.readings.back().second.add(cs->second);
        continue;
      }
      break;  // gloss starts here
    }
    for (std::size_t g = i; g < tokens.size(); ++g) {
      if (!pe.gloss.empty()) pe.gloss += ' ';
      pe.gloss += tokens[g];
    }
    pe.kind = PrintedEntry::Kind::invariant;
    pe.parsed = inv;
    return pe;
  }

  return problem_entry(raw_line, "unrecognized entry format");
}

namespace {

bool production_matches(const Paradigm& p, const Production& prod,
                        const std::string& lemma, const std::string& target,
                        const std::string& prefix) {
  if (prod.particle_prefix != prefix) return false;
  try {
    return apply(prod.commands, lemma, p.mode) == target;
  } catch (const paradigm_error&) {
    return false;
  }
}

// first production carrying all the wanted features and no unwanted one
const Production* find_production(const Paradigm& p, std::initializer_list<const char*> wanted) {
  for (const Production& prod : p.productions) {
    bool ok = true;
    for (const char* f : wanted)
      if (!prod.features.contains(f)) ok = false;
    if (ok) return &prod;
  }
  return nullptr;
}

std::vector<const Paradigm*> sorted_by_name(std::vector<const Paradigm*> v) {
  std::sort(v.begin(), v.end(),
            [](const Paradigm* a, const Paradigm* b) { return a->name < b->name; });
  return v;
}

}  // namespace

AssignResult assign_paradigm(const PrintedEntry& pe, const ParadigmLibrary& library) {
  AssignResult result;
  if (!pe.ok()) {
    result.problem = pe.problem.empty() ? "not parsed" : pe.problem;
    return result;
  }

  auto pick = [&](std::vector<const Paradigm*> candidates,
                  const std::string& what) -> const Paradigm* {
    if (candidates.empty()) return nullptr;
    candidates = sorted_by_name(std::move(candidates));
    if (candidates.size() > 1) {
      std::string note = "ambiguous paradigm for " + what + ":";
      for (const Paradigm* p : candidates) note += " " + p->name;
      note += " -> " + candidates.front()->name;
      result.notes.push_back(std::move(note));
    }
    return candidates.front();
  };

  switch (pe.kind) {
    case PrintedEntry::Kind::noun: {
      const auto& n = std::get<PrintedEntry::Noun>(pe.parsed);
      std::string lemma = n.radical + n.t1;

      std::vector<const Paradigm*> sg;
      for (const Paradigm& p : library.all()) {
        if (p.category != "N" || p.name.find("PL") != std::string::npos) continue;
        const Production* def = find_production(p, {"emer", "shquar"});
        if (def && production_matches(p, *def, lemma, n.radical + n.t2, ""))
          sg.push_back(&p);
      }
      const Paradigm* sg_p = pick(std::move(sg), lemma + " singular");
      if (!sg_p) {
        result.problem = "no_paradigm: no singular paradigm yields " + n.radical + n.t2;
        return result;
      }
      LexEntry sg_entry{lemma, "N", sg_p->name, FeatureSet{n.gender, "s"}};
      result.entries.push_back(std::move(sg_entry));

      if (n.has_plural) {
        std::vector<const Paradigm*> pl;
        for (const Paradigm& p : library.all()) {
          if (p.category != "N" || p.name.find("PL") == std::string::npos) continue;
          const Production* indef = find_production(p, {"emer", "pashquar"});
          if (!indef || !production_matches(p, *indef, lemma, n.radical + n.t3, ""))
            continue;
          if (const Production* def = find_production(p, {"emer", "shquar"})) {
            if (!production_matches(p, *def, lemma, n.radical + n.t4, "")) continue;
          }
          pl.push_back(&p);
        }
        const Paradigm* pl_p = pick(std::move(pl), lemma + " plural");
        if (!pl_p) {
          result.problem = "no_paradigm: no plural paradigm yields " + n.radical + n.t3;
          result.entries.clear();
          return result;
        }
        // a masculine noun with -e plural is an ambigen: feminine in the plural
        std::string pl_gender = (n.gender == "m" && n.t3 == "e") ? "f" : n.gender;
        result.entries.push_back(LexEntry{lemma, "N", pl_p->name, FeatureSet{pl_gender, "p"}});
      }
      return result;
    }

    case PrintedEntry::Kind::verb:
    case PrintedEntry::Kind::nonactive_verb: {
      const auto& v = std::get<PrintedEntry::Verb>(pe.parsed);
      std::string prefix = v.non_active ? "u " : "";
      std::vector<const Paradigm*> candidates;
      for (const Paradigm& p : library.all()) {
        if (p.category != "V") continue;
        const Production* aorist = find_production(p, {"PS", "Ind", "1", "s"});
        if (!aorist || !production_matches(p, *aorist, v.form1, v.form2, prefix)) continue;
        const Production* part = find_production(p, {"P"});
        if (!part || !production_matches(p, *part, v.form1, v.participle,
                                         part->particle_prefix))
          continue;
        candidates.push_back(&p);
      }
      const Paradigm* vp = pick(std::move(candidates), v.form1);
      if (!vp) {
        result.problem = "no_paradigm: no verb paradigm yields (" + v.form2 + ", " +
                         v.participle + ")";
        return result;
      }
      FeatureSet inherent;
      if (v.non_active) inherent.add("joveprore");
      result.entries.push_back(LexEntry{v.form1, "V", vp->name, inherent});
      return result;
    }

    case PrintedEntry::Kind::adjective: {
      const auto& adj = std::get<PrintedEntry::Adjective>(pe.parsed);
      std::vector<const Paradigm*> candidates;
      for (const Paradigm& p : library.all()) {
        if (p.category != "A") continue;
        if (adj.articulated) {
          bool has_particle = std::any_of(
              p.productions.begin(), p.productions.end(),
              [](const Production& prod) { return prod.particle_prefix == "i "; });
          if (has_particle) candidates.push_back(&p);
        } else if (adj.e_feminine) {
          const Production* fem = find_production(p, {"f"});
          if (fem && fem->particle_prefix.empty() &&
              production_matches(p, *fem, adj.form, adj.form + "e", ""))
            candidates.push_back(&p);
        }
      }
      const Paradigm* ap = pick(std::move(candidates), adj.form);
      if (!ap) {
        result.problem = "no_paradigm: no adjective paradigm fits " + adj.form;
        return result;
      }
      FeatureSet inherent;
      if (adj.articulated) inherent.add("ei");
      result.entries.push_back(LexEntry{adj.form, "A", ap->name, inherent});
      return result;
    }

    case PrintedEntry::Kind::invariant: {
      const auto& inv = std::get<PrintedEntry::Invariant>(pe.parsed);
      for (const auto& [category, features] : inv.readings)
        result.entries.push_back(LexEntry{inv.lemma, category, "", features});
      return result;
    }

    case PrintedEntry::Kind::problem:
      result.problem = pe.problem;
      return result;
  }
  result.problem = "not parsed";
  return result;
}

CompiledLexicon CompiledLexicon::compile(const std::vector<LexEntry>& entries,
                                         const ParadigmLibrary& library,
                                         bool minimize) {
  TrieBuilder trie;
  std::vector<std::pair<std::string, LexPayload>> added;

  for (const LexEntry& entry : entries) {
    if (entry.paradigm.empty()) {
      LexPayload payload{entry.lemma, entry.category, entry.inherent};
      trie.add(entry.lemma, payload);
      added.emplace_back(entry.lemma, std::move(payload));
      continue;
    }
    const Paradigm* p = library.find(entry.paradigm);
    if (!p)
      throw error("entry '" + format_dic_line(entry) + "' names unknown paradigm " +
                  entry.paradigm);
    for (auto& [surface, features] : inflect(entry, *p)) {
      LexPayload payload{entry.lemma, entry.category, features};
      trie.add(surface, payload);
      added.emplace_back(surface, std::move(payload));
    }
  }

  // case-folded aliases so capitalized tokens can still be matched
  for (const auto& [surface, payload] : added) {
    std::string folded = fold_case(surface);
    if (folded != surface) trie.add(folded, payload);
  }

  CompiledLexicon lex;
  lex.automaton_ = trie.freeze(minimize);
  return lex;
}

std::vector<LexPayload> CompiledLexicon::lookup(std::string_view surface) const {
  std::uint32_t set = automaton_.accept(surface);
  if (set == kNoPayload) {
    std::string folded = fold_case(surface);
    if (folded != surface) set = automaton_.accept(folded);
  }
  if (set == kNoPayload) return {};
  std::vector<LexPayload> out;
  for (std::uint32_t id : automaton_.payloads().set(set))
    out.push_back(automaton_.payloads().entry(id));
  return out;
}

bool CompiledLexicon::accepts(std::string_view surface) const {
  if (automaton_.accept(surface) != kNoPayload) return true;
  std::string folded = fold_case(surface);
  return folded != surface && automaton_.accept(folded) != kNoPayload;
}

void CompiledLexicon::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write lexicon file: " + path);
  save(out);
}

CompiledLexicon CompiledLexicon::load(std::istream& in) {
  CompiledLexicon lex;
  lex.automaton_ = LexAutomaton::load(in);
  return lex;
}

CompiledLexicon CompiledLexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read lexicon file: " + path);
  return load(in);
}

std::vector<std::string> flx_listing(const LexEntry& entry, const ParadigmLibrary& library) {
  std::vector<std::string> lines;
  if (entry.paradigm.empty()) {
    lines.push_back(entry.lemma + "," + entry.lemma + "," + entry.category +
                    entry.inherent.to_string());
    return lines;
  }
  const Paradigm& p = library.at(entry.paradigm);
  for (auto& [surface, features] : inflect(entry, p)) {
    lines.push_back(surface + "," + entry.lemma + "," + entry.category +
                    "+FLX=" + p.name + features.to_string());
  }
  return lines;
}

void write_flx(const std::vector<LexEntry>& entries, const ParadigmLibrary& library,
               std::ostream& out) {
  for (const LexEntry& entry : entries)
    for (const std::string& line : flx_listing(entry, library)) out << line << '\n';
}

}  // namespace shqip
