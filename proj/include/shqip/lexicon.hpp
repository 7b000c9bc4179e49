#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shqip/automaton.hpp"
#include "shqip/lexentry.hpp"
#include "shqip/paradigm.hpp"

namespace shqip {

// A parsed printed-dictionary line. Category is detected from format cues;
// lines the importer cannot decide go to the problem page, they never fail.
struct PrintedEntry {
  enum class Kind { noun, verb, nonactive_verb, adjective, invariant, problem };

  struct Noun {
    std::string radical;
    std::string t1;  // lemma = radical + t1
    std::string t2;  // definite singular termination
    std::string gender;  // "m" or "f"
    std::string t3;  // plural indefinite termination
    std::string t4;  // plural definite termination
    bool has_plural = false;
  };
  struct Verb {
    std::string form1;       // lemma (1sg present)
    std::string form2;       // aorist, without the "u" of non-active entries
    std::string participle;
    bool non_active = false;
  };
  struct Adjective {
    std::string form;
    bool articulated = false;  // cited with (i,e)
    bool e_feminine = false;   // cited as form(e)
  };
  struct Invariant {
    std::string lemma;
    // one (category, features) per reading: "afër adv. and prep. + abl."
    std::vector<std::pair<std::string, FeatureSet>> readings;
  };

  std::string raw;
  Kind kind = Kind::problem;
  std::string problem;  // reason when kind == problem
  std::string gloss;
  std::variant<std::monostate, Noun, Verb, Adjective, Invariant> parsed;

  bool ok() const { return kind != Kind::problem; }
};

PrintedEntry parse_printed(std::string_view line);

struct AssignResult {
  std::vector<LexEntry> entries;   // empty on problem
  std::string problem;             // reason when no paradigm fits
  std::vector<std::string> notes;  // ambiguity logging
};

// Picks the paradigms whose productions map the lemma to the printed
// citation forms. Ambiguity resolves to the lowest paradigm name (logged).
AssignResult assign_paradigm(const PrintedEntry& pe, const ParadigmLibrary& library);

// The minimized automaton over every flexed surface plus its payloads.
class CompiledLexicon {
 public:
  CompiledLexicon() = default;

  static CompiledLexicon compile(const std::vector<LexEntry>& entries,
                                 const ParadigmLibrary& library,
                                 bool minimize = true);

  // Exact match first, case-folded retry when that fails.
  std::vector<LexPayload> lookup(std::string_view surface) const;
  bool accepts(std::string_view surface) const;

  const AutomatonStats& stats() const { return automaton_.stats(); }
  const LexAutomaton& automaton() const { return automaton_; }

  void save(std::ostream& out) const { automaton_.save(out); }
  void save_file(const std::string& path) const;
  static CompiledLexicon load(std::istream& in);
  static CompiledLexicon load_file(const std::string& path);

 private:
  LexAutomaton automaton_;
};

// The .flx listing: "surface,lemma,CAT+FLX=Name+feat+..." lines, one per
// flexed form, in entry and production order.
std::vector<std::string> flx_listing(const LexEntry& entry, const ParadigmLibrary& library);
void write_flx(const std::vector<LexEntry>& entries, const ParadigmLibrary& library,
               std::ostream& out);

}  // namespace shqip
