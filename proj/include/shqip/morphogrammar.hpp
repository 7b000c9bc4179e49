#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shqip/analysis.hpp"
#include "shqip/lexicon.hpp"

namespace shqip {

struct CardinalParse {
  long value = 0;
  std::string last_atom;  // final numeral atom of the concatenation
};

// Numeral atoms and the concatenation grammar built over them: units combine
// with the ten/hundred multipliers and the teen infix, groups chain with an
// optional linking "e" and strictly decreasing rank (dyqindedy = 202).
class NumeralLexicon {
 public:
  static NumeralLexicon defaults();
  static NumeralLexicon load(std::string_view tab_text);
  static NumeralLexicon load_file(const std::string& path);

  // Value of a fully concatenated cardinal token; absent for non-numerals.
  std::optional<long> parse_cardinal(std::string_view token) const;
  std::optional<CardinalParse> parse_cardinal_full(std::string_view token) const;

  // Generation inverse of parse_cardinal, defined on 0..999.
  std::string render_cardinal(long n) const;

  // Ordinal bodies replace the final atom with its ordinal form
  // (pesë -> pestë, një -> njëhtë; several atoms are their own ordinal).
  std::optional<long> match_ordinal_body(std::string_view token) const;

  const std::map<std::string, long>& atoms() const { return atoms_; }

 private:
  long atom_value(std::string_view atom) const;
  bool parse_groups(std::string_view token, std::size_t pos, int max_rank,
                    long sum, bool after_link, CardinalParse& out) const;

  std::map<std::string, long> atoms_;  // plain value atoms
  std::string teen_infix_ = "mbëdhjetë";
  std::map<std::string, std::vector<std::string>> ordinal_bodies_;
};

// Standard subtractive Roman numerals, strict form only (1..3999).
std::optional<long> parse_roman(std::string_view token);
std::string render_roman(long n);

struct NumericSuffix {
  std::string suffix;
  std::vector<std::string> categories;
  FeatureSet features;
};

struct AffixTable {
  std::vector<std::string> prefixes;       // kept longest-first
  std::set<std::string> suffix_forms;      // the fob / fobi family
  std::vector<NumericSuffix> numeric_suffixes;

  static AffixTable defaults();
  void load_prefixes(std::string_view tab_text);       // affixes.tab
  void load_numeric_suffixes(std::string_view tab_text);  // numsuffix.tab
  void load_prefixes_file(const std::string& path);
  void load_numeric_suffixes_file(const std::string& path);

  const NumericSuffix* find_numeric(std::string_view suffix) const;
  void sort_prefixes();
};

// pesëdhjetëpesëvjeçar -> 55vjeçar, A+m. Inflected suffixes (fishoj
// conjugated) are resolved by analyzing the tail against the lexicon.
std::vector<Analysis> recognize_numeric_compound(std::string_view token,
                                                 const CompiledLexicon& lex,
                                                 const NumeralLexicon& numerals,
                                                 const AffixTable& affixes);

// prefix + inflected dictionary word: bashkëbisedimin -> bashkëbisedim N+...
std::vector<Analysis> recognize_affixed(std::string_view token,
                                        const CompiledLexicon& lex,
                                        const AffixTable& affixes);

// Ordinal-body token as an adjective analysis carrying its numeric value.
std::optional<Analysis> recognize_ordinal_body(std::string_view token,
                                               const NumeralLexicon& numerals);

// Imperative-with-clitic segmentations, validated against the lexicon's
// imperative forms: tregojeni -> (e,PRO) + (tregoj,V+IP+2+p).
std::vector<std::pair<Analysis, Analysis>> split_clitic_imperative(
    std::string_view token, const CompiledLexicon& lex,
    const std::vector<std::string>& clitics = {"e", "i"});

}  // namespace shqip
