#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shqip/features.hpp"

namespace shqip {

// One line of the dictionary: lemma,CATEGORY+FLX=Name+feat+feat.
// Lemmas may contain spaces, hyphens and apostrophes; paradigm is empty for
// invariant words (adverbs, prepositions, conjunctions).
struct LexEntry {
  std::string lemma;
  std::string category;
  std::string paradigm;
  FeatureSet inherent;
};

LexEntry parse_dic_line(std::string_view line);
std::string format_dic_line(const LexEntry& entry);

// Parses a whole .dic text; '#' comments and blank lines are skipped.
std::vector<LexEntry> parse_dic(std::string_view text);
std::vector<LexEntry> load_dic_file(const std::string& path);

}  // namespace shqip
