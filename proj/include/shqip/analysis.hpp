#pragma once

#include <string>
#include <string_view>

#include "shqip/features.hpp"

namespace shqip {

enum class Provenance { lexicon, morphogrammar, syntax, unknown };

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::lexicon: return "lexicon";
    case Provenance::morphogrammar: return "morphogrammar";
    case Provenance::syntax: return "syntax";
    case Provenance::unknown: return "unknown";
  }
  return "unknown";
}

// One reading of a surface form.
struct Analysis {
  std::string surface;
  std::string lemma;
  std::string category;
  FeatureSet features;
  Provenance provenance = Provenance::unknown;
};

// "lemma,CAT+feat+feat" — the notation dictionaries and listings use.
inline std::string format_analysis(const Analysis& a) {
  return a.lemma + "," + a.category + a.features.to_string();
}

inline bool same_reading(const Analysis& a, const Analysis& b) {
  return a.lemma == b.lemma && a.category == b.category && a.features == b.features;
}

}  // namespace shqip
