#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shqip/lexicon.hpp"
#include "shqip/morphogrammar.hpp"
#include "shqip/syntax.hpp"

namespace shqip {

// Everything the annotation pipeline needs, loaded once and shared.
struct AnalyzerResources {
  CompiledLexicon lexicon;
  NumeralLexicon numerals = NumeralLexicon::defaults();
  AffixTable affixes = AffixTable::defaults();
  std::vector<std::string> clitics = {"e", "i"};
};

// Tokens are maximal runs of letters; apostrophes and hyphens join a token
// when flanked by letters (Mit'hat, projekt-ligj). Sentences end at . ? !
std::vector<Token> tokenize(std::string_view text);

struct Annotation {
  std::vector<AnnotatedToken> tokens;
  std::vector<TokenSpan> spans;
};

// Per-token readings (lexicon first, then the dynamic recognizers as
// fallback, numeric compounds always), then the syntactic cascade.
Annotation annotate(std::string_view text, const AnalyzerResources& res);

// The token-level stage alone.
AnnotatedToken annotate_token(const Token& token, const AnalyzerResources& res);

}  // namespace shqip
