#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shqip/analysis.hpp"
#include "shqip/lexicon.hpp"
#include "shqip/morphogrammar.hpp"

namespace shqip {

struct Token {
  std::string surface;
  std::size_t offset = 0;       // character position in the source text
  std::size_t byte_offset = 0;
  std::size_t byte_size = 0;
  std::size_t sentence = 0;
};

struct AnnotatedToken {
  Token token;
  std::vector<Analysis> analyses;  // ranked; never empty after annotation
  std::vector<std::pair<Analysis, Analysis>> clitic_pairs;
  int span_id = -1;  // index into the span list, -1 when unclaimed
};

// A contiguous multi-token (or single-token) grammar match. Spans never
// partially overlap: grammars run longest-match, left to right.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // token index range [begin, end)
  std::string rule;
  std::vector<Analysis> analyses;
};

struct GrammarResources {
  const CompiledLexicon* lexicon = nullptr;
  const NumeralLexicon* numerals = nullptr;
  std::vector<std::string> clitics = {"e", "i"};
  std::size_t max_join = 5;  // upper bound on joined multiword length
};

// Token sequences whose space-joined concatenation the lexicon accepts
// (të agimit, së afërmi, do të laj). Longest match wins.
std::optional<TokenSpan> join_particle_noun(std::span<const AnnotatedToken> sentence,
                                            std::size_t at, const GrammarResources& res);

// do të [clitic] V -> future/conditional, të [clitic] V -> subjunctive,
// u V(active aorist) -> non-active aorist.
std::optional<TokenSpan> match_particle_tense(std::span<const AnnotatedToken> sentence,
                                              std::size_t at, const GrammarResources& res);

// particle i/e/të/së + ordinal body -> adjective with value and gender.
std::optional<TokenSpan> match_full_ordinal(std::span<const AnnotatedToken> sentence,
                                            std::size_t at, const GrammarResources& res);

// NUM ("e" NUM)* with strictly decreasing values; value = sum.
std::optional<TokenSpan> match_compound_cardinal(std::span<const AnnotatedToken> sentence,
                                                 std::size_t at, const GrammarResources& res);

// W-W with identical halves: an onomatopoeia/adverb/adjective proposal
// tagged hypo_n, to be validated by hand.
std::optional<TokenSpan> match_xx_word(std::span<const AnnotatedToken> sentence,
                                       std::size_t at, std::string_view text,
                                       const GrammarResources& res);

// Fixed cascade: join_particle_noun, match_particle_tense, match_full_ordinal,
// match_compound_cardinal, match_xx_word. Claimed tokens are skipped, so a
// second run is a fixpoint. Spans never cross sentence boundaries.
std::vector<TokenSpan> run_cascade(std::vector<AnnotatedToken>& tokens,
                                   std::string_view text, const GrammarResources& res);

}  // namespace shqip
