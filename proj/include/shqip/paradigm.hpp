#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shqip/features.hpp"
#include "shqip/lexentry.hpp"

namespace shqip {

// One inflection command. The editor keeps a cursor inside the word buffer:
// insert(t) places t right after the cursor without advancing it, L/R move
// the cursor, B deletes before the cursor. A unit is a character in char
// mode and a whole letter (digraph-aware) in grapheme mode.
struct Command {
  enum class Kind { insert, move_left, move_right, erase_before };
  Kind kind = Kind::insert;
  std::string text;  // insert only
  int count = 1;     // 1 or 2 for L/R/B

  static Command insert(std::string_view t) { return {Kind::insert, std::string(t), 1}; }
  static Command left(int k = 1) { return {Kind::move_left, "", k}; }
  static Command right(int k = 1) { return {Kind::move_right, "", k}; }
  static Command erase(int k = 1) { return {Kind::erase_before, "", k}; }
};

bool operator==(const Command& a, const Command& b);

struct Production {
  std::vector<Command> commands;
  FeatureSet features;
  std::string particle_prefix;  // "i ", "e ", "të ", "së ", "u ", "do të "
};

enum class ParadigmMode { character, grapheme };

// A named inflection program: the textual form of a flexion graph.
struct Paradigm {
  std::string name;
  std::string category;
  ParadigmMode mode = ParadigmMode::character;
  std::vector<Production> productions;
};

class paradigm_error : public error {
 public:
  using error::error;
};

// Commands written as literals and <B> <B2> <L> <L2> <R> <R2>; <E> is the
// explicit empty sequence.
std::vector<Command> parse_commands(std::string_view text);
std::string format_commands(std::span<const Command> commands);

// One paradigm: "PARADIGM name CATEGORY mode" header, then one production
// per line ("commands TAB +feat+feat", optional leading particle in quotes).
Paradigm parse_paradigm(std::string_view text);

// A .par file may hold several paradigms.
std::vector<Paradigm> parse_paradigm_file(std::string_view text,
                                          std::string_view filename = "");

class ParadigmLibrary {
 public:
  void add(Paradigm p);
  void load_file(const std::string& path);
  void load_directory(const std::string& dir);  // *.par, sorted by name

  const Paradigm* find(std::string_view name) const;
  const Paradigm& at(std::string_view name) const;
  const std::vector<Paradigm>& all() const { return paradigms_; }
  std::size_t size() const { return paradigms_.size(); }

 private:
  std::vector<Paradigm> paradigms_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

// Executes a command sequence on the lemma. Throws paradigm_error naming the
// lemma, context and command index on cursor underflow/overflow.
std::string apply(std::span<const Command> commands, std::string_view lemma,
                  ParadigmMode mode, std::string_view context = "");

// All flexed surfaces of an entry, one per production, in production order.
// Surface = particle prefix + edited lemma; features = inherent + production.
std::vector<std::pair<std::string, FeatureSet>> inflect(const LexEntry& entry,
                                                        const Paradigm& paradigm);

// Folds a single-character paradigm and its double-character twin (same
// commands, with k=2 where the double letter is touched) into one
// grapheme-mode paradigm. Empty when the pair is not of that shape.
std::optional<Paradigm> collapse_char_pairs(const Paradigm& single_char,
                                            const Paradigm& double_char);

}  // namespace shqip
