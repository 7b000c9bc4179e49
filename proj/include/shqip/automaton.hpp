#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shqip/analysis.hpp"
#include "shqip/features.hpp"

namespace shqip {

// What an accepted surface maps to.
struct LexPayload {
  std::string lemma;
  std::string category;
  FeatureSet features;
};

std::string payload_key(const LexPayload& p);

// Deduplicated payload entries plus deduplicated payload sets; accepting
// states hold an index into the set table.
class PayloadStore {
 public:
  std::uint32_t intern_entry(const LexPayload& p);
  std::uint32_t intern_set(std::vector<std::uint32_t> sorted_ids);

  const LexPayload& entry(std::uint32_t id) const { return entries_[id]; }
  const std::vector<std::uint32_t>& set(std::uint32_t id) const { return sets_[id]; }
  std::size_t entry_count() const { return entries_.size(); }
  std::size_t set_count() const { return sets_.size(); }

 private:
  std::vector<LexPayload> entries_;
  std::unordered_map<std::string, std::uint32_t> entry_index_;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::unordered_map<std::string, std::uint32_t> set_index_;
};

inline constexpr std::uint32_t kNoPayload = 0xFFFFFFFFu;

struct AutomatonStats {
  std::uint32_t states = 0;
  std::uint32_t transitions = 0;
  std::uint32_t forms = 0;  // accepted surfaces
};

// Deterministic acyclic word automaton over raw bytes. Built as a trie, then
// minimized bottom-up with payload-aware state signatures; states are
// renumbered breadth-first so equal inputs serialize identically.
class LexAutomaton {
 public:
  struct Arc {
    std::uint8_t label;
    std::uint32_t target;
  };
  struct State {
    std::uint32_t payload_set = kNoPayload;
    std::uint32_t first_arc = 0;
    std::uint16_t arc_count = 0;
  };

  // Returns the payload-set id for an accepted surface, kNoPayload otherwise.
  std::uint32_t accept(std::string_view surface) const;

  const PayloadStore& payloads() const { return payloads_; }
  const AutomatonStats& stats() const { return stats_; }

  // Visits every accepted surface with its payload-set id (acyclic walk).
  void for_each_surface(
      const std::function<void(const std::string&, std::uint32_t)>& fn) const;

  void save(std::ostream& out) const;
  static LexAutomaton load(std::istream& in);

 private:
  friend class TrieBuilder;
  std::vector<State> states_;  // 0 is the root
  std::vector<Arc> arcs_;      // per state, contiguous and label-sorted
  PayloadStore payloads_;
  AutomatonStats stats_;
};

// Mutable trie used during compilation; also serves as the unminimized
// reference the minimized automaton is checked against.
class TrieBuilder {
 public:
  TrieBuilder();

  void add(std::string_view surface, const LexPayload& payload);

  std::vector<const LexPayload*> lookup(std::string_view surface) const;
  std::size_t state_count() const { return nodes_.size(); }
  std::size_t surface_count() const { return forms_; }

  // freeze(true) minimizes; freeze(false) emits the plain trie.
  LexAutomaton freeze(bool minimize = true) const;

 private:
  struct Node {
    std::vector<std::pair<std::uint8_t, std::uint32_t>> arcs;  // label-sorted
    std::vector<std::uint32_t> payload_ids;                    // sorted unique
  };
  std::uint32_t child(std::uint32_t node, std::uint8_t label) const;

  std::vector<Node> nodes_;
  PayloadStore payloads_;
  std::size_t forms_ = 0;
};

}  // namespace shqip
