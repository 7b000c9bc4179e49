#include "shqip/automaton.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>

namespace shqip {

std::string payload_key(const LexPayload& p) {
  return p.lemma + "\x1f" + p.category + "\x1f" + p.features.to_string();
}

std::uint32_t PayloadStore::intern_entry(const LexPayload& p) {
  std::string key = payload_key(p);
  auto it = entry_index_.find(key);
  if (it != entry_index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(p);
  entry_index_.emplace(std::move(key), id);
  return id;
}

std::uint32_t PayloadStore::intern_set(std::vector<std::uint32_t> sorted_ids) {
  std::string key;
  for (std::uint32_t id : sorted_ids) {
    key += std::to_string(id);
    key += ',';
  }
  auto it = set_index_.find(key);
  if (it != set_index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(sets_.size());
  sets_.push_back(std::move(sorted_ids));
  set_index_.emplace(std::move(key), id);
  return id;
}

TrieBuilder::TrieBuilder() { nodes_.emplace_back(); }

std::uint32_t TrieBuilder::child(std::uint32_t node, std::uint8_t label) const {
  const auto& arcs = nodes_[node].arcs;
  auto it = std::lower_bound(arcs.begin(), arcs.end(), label,
                             [](const auto& arc, std::uint8_t l) { return arc.first < l; });
  if (it != arcs.end() && it->first == label) return it->second;
  return 0;  // root is never a child
}

void TrieBuilder::add(std::string_view surface, const LexPayload& payload) {
  std::uint32_t node = 0;
  for (char ch : surface) {
    auto label = static_cast<std::uint8_t>(ch);
    std::uint32_t next = child(node, label);
    if (next == 0) {
      next = static_cast<std::uint32_t>(nodes_.size());
      auto& arcs = nodes_[node].arcs;
      auto it = std::lower_bound(arcs.begin(), arcs.end(), label,
                                 [](const auto& arc, std::uint8_t l) { return arc.first < l; });
      arcs.insert(it, {label, next});
      nodes_.emplace_back();
    }
    node = next;
  }
  std::uint32_t id = payloads_.intern_entry(payload);
  auto& ids = nodes_[node].payload_ids;
  if (ids.empty()) ++forms_;
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) ids.insert(it, id);
}

std::vector<const LexPayload*> TrieBuilder::lookup(std::string_view surface) const {
  std::uint32_t node = 0;
  for (char ch : surface) {
    node = child(node, static_cast<std::uint8_t>(ch));
    if (node == 0) return {};
  }
  std::vector<const LexPayload*> out;
  for (std::uint32_t id : nodes_[node].payload_ids) out.push_back(&payloads_.entry(id));
  return out;
}

LexAutomaton TrieBuilder::freeze(bool minimize) const {
  LexAutomaton automaton;
  automaton.payloads_ = payloads_;

  // per trie node: payload-set id (sets interned now, in node order)
  std::vector<std::uint32_t> node_pset(nodes_.size(), kNoPayload);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].payload_ids.empty())
      node_pset[i] = automaton.payloads_.intern_set(nodes_[i].payload_ids);
  }

  // map every trie node to a representative id
  std::vector<std::uint32_t> repr(nodes_.size());
  std::uint32_t class_count = 0;
  if (minimize) {
    // bottom-up: children are classified before parents (post-order)
    std::unordered_map<std::string, std::uint32_t> registry;
    std::vector<std::uint32_t> order;
    order.reserve(nodes_.size());
    {
      std::vector<std::pair<std::uint32_t, bool>> stack{{0, false}};
      while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
          order.push_back(node);
          continue;
        }
        stack.push_back({node, true});
        for (const auto& [label, target] : nodes_[node].arcs)
          stack.push_back({target, false});
      }
    }
    for (std::uint32_t node : order) {
      std::string sig = std::to_string(node_pset[node]);
      for (const auto& [label, target] : nodes_[node].arcs) {
        sig += '|';
        sig += std::to_string(label);
        sig += ':';
        sig += std::to_string(repr[target]);
      }
      auto [it, fresh] = registry.emplace(std::move(sig), class_count);
      if (fresh) ++class_count;
      repr[node] = it->second;
    }
  } else {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      repr[i] = static_cast<std::uint32_t>(i);
    class_count = static_cast<std::uint32_t>(nodes_.size());
  }

  // renumber classes breadth-first from the root for a canonical layout
  std::vector<std::uint32_t> class_node(class_count, 0);   // one trie node per class
  std::vector<char> class_seen(class_count, 0);
  for (std::uint32_t node = 0; node < nodes_.size(); ++node) {
    if (!class_seen[repr[node]]) {
      class_seen[repr[node]] = 1;
      class_node[repr[node]] = node;
    }
  }
  std::vector<std::uint32_t> new_id(class_count, kNoPayload);
  std::deque<std::uint32_t> queue{repr[0]};
  new_id[repr[0]] = 0;
  std::uint32_t next_id = 1;
  std::vector<std::uint32_t> bfs_order{repr[0]};
  while (!queue.empty()) {
    std::uint32_t cls = queue.front();
    queue.pop_front();
    for (const auto& [label, target] : nodes_[class_node[cls]].arcs) {
      std::uint32_t tcls = repr[target];
      if (new_id[tcls] == kNoPayload) {
        new_id[tcls] = next_id++;
        bfs_order.push_back(tcls);
        queue.push_back(tcls);
      }
    }
  }

  automaton.states_.resize(next_id);
  for (std::uint32_t cls : bfs_order) {
    const Node& node = nodes_[class_node[cls]];
    LexAutomaton::State& st = automaton.states_[new_id[cls]];
    st.payload_set = node_pset[class_node[cls]];
    st.first_arc = static_cast<std::uint32_t>(automaton.arcs_.size());
    st.arc_count = static_cast<std::uint16_t>(node.arcs.size());
    for (const auto& [label, target] : node.arcs)
      automaton.arcs_.push_back({label, new_id[repr[target]]});
  }

  automaton.stats_.states = static_cast<std::uint32_t>(automaton.states_.size());
  automaton.stats_.transitions = static_cast<std::uint32_t>(automaton.arcs_.size());
  automaton.stats_.forms = static_cast<std::uint32_t>(forms_);
  return automaton;
}

std::uint32_t LexAutomaton::accept(std::string_view surface) const {
  if (states_.empty()) return kNoPayload;
  std::uint32_t state = 0;
  for (char ch : surface) {
    auto label = static_cast<std::uint8_t>(ch);
    const State& st = states_[state];
    const Arc* begin = arcs_.data() + st.first_arc;
    const Arc* end = begin + st.arc_count;
    const Arc* it = std::lower_bound(begin, end, label,
                                     [](const Arc& a, std::uint8_t l) { return a.label < l; });
    if (it == end || it->label != label) return kNoPayload;
    state = it->target;
  }
  return states_[state].payload_set;
}

void LexAutomaton::for_each_surface(
    const std::function<void(const std::string&, std::uint32_t)>& fn) const {
  if (states_.empty()) return;
  std::string prefix;
  // resolves recursion depth equal to the longest surface; fine for words
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t state) {
    const State& st = states_[state];
    if (st.payload_set != kNoPayload) fn(prefix, st.payload_set);
    for (std::uint16_t i = 0; i < st.arc_count; ++i) {
      const Arc& arc = arcs_[st.first_arc + i];
      prefix.push_back(static_cast<char>(arc.label));
      walk(arc.target);
      prefix.pop_back();
    }
  };
  walk(0);
}

namespace {

void put_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF), static_cast<char>(v >> 24)};
  out.write(b, 4);
}

std::uint16_t get_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | b[1] << 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

constexpr char kMagic[5] = {'S', 'Q', 'M', 'F', '1'};

}  // namespace

void LexAutomaton::save(std::ostream& out) const {
  // string table interned in walk order: entries by id, lemma then category
  // then features
  std::string strings;
  std::unordered_map<std::string, std::uint32_t> string_index;
  auto intern = [&](const std::string& s) {
    auto it = string_index.find(s);
    if (it != string_index.end()) return it->second;
    auto off = static_cast<std::uint32_t>(strings.size());
    strings += s;
    strings.push_back('\0');
    string_index.emplace(s, off);
    return off;
  };

  struct EntryRec {
    std::uint32_t lemma_off, cat_off, first_fref;
    std::uint16_t nfeats;
  };
  std::vector<EntryRec> entry_recs;
  std::vector<std::uint32_t> frefs;
  for (std::size_t i = 0; i < payloads_.entry_count(); ++i) {
    const LexPayload& p = payloads_.entry(static_cast<std::uint32_t>(i));
    EntryRec rec;
    rec.lemma_off = intern(p.lemma);
    rec.cat_off = intern(p.category);
    rec.first_fref = static_cast<std::uint32_t>(frefs.size());
    rec.nfeats = static_cast<std::uint16_t>(p.features.size());
    for (const std::string& f : p.features.values()) frefs.push_back(intern(f));
    entry_recs.push_back(rec);
  }

  std::vector<std::pair<std::uint32_t, std::uint16_t>> set_recs;
  std::vector<std::uint32_t> prefs;
  for (std::size_t i = 0; i < payloads_.set_count(); ++i) {
    const auto& set = payloads_.set(static_cast<std::uint32_t>(i));
    set_recs.emplace_back(static_cast<std::uint32_t>(prefs.size()),
                          static_cast<std::uint16_t>(set.size()));
    prefs.insert(prefs.end(), set.begin(), set.end());
  }

  out.write(kMagic, sizeof(kMagic));
  put_u32(out, static_cast<std::uint32_t>(states_.size()));
  put_u32(out, static_cast<std::uint32_t>(arcs_.size()));
  put_u32(out, static_cast<std::uint32_t>(set_recs.size()));
  put_u32(out, static_cast<std::uint32_t>(prefs.size()));
  put_u32(out, static_cast<std::uint32_t>(entry_recs.size()));
  put_u32(out, static_cast<std::uint32_t>(frefs.size()));
  put_u32(out, static_cast<std::uint32_t>(strings.size()));
  put_u32(out, stats_.forms);

  for (const State& st : states_) {
    put_u32(out, st.payload_set);
    put_u32(out, st.first_arc);
    put_u16(out, st.arc_count);
  }
  for (const Arc& arc : arcs_) {
    out.put(static_cast<char>(arc.label));
    put_u32(out, arc.target);
  }
  for (const auto& [first, count] : set_recs) {
    put_u32(out, first);
    put_u16(out, count);
  }
  for (std::uint32_t id : prefs) put_u32(out, id);
  for (const EntryRec& rec : entry_recs) {
    put_u32(out, rec.lemma_off);
    put_u32(out, rec.cat_off);
    put_u32(out, rec.first_fref);
    put_u16(out, rec.nfeats);
  }
  for (std::uint32_t off : frefs) put_u32(out, off);
  out.write(strings.data(), static_cast<std::streamsize>(strings.size()));
}

LexAutomaton LexAutomaton::load(std::istream& in) {
  char magic[5];
  in.read(magic, sizeof(magic));
  if (!in || !std::equal(magic, magic + 5, kMagic))
    throw error("bad lexicon file: wrong magic");

  std::uint32_t n_states = get_u32(in);
  std::uint32_t n_arcs = get_u32(in);
  std::uint32_t n_sets = get_u32(in);
  std::uint32_t n_prefs = get_u32(in);
  std::uint32_t n_entries = get_u32(in);
  std::uint32_t n_frefs = get_u32(in);
  std::uint32_t str_size = get_u32(in);
  std::uint32_t forms = get_u32(in);

  LexAutomaton automaton;
  automaton.states_.resize(n_states);
  for (State& st : automaton.states_) {
    st.payload_set = get_u32(in);
    st.first_arc = get_u32(in);
    st.arc_count = get_u16(in);
  }
  automaton.arcs_.resize(n_arcs);
  for (Arc& arc : automaton.arcs_) {
    arc.label = static_cast<std::uint8_t>(in.get());
    arc.target = get_u32(in);
    if (arc.target >= n_states) throw error("bad lexicon file: arc out of range");
  }
  std::vector<std::pair<std::uint32_t, std::uint16_t>> set_recs(n_sets);
  for (auto& [first, count] : set_recs) {
    first = get_u32(in);
    count = get_u16(in);
  }
  std::vector<std::uint32_t> prefs(n_prefs);
  for (std::uint32_t& id : prefs) id = get_u32(in);
  struct EntryRec {
    std::uint32_t lemma_off, cat_off, first_fref;
    std::uint16_t nfeats;
  };
  std::vector<EntryRec> entry_recs(n_entries);
  for (EntryRec& rec : entry_recs) {
    rec.lemma_off = get_u32(in);
    rec.cat_off = get_u32(in);
    rec.first_fref = get_u32(in);
    rec.nfeats = get_u16(in);
  }
  std::vector<std::uint32_t> frefs(n_frefs);
  for (std::uint32_t& off : frefs) off = get_u32(in);
  std::string strings(str_size, '\0');
  in.read(strings.data(), str_size);
  if (!in) throw error("bad lexicon file: truncated");

  auto str_at = [&](std::uint32_t off) {
    if (off >= strings.size()) throw error("bad lexicon file: string offset");
    return std::string(strings.c_str() + off);
  };
  for (const EntryRec& rec : entry_recs) {
    LexPayload p;
    p.lemma = str_at(rec.lemma_off);
    p.category = str_at(rec.cat_off);
    for (std::uint16_t i = 0; i < rec.nfeats; ++i)
      p.features.add(str_at(frefs.at(rec.first_fref + i)));
    automaton.payloads_.intern_entry(p);
  }
  for (const auto& [first, count] : set_recs) {
    std::vector<std::uint32_t> ids(prefs.begin() + first, prefs.begin() + first + count);
    automaton.payloads_.intern_set(std::move(ids));
  }

  automaton.stats_.states = n_states;
  automaton.stats_.transitions = n_arcs;
  automaton.stats_.forms = forms;
  return automaton;
}

}  // namespace shqip
