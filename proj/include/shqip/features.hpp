#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shqip/alphabet.hpp"

namespace shqip {

// Small ordered set of feature tokens (+m+s+emer+shquar). Insertion order is
// preserved so listings print exactly as authored; equality is set equality.
class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(std::initializer_list<std::string_view> values);

  // Parses "+m+s" (a leading value without '+' is accepted too).
  static FeatureSet parse(std::string_view text);

  bool add(std::string_view value);  // false when already present
  bool contains(std::string_view value) const;
  FeatureSet merged(const FeatureSet& other) const;

  const std::vector<std::string>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  std::string to_string() const;  // "+m+s", empty string for no features

  friend bool operator==(const FeatureSet& a, const FeatureSet& b);
  friend bool operator!=(const FeatureSet& a, const FeatureSet& b) { return !(a == b); }

 private:
  std::vector<std::string> values_;
};

struct Attribute {
  std::string name;      // e.g. V_Pers
  std::string category;  // e.g. V
  std::vector<std::string> values;
};

class schema_error : public error {
 public:
  schema_error(const std::string& msg, int line)
      : error("features line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Registry of grammatical categories and feature attributes, loaded from a
// properties-definition text (Name = v1 + v2 + ...; lines, # comments).
class FeatureSchema {
 public:
  FeatureSchema();

  static FeatureSchema load(std::string_view text,
                            std::vector<std::string>* warnings = nullptr);

  // Compiled-in schema with every attribute of the properties table.
  static const FeatureSchema& builtin();

  std::string serialize() const;

  // Empty result iff fs respects per-attribute exclusivity and every value is
  // known for the category or is a registered free tag. Violations are data.
  std::vector<std::string> validate(const FeatureSet& fs,
                                    std::string_view category) const;

  const Attribute* attribute(std::string_view name) const;
  const std::vector<Attribute>& attributes() const { return attributes_; }

  bool has_category(std::string_view category) const;
  const std::set<std::string>& categories() const { return categories_; }
  void register_category(std::string_view category);

  bool is_free_tag(std::string_view tag) const;
  void register_free_tag(std::string_view tag);

 private:
  void add_attribute(Attribute attr, int line, std::vector<std::string>* warnings);

  std::vector<Attribute> attributes_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::set<std::string> categories_;
  std::set<std::string, std::less<>> free_tags_;
};

// The properties-definition text the builtin schema is built from.
std::string_view builtin_features_text();

}  // namespace shqip
