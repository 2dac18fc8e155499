#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "snlu/text.hpp"

namespace snlu {

/// Closed intent inventory. Category and subcategory ids are positions in
/// file order; subcategory ids are global (unique across categories).
class Taxonomy {
 public:
  Taxonomy() = default;

  /// Parses `{"categories": {name: [subcategory names]}, "entity_types": [names]}`
  /// preserving key order. Throws TaxonomyError on duplicates.
  static Taxonomy from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;

  void add_category(std::string name, const std::vector<std::string>& subcategories);
  void add_entity_type(std::string name);

  std::size_t category_count() const { return categories_.size(); }
  std::size_t subcategory_count() const { return subcategories_.size(); }
  std::size_t entity_type_count() const { return entity_types_.size(); }

  const std::string& category_name(int id) const { return categories_.at(id); }
  const std::string& subcategory_name(int id) const { return subcategories_.at(id); }
  const std::string& entity_type_name(int id) const { return entity_types_.at(id); }
  const std::vector<std::string>& entity_types() const { return entity_types_; }
  const std::vector<std::string>& categories() const { return categories_; }

  /// Category that owns a subcategory.
  int parent(int subcategory) const { return parent_.at(subcategory); }
  std::vector<int> subcategories_of(int category) const;

  /// -1 when absent.
  int find_category(std::string_view name) const;
  int find_subcategory(std::string_view name) const;
  int find_entity_type(std::string_view name) const;

  bool operator==(const Taxonomy&) const = default;

 private:
  std::vector<std::string> categories_;
  std::vector<std::string> subcategories_;
  std::vector<int> parent_;
  std::vector<std::string> entity_types_;
};

Taxonomy load_taxonomy(const std::filesystem::path& path);

/// Token → index map; index 0 is PAD and 1 is UNK.
class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;

  Vocab();

  int add(const std::string& token);
  /// UNK for unknown tokens.
  int lookup(const std::string& token) const;
  bool contains(const std::string& token) const { return index_.contains(token); }
  const std::string& token(int id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  static Vocab from_tokens(const std::vector<std::string>& ordered);

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> tokens_;
};

struct EntitySpan {
  CharSpan span;
  int type = 0;
  bool operator==(const EntitySpan&) const = default;
};

struct LabeledExample {
  std::size_t id = 0;  // zero-based line number in the source file
  RawQuery raw{"?"};
  int category = 0;
  int subcategory = 0;
  std::vector<EntitySpan> entities;
};

struct Dataset {
  std::vector<LabeledExample> examples;
  Taxonomy taxonomy;
  Vocab vocab;

  std::size_t size() const { return examples.size(); }
};

struct DatasetSplit {
  Dataset train;
  Dataset validation;
  Dataset test;
};

/// Validates an example against the taxonomy invariants. Throws ParseError
/// with the given line number.
void validate_example(const LabeledExample& ex, const Taxonomy& taxonomy, std::size_t line);

LabeledExample example_from_json(const nlohmann::json& j, const Taxonomy& taxonomy, std::size_t line);
nlohmann::json example_to_json(const LabeledExample& ex, const Taxonomy& taxonomy);

/// Loads JSONL. The returned vocab covers every token in the file;
/// split_dataset rebuilds it from the training part only.
Dataset load_dataset(const std::filesystem::path& path, const Taxonomy& taxonomy);
Dataset parse_dataset(std::string_view jsonl, const Taxonomy& taxonomy);

Vocab build_vocab(const std::vector<LabeledExample>& examples);

/// Deterministic 70/15/15 split, stratified by subcategory. Sizes are
/// floor(0.70 N), floor(0.15 N) and the remainder.
DatasetSplit split_dataset(const Dataset& d, std::uint64_t seed);

}  // namespace snlu
