#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "snlu/dataset.hpp"
#include "snlu/gazetteer.hpp"
#include "snlu/rng.hpp"
#include "snlu/rules.hpp"

namespace snlu {

struct NoiseRates {
  double typo = 0.05;          // per context token
  double article_drop = 0.25;  // per a/an/the
  double word_swap = 0.02;     // per adjacent context pair
  double filler = 0.15;        // chance of a greeting/closing around the query

  void validate() const;
};

/// Generator settings. The default sizes give a 10980/2353/2354 split.
struct GenSpec {
  std::uint64_t seed = 7;
  NoiseRates noise;
  /// Entity-typo mode: probability that an entity occurrence gets one typo
  /// in its surface form. Zero keeps every entity an exact gazetteer phrase.
  double entity_typo_rate = 0.0;
  std::size_t train_size = 10980;
  std::size_t validation_size = 2353;
  std::size_t test_size = 2354;

  std::size_t total() const { return train_size + validation_size + test_size; }
  void validate() const;
};

/// One template token. Entities are single tokens holding the whole surface
/// phrase; `glue_left` renders without a preceding space.
struct NoisyToken {
  std::string text;
  bool is_entity = false;
  bool glue_left = false;
  int entity_type = -1;
};

/// One typo: an adjacent swap of two distinct letters or a single letter
/// deletion. Words without a usable letter pair come back unchanged.
std::string apply_typo(const std::string& word, Rng& rng);

/// Fillers, typos, article drops and adjacent word swaps on non-entity
/// tokens only.
std::vector<NoisyToken> inject_noise(std::vector<NoisyToken> tokens, const NoiseRates& rates, Rng& rng);

/// Builds a labeled example from tokens, recording entity character spans.
LabeledExample render_example(const std::vector<NoisyToken>& tokens, int category, int subcategory, std::size_t id);

Taxonomy default_taxonomy();
EntityGroups default_groups(const Taxonomy& taxonomy);
std::vector<Rule> default_rules(const Taxonomy& taxonomy);
/// Entity values per type (display surface forms), indexed by entity type id.
const std::vector<std::vector<std::string>>& default_lexicons();
/// Sentence templates per subcategory id; slots are written `{type}`.
const std::vector<std::vector<std::string>>& default_templates();

struct GeneratedCorpus {
  Dataset dataset;
  Gazetteer gazetteer;
  EntityGroups groups;
  std::vector<Rule> rules;
};

/// Deterministic per seed. Examples are spread evenly over subcategories and
/// shuffled; the gazetteer holds every lexicon value.
GeneratedCorpus generate(const GenSpec& spec);

/// Writes dataset.jsonl, gazetteer.tsv, taxonomy.json and rules.json.
void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir);

}  // namespace snlu
