#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "snlu/dataset.hpp"
#include "snlu/text.hpp"

namespace snlu {

/// Normalized similarity in [0,1]: one minus the Levenshtein distance over
/// the space-joined strings, divided by the longer length. Counts code points.
double similarity(const std::vector<std::string>& candidate, const std::vector<std::string>& phrase);
double similarity(std::u32string_view a, std::u32string_view b);

/// Plain two-row dynamic program.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Matching strictness of one NER stage.
struct Tier {
  int level = 1;
  double threshold = 1.0;
  bool allow_partial = false;
  /// Windows shorter than this many code points only match exactly.
  std::size_t min_fuzzy_chars = 0;

  void validate() const;
};

struct TierThresholds {
  double strict = 1.0;
  double fuzzy = 0.85;
  double fringe = 0.70;
  std::size_t min_fuzzy_chars = 5;

  Tier tier(int level) const;
  void validate() const;
};

struct Phrase {
  std::vector<std::string> tokens;
  std::string text;  // tokens joined by single spaces
  int type = 0;
};

/// Per-type phrase dictionary with a length-bucketed index for fuzzy lookup.
class Gazetteer {
 public:
  explicit Gazetteer(std::vector<std::string> entity_types = {});

  /// Tokenizes `surface` like a query. Returns false for duplicates and for
  /// surfaces with no tokens.
  bool add(std::string_view surface, int type);

  const std::vector<std::string>& entity_types() const { return entity_types_; }
  const std::vector<Phrase>& phrases() const { return phrases_; }
  std::size_t size() const { return phrases_.size(); }
  std::size_t max_phrase_tokens() const { return max_tokens_; }
  int find_type(std::string_view name) const;

  /// CRC-32 over the canonical `phrase<TAB>type` listing, as 8 hex digits.
  std::string digest() const;
  std::string to_tsv() const;

  struct Entry {
    std::u32string text;
    int phrase = 0;
    int type = 0;
    bool partial = false;  // strict token prefix of the phrase
  };
  const std::vector<Entry>& entries() const { return entries_; }
  /// Entries of `type` whose text has exactly `length` code points.
  std::span<const int> bucket(int type, std::size_t length, bool partial) const;
  std::span<const int> exact(const std::u32string& text) const;

 private:
  std::vector<std::string> entity_types_;
  std::vector<Phrase> phrases_;
  std::vector<Entry> entries_;
  // [partial][type][length] → entry ids
  std::vector<std::vector<std::vector<int>>> buckets_[2];
  std::unordered_map<std::u32string, std::vector<int>> exact_;
  std::size_t max_tokens_ = 0;
};

/// Reads `phrase<TAB>entity_type` lines; `#` starts a comment line.
Gazetteer load_gazetteer(const std::filesystem::path& path, const std::vector<std::string>& entity_types);
Gazetteer parse_gazetteer(std::string_view tsv, const std::vector<std::string>& entity_types);

/// Category → entity types searched by the second-stage tagger. Categories
/// sharing slot types are clubbed into one group.
struct EntityGroups {
  struct Group {
    std::string name;
    std::vector<int> categories;
    std::vector<int> entity_types;
  };
  std::vector<Group> groups;

  /// Every category must appear in exactly one group.
  void validate(const Taxonomy& taxonomy) const;
  const std::vector<int>& types_for(int category) const;

  /// One group holding every category and every type.
  static EntityGroups single(const Taxonomy& taxonomy);
  static EntityGroups from_json(const nlohmann::json& j, const Taxonomy& taxonomy);
  nlohmann::json to_json(const Taxonomy& taxonomy) const;
};

struct EntityMatch {
  std::size_t start_tok = 0;
  std::size_t end_tok = 0;  // half-open
  int type = 0;
  std::string matched_phrase;
  double score = 0.0;
  int tier = 1;
  bool partial = false;

  std::size_t length() const { return end_tok - start_tok; }
  bool overlaps(const EntityMatch& o) const { return start_tok < o.end_tok && o.start_tok < end_tok; }
};

/// Every window (up to the longest phrase + 1 tokens) that clears the tier
/// threshold against some phrase of an enabled type, with its best phrase.
/// Windows touching a tag token or a `blocked` position are skipped.
std::vector<EntityMatch> match_candidates(const TokenizedQuery& q, const Gazetteer& g,
                                          const Tier& tier, std::span<const int> enabled_types,
                                          const std::vector<bool>& blocked = {});

/// Non-overlapping subset of the candidates, chosen greedily by score,
/// then span length, then leftmost start. Sorted by start.
std::vector<EntityMatch> resolve_overlaps(std::vector<EntityMatch> candidates);

std::vector<EntityMatch> match_entities(const TokenizedQuery& q, const Gazetteer& g,
                                        const Tier& tier, std::span<const int> enabled_types,
                                        const std::vector<bool>& blocked = {});

struct Substitution {
  std::size_t token_index = 0;  // position of the tag in the substituted query
  CharSpan chars;
  EntityMatch match;
};

struct SubstitutedQuery {
  TokenizedQuery query;
  std::vector<Substitution> substitutions;
};

/// Replaces each matched span with a single `<type>` token whose offset covers
/// the span's characters. Throws OverlapError for overlapping matches.
SubstitutedQuery substitute_tags(const TokenizedQuery& q, std::span<const EntityMatch> matches,
                                 const std::vector<std::string>& type_names);

/// Character range covered by a token span.
CharSpan char_span(const TokenizedQuery& q, std::size_t start_tok, std::size_t end_tok);

}  // namespace snlu
