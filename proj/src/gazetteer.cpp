#include "snlu/gazetteer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "snlu/errors.hpp"

namespace snlu {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

double similarity(const std::vector<std::string>& candidate, const std::vector<std::string>& phrase) {
  return similarity(decode_utf8(join(candidate)), decode_utf8(join(phrase)));
}

namespace {

constexpr double kScoreEps = 1e-12;

/// Bit-parallel edit distance (Myers/Hyyrö) with a fixed pattern of at most
/// 64 code points.
class BitPattern {
 public:
  explicit BitPattern(std::u32string_view pattern) : size_(pattern.size()) {
    ascii_.fill(0);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      const char32_t c = pattern[i];
      if (c < 128) {
        ascii_[c] |= bit;
      } else {
        auto it = std::find_if(other_.begin(), other_.end(), [c](auto& p) { return p.first == c; });
        if (it == other_.end()) {
          other_.emplace_back(c, bit);
        } else {
          it->second |= bit;
        }
      }
    }
  }

  std::size_t distance(std::u32string_view text) const {
    if (size_ == 0) return text.size();
    const std::uint64_t last = std::uint64_t{1} << (size_ - 1);
    std::uint64_t pv = size_ == 64 ? ~std::uint64_t{0} : (last << 1) - 1;
    std::uint64_t mv = 0;
    std::size_t score = size_;
    for (char32_t c : text) {
      const std::uint64_t eq = mask(c);
      const std::uint64_t xv = eq | mv;
      const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
      std::uint64_t ph = mv | ~(xh | pv);
      std::uint64_t mh = pv & xh;
      if (ph & last) ++score;
      if (mh & last) --score;
      ph = (ph << 1) | 1;
      mh <<= 1;
      pv = mh | ~(xv | ph);
      mv = ph & xv;
    }
    return score;
  }

 private:
  std::uint64_t mask(char32_t c) const {
    if (c < 128) return ascii_[c];
    for (const auto& [k, m] : other_) {
      if (k == c) return m;
    }
    return 0;
  }

  std::size_t size_;
  std::array<std::uint64_t, 128> ascii_{};
  std::vector<std::pair<char32_t, std::uint64_t>> other_;
};

bool better_candidate(const EntityMatch& a, const EntityMatch& b, int phrase_a, int phrase_b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.partial != b.partial) return !a.partial;
  if (a.type != b.type) return a.type < b.type;
  return phrase_a < phrase_b;
}

}  // namespace

void Tier::validate() const {
  if (level < 1 || level > 3) throw ConfigError("tier level must be 1, 2 or 3");
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ConfigError("tier threshold outside [0,1]");
  if (level == 1 && threshold != 1.0) throw ConfigError("tier 1 requires threshold 1.0");
  if (allow_partial && level != 3) throw ConfigError("partial matching is reserved for tier 3");
}

Tier TierThresholds::tier(int level) const {
  switch (level) {
    case 1: return {1, strict, false};
    case 2: return {2, fuzzy, false, min_fuzzy_chars};
    case 3: return {3, fringe, true, min_fuzzy_chars};
    default: throw ConfigError("tier level must be 1, 2 or 3");
  }
}

void TierThresholds::validate() const {
  if (strict != 1.0) throw ConfigError("tier 1 threshold must be 1.0");
  if (!(fuzzy <= strict && fringe <= fuzzy && fringe > 0.0)) {
    throw ConfigError("tier thresholds must satisfy 1.0 >= fuzzy >= fringe > 0");
  }
}

Gazetteer::Gazetteer(std::vector<std::string> entity_types) : entity_types_(std::move(entity_types)) {
  for (auto& b : buckets_) b.resize(entity_types_.size());
}

int Gazetteer::find_type(std::string_view name) const {
  auto it = std::find(entity_types_.begin(), entity_types_.end(), name);
  return it == entity_types_.end() ? -1 : static_cast<int>(it - entity_types_.begin());
}

bool Gazetteer::add(std::string_view surface, int type) {
  if (type < 0 || static_cast<std::size_t>(type) >= entity_types_.size()) {
    throw IndexError("entity type id out of range");
  }
  Phrase p;
  p.tokens = tokenize_phrase(surface);
  if (p.tokens.empty()) return false;
  p.text = join(p.tokens);
  p.type = type;
  const std::u32string text = decode_utf8(p.text);
  if (auto it = exact_.find(text); it != exact_.end()) {
    for (int e : it->second) {
      if (entries_[e].type == type) return false;
    }
  }

  const int phrase_id = static_cast<int>(phrases_.size());
  auto add_entry = [&](std::u32string t, bool partial) {
    const int id = static_cast<int>(entries_.size());
    auto& lengths = buckets_[partial ? 1 : 0][type];
    if (lengths.size() <= t.size()) lengths.resize(t.size() + 1);
    lengths[t.size()].push_back(id);
    if (!partial) exact_[t].push_back(id);
    entries_.push_back({std::move(t), phrase_id, type, partial});
  };
  add_entry(text, false);
  for (std::size_t k = 1; k < p.tokens.size(); ++k) {
    const std::vector<std::string> prefix(p.tokens.begin(), p.tokens.begin() + static_cast<long>(k));
    add_entry(decode_utf8(join(prefix)), true);
  }
  max_tokens_ = std::max(max_tokens_, p.tokens.size());
  phrases_.push_back(std::move(p));
  return true;
}

std::span<const int> Gazetteer::bucket(int type, std::size_t length, bool partial) const {
  const auto& lengths = buckets_[partial ? 1 : 0][type];
  if (length >= lengths.size()) return {};
  return lengths[length];
}

std::span<const int> Gazetteer::exact(const std::u32string& text) const {
  auto it = exact_.find(text);
  if (it == exact_.end()) return {};
  return it->second;
}

std::string Gazetteer::to_tsv() const {
  std::string out;
  for (const auto& p : phrases_) {
    out += p.text;
    out += '\t';
    out += entity_types_[p.type];
    out += '\n';
  }
  return out;
}

std::string Gazetteer::digest() const {
  const std::string tsv = to_tsv();
  const uLong crc = crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(tsv.data()),
                          static_cast<uInt>(tsv.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

Gazetteer parse_gazetteer(std::string_view tsv, const std::vector<std::string>& entity_types) {
  Gazetteer g(entity_types);
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected phrase<TAB>entity_type");
    const std::string phrase = line.substr(0, tab);
    const std::string type = line.substr(tab + 1);
    const int t = g.find_type(type);
    if (t < 0) throw ParseError(lineno, "unknown entity type " + type);
    if (tokenize_phrase(phrase).empty()) throw ParseError(lineno, "phrase has no tokens");
    g.add(phrase, t);
  }
  return g;
}

Gazetteer load_gazetteer(const std::filesystem::path& path, const std::vector<std::string>& entity_types) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open gazetteer file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_gazetteer(buf.str(), entity_types);
}

void EntityGroups::validate(const Taxonomy& taxonomy) const {
  std::vector<int> seen(taxonomy.category_count(), 0);
  for (const auto& g : groups) {
    for (int c : g.categories) {
      if (c < 0 || static_cast<std::size_t>(c) >= seen.size()) throw ConfigError("group category out of range");
      ++seen[c];
    }
    for (int t : g.entity_types) {
      if (t < 0 || static_cast<std::size_t>(t) >= taxonomy.entity_type_count()) {
        throw ConfigError("group entity type out of range");
      }
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c] != 1) {
      throw ConfigError("category " + taxonomy.category_name(static_cast<int>(c)) +
                        " must appear in exactly one entity group");
    }
  }
}

const std::vector<int>& EntityGroups::types_for(int category) const {
  for (const auto& g : groups) {
    if (std::find(g.categories.begin(), g.categories.end(), category) != g.categories.end()) {
      return g.entity_types;
    }
  }
  throw ConfigError("category has no entity group");
}

EntityGroups EntityGroups::single(const Taxonomy& taxonomy) {
  Group g{.name = "all"};
  for (std::size_t c = 0; c < taxonomy.category_count(); ++c) g.categories.push_back(static_cast<int>(c));
  for (std::size_t t = 0; t < taxonomy.entity_type_count(); ++t) g.entity_types.push_back(static_cast<int>(t));
  return {{g}};
}

EntityGroups EntityGroups::from_json(const nlohmann::json& j, const Taxonomy& taxonomy) {
  EntityGroups out;
  for (const auto& jg : j) {
    Group g;
    g.name = jg.value("name", "group" + std::to_string(out.groups.size()));
    for (const auto& c : jg.at("categories")) {
      const int id = taxonomy.find_category(c.get<std::string>());
      if (id < 0) throw ConfigError("unknown category in entity group: " + c.get<std::string>());
      g.categories.push_back(id);
    }
    for (const auto& t : jg.at("entity_types")) {
      const int id = taxonomy.find_entity_type(t.get<std::string>());
      if (id < 0) throw ConfigError("unknown entity type in entity group: " + t.get<std::string>());
      g.entity_types.push_back(id);
    }
    std::sort(g.entity_types.begin(), g.entity_types.end());
    out.groups.push_back(std::move(g));
  }
  out.validate(taxonomy);
  return out;
}

nlohmann::json EntityGroups::to_json(const Taxonomy& taxonomy) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : groups) {
    nlohmann::json cats = nlohmann::json::array(), types = nlohmann::json::array();
    for (int c : g.categories) cats.push_back(taxonomy.category_name(c));
    for (int t : g.entity_types) types.push_back(taxonomy.entity_type_name(t));
    arr.push_back({{"name", g.name}, {"categories", cats}, {"entity_types", types}});
  }
  return arr;
}

std::vector<EntityMatch> match_candidates(const TokenizedQuery& q, const Gazetteer& g,
                                          const Tier& tier, std::span<const int> enabled_types,
                                          const std::vector<bool>& blocked) {
  tier.validate();
  std::vector<EntityMatch> out;
  if (g.size() == 0 || q.size() == 0) return out;

  const std::size_t n = q.size();
  std::vector<bool> skip(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    skip[i] = is_tag_token(q.tokens[i]) || (i < blocked.size() && blocked[i]);
  }
  std::vector<std::u32string> tok32(n);
  for (std::size_t i = 0; i < n; ++i) tok32[i] = decode_utf8(q.tokens[i]);

  const std::size_t max_window = g.max_phrase_tokens() + 1;
  const bool exact_only = tier.threshold >= 1.0;
  const auto& entries = g.entries();

  for (std::size_t s = 0; s < n; ++s) {
    std::u32string window;
    for (std::size_t e = s + 1; e <= n && e - s <= max_window; ++e) {
      if (skip[e - 1]) break;
      if (e > s + 1) window.push_back(U' ');
      window += tok32[e - 1];

      EntityMatch best;
      int best_phrase = -1;
      auto consider = [&](int entry_id, double score) {
        const auto& entry = entries[entry_id];
        EntityMatch m{s, e, entry.type, {}, score, tier.level, entry.partial};
        if (best_phrase < 0 || better_candidate(m, best, entry.phrase, best_phrase)) {
          best = m;
          best_phrase = entry.phrase;
        }
      };

      if (exact_only) {
        for (int id : g.exact(window)) {
          if (std::find(enabled_types.begin(), enabled_types.end(), entries[id].type) != enabled_types.end()) {
            consider(id, 1.0);
          }
        }
      } else {
        const std::size_t m = window.size();
        const double th = tier.threshold;
        const auto lo = static_cast<std::size_t>(std::max(0.0, std::ceil(th * static_cast<double>(m) - 1e-9)));
        const auto hi = th > 0.0 ? static_cast<std::size_t>(std::floor(static_cast<double>(m) / th + 1e-9))
                                 : m * 64;
        std::optional<BitPattern> pattern;
        if (m <= 64) pattern.emplace(window);
        for (int part = 0; part < (tier.allow_partial ? 2 : 1); ++part) {
          for (int type : enabled_types) {
            for (std::size_t len = std::max<std::size_t>(lo, 1); len <= hi; ++len) {
              for (int id : g.bucket(type, len, part == 1)) {
                const auto& text = entries[id].text;
                const std::size_t d = pattern ? pattern->distance(text) : levenshtein(window, text);
                if (d > 0 && m < tier.min_fuzzy_chars) continue;
                const double score =
                    1.0 - static_cast<double>(d) / static_cast<double>(std::max(m, text.size()));
                if (score + kScoreEps >= th) consider(id, score);
              }
            }
          }
        }
      }
      if (best_phrase >= 0) {
        best.matched_phrase = g.phrases()[best_phrase].text;
        out.push_back(std::move(best));
      }
    }
  }
  return out;
}

std::vector<EntityMatch> resolve_overlaps(std::vector<EntityMatch> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const EntityMatch& a, const EntityMatch& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.length() != b.length()) return a.length() > b.length();
    return a.start_tok < b.start_tok;
  });
  std::vector<EntityMatch> chosen;
  for (auto& c : candidates) {
    const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const EntityMatch& m) { return m.overlaps(c); });
    if (!clash) chosen.push_back(std::move(c));
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const EntityMatch& a, const EntityMatch& b) { return a.start_tok < b.start_tok; });
  return chosen;
}

std::vector<EntityMatch> match_entities(const TokenizedQuery& q, const Gazetteer& g,
                                        const Tier& tier, std::span<const int> enabled_types,
                                        const std::vector<bool>& blocked) {
  return resolve_overlaps(match_candidates(q, g, tier, enabled_types, blocked));
}

CharSpan char_span(const TokenizedQuery& q, std::size_t start_tok, std::size_t end_tok) {
  if (start_tok >= end_tok || end_tok > q.size()) throw IndexError("token span out of range");
  return {q.offsets[start_tok].start, q.offsets[end_tok - 1].end};
}

SubstitutedQuery substitute_tags(const TokenizedQuery& q, std::span<const EntityMatch> matches,
                                 const std::vector<std::string>& type_names) {
  std::vector<EntityMatch> sorted(matches.begin(), matches.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const EntityMatch& a, const EntityMatch& b) { return a.start_tok < b.start_tok; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].start_tok >= sorted[i].end_tok || sorted[i].end_tok > q.size()) {
      throw IndexError("match span out of range");
    }
    if (i > 0 && sorted[i - 1].overlaps(sorted[i])) throw OverlapError("entity matches overlap");
  }

  SubstitutedQuery out;
  std::size_t next = 0;
  for (const auto& m : sorted) {
    for (; next < m.start_tok; ++next) {
      out.query.tokens.push_back(q.tokens[next]);
      out.query.offsets.push_back(q.offsets[next]);
    }
    const CharSpan chars = char_span(q, m.start_tok, m.end_tok);
    out.substitutions.push_back({out.query.tokens.size(), chars, m});
    out.query.tokens.push_back(make_tag(type_names.at(m.type)));
    out.query.offsets.push_back(chars);
    next = m.end_tok;
  }
  for (; next < q.size(); ++next) {
    out.query.tokens.push_back(q.tokens[next]);
    out.query.offsets.push_back(q.offsets[next]);
  }
  return out;
}

}  // namespace snlu
