#include "snlu/rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "snlu/errors.hpp"

namespace snlu {

bool Rule::fires(const TokenizedQuery& q) const {
  if (pattern.empty() || pattern.size() > q.size()) return false;
  if (kind == Kind::Keyword) {
    return std::find(q.tokens.begin(), q.tokens.end(), pattern.front()) != q.tokens.end();
  }
  return std::search(q.tokens.begin(), q.tokens.end(), pattern.begin(), pattern.end()) != q.tokens.end();
}

std::optional<int> apply_rules(const TokenizedQuery& q, int category, std::span<const Rule> rules) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (r.category != category || !r.fires(q)) continue;
    if (!best || r.priority > best->priority) best = &r;
  }
  if (!best) return std::nullopt;
  return best->subcategory;
}

void validate_rules(std::span<const Rule> rules, const Taxonomy& taxonomy) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    const std::string where = "rule " + std::to_string(i) + ": ";
    if (r.pattern.empty()) throw ConfigError(where + "empty pattern");
    if (r.kind == Rule::Kind::Keyword && r.pattern.size() != 1) {
      throw ConfigError(where + "keyword rules take a single token");
    }
    if (r.subcategory < 0 || static_cast<std::size_t>(r.subcategory) >= taxonomy.subcategory_count() ||
        taxonomy.parent(r.subcategory) != r.category) {
      throw ConfigError(where + "subcategory does not belong to the rule's category");
    }
  }
}

namespace {
std::vector<std::string> split_pattern(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) { return std::tolower(c); });
    out.push_back(tok);
  }
  return out;
}
}  // namespace

std::vector<Rule> rules_from_json(const nlohmann::json& j, const Taxonomy& taxonomy) {
  if (!j.is_array()) throw ConfigError("rules file must hold a JSON array");
  std::vector<Rule> rules;
  for (const auto& jr : j) {
    Rule r;
    try {
      const auto cat = jr.at("category").get<std::string>();
      const auto sub = jr.at("subcategory").get<std::string>();
      r.category = taxonomy.find_category(cat);
      r.subcategory = taxonomy.find_subcategory(sub);
      if (r.category < 0) throw ConfigError("unknown rule category " + cat);
      if (r.subcategory < 0) throw ConfigError("unknown rule subcategory " + sub);
      const auto kind = jr.at("kind").get<std::string>();
      if (kind == "keyword") {
        r.kind = Rule::Kind::Keyword;
      } else if (kind == "phrase") {
        r.kind = Rule::Kind::Phrase;
      } else {
        throw ConfigError("rule kind must be keyword or phrase, got " + kind);
      }
      r.pattern = split_pattern(jr.at("pattern").get<std::string>());
      r.priority = jr.value("priority", 0);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed rule: ") + e.what());
    }
    rules.push_back(std::move(r));
  }
  validate_rules(rules, taxonomy);
  return rules;
}

nlohmann::json rules_to_json(std::span<const Rule> rules, const Taxonomy& taxonomy) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rule& r : rules) {
    arr.push_back({{"category", taxonomy.category_name(r.category)},
                   {"subcategory", taxonomy.subcategory_name(r.subcategory)},
                   {"kind", r.kind == Rule::Kind::Keyword ? "keyword" : "phrase"},
                   {"pattern", join(r.pattern)},
                   {"priority", r.priority}});
  }
  return arr;
}

std::vector<Rule> load_rules(const std::filesystem::path& path, const Taxonomy& taxonomy) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rules file " + path.string());
  try {
    return rules_from_json(nlohmann::json::parse(in), taxonomy);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace snlu
