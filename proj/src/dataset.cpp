#include "snlu/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "snlu/errors.hpp"
#include "snlu/rng.hpp"

namespace snlu {

Taxonomy Taxonomy::from_json(const nlohmann::ordered_json& j) {
  Taxonomy t;
  if (!j.contains("categories") || !j["categories"].is_object()) {
    throw TaxonomyError("taxonomy needs a \"categories\" object");
  }
  for (const auto& [name, subs] : j["categories"].items()) {
    if (!subs.is_array() || subs.empty()) {
      throw TaxonomyError("category " + name + " needs a non-empty subcategory list");
    }
    t.add_category(name, subs.get<std::vector<std::string>>());
  }
  if (j.contains("entity_types")) {
    for (const auto& e : j["entity_types"]) t.add_entity_type(e.get<std::string>());
  }
  return t;
}

nlohmann::ordered_json Taxonomy::to_json() const {
  nlohmann::ordered_json j;
  j["categories"] = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    auto arr = nlohmann::ordered_json::array();
    for (int s : subcategories_of(static_cast<int>(c))) arr.push_back(subcategories_[s]);
    j["categories"][categories_[c]] = arr;
  }
  j["entity_types"] = entity_types_;
  return j;
}

void Taxonomy::add_category(std::string name, const std::vector<std::string>& subcategories) {
  if (find_category(name) >= 0) throw TaxonomyError("duplicate category " + name);
  const int id = static_cast<int>(categories_.size());
  categories_.push_back(std::move(name));
  for (const auto& s : subcategories) {
    if (find_subcategory(s) >= 0) {
      throw TaxonomyError("subcategory " + s + " appears under more than one category");
    }
    subcategories_.push_back(s);
    parent_.push_back(id);
  }
}

void Taxonomy::add_entity_type(std::string name) {
  if (find_entity_type(name) >= 0) throw TaxonomyError("duplicate entity type " + name);
  entity_types_.push_back(std::move(name));
}

std::vector<int> Taxonomy::subcategories_of(int category) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < parent_.size(); ++s) {
    if (parent_[s] == category) out.push_back(static_cast<int>(s));
  }
  return out;
}

namespace {
int index_of(const std::vector<std::string>& v, std::string_view name) {
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}
}  // namespace

int Taxonomy::find_category(std::string_view name) const { return index_of(categories_, name); }
int Taxonomy::find_subcategory(std::string_view name) const { return index_of(subcategories_, name); }
int Taxonomy::find_entity_type(std::string_view name) const { return index_of(entity_types_, name); }

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TaxonomyError("cannot open taxonomy file " + path.string());
  try {
    return Taxonomy::from_json(nlohmann::ordered_json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw TaxonomyError(path.string() + ": " + e.what());
  }
}

Vocab::Vocab() {
  add("<pad>");
  add("<unk>");
}

int Vocab::add(const std::string& token) {
  auto [it, inserted] = index_.try_emplace(token, static_cast<int>(tokens_.size()));
  if (inserted) tokens_.push_back(token);
  return it->second;
}

int Vocab::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnk : it->second;
}

Vocab Vocab::from_tokens(const std::vector<std::string>& ordered) {
  Vocab v;
  for (const auto& t : ordered) v.add(t);
  return v;
}

void validate_example(const LabeledExample& ex, const Taxonomy& taxonomy, std::size_t line) {
  if (ex.category < 0 || static_cast<std::size_t>(ex.category) >= taxonomy.category_count()) {
    throw ParseError(line, "category id out of range");
  }
  if (ex.subcategory < 0 ||
      static_cast<std::size_t>(ex.subcategory) >= taxonomy.subcategory_count()) {
    throw ParseError(line, "subcategory id out of range");
  }
  if (taxonomy.parent(ex.subcategory) != ex.category) {
    throw ParseError(line, "subcategory " + taxonomy.subcategory_name(ex.subcategory) +
                               " does not belong to category " +
                               taxonomy.category_name(ex.category));
  }
  std::vector<EntitySpan> sorted = ex.entities;
  std::sort(sorted.begin(), sorted.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.span < b.span; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& e = sorted[i];
    if (e.span.start >= e.span.end || e.span.end > ex.raw.char_count()) {
      throw ParseError(line, "entity span out of bounds");
    }
    if (e.type < 0 || static_cast<std::size_t>(e.type) >= taxonomy.entity_type_count()) {
      throw ParseError(line, "unknown entity type");
    }
    if (i > 0 && sorted[i - 1].span.overlaps(e.span)) {
      throw ParseError(line, "overlapping entity spans");
    }
  }
}

LabeledExample example_from_json(const nlohmann::json& j, const Taxonomy& taxonomy,
                                 std::size_t line) {
  try {
    LabeledExample ex{.id = line - 1, .raw = RawQuery(j.at("text").get<std::string>())};
    const auto cat = j.at("category").get<std::string>();
    const auto sub = j.at("subcategory").get<std::string>();
    ex.category = taxonomy.find_category(cat);
    if (ex.category < 0) throw ParseError(line, "unknown category " + cat);
    ex.subcategory = taxonomy.find_subcategory(sub);
    if (ex.subcategory < 0) throw ParseError(line, "unknown subcategory " + sub);
    if (j.contains("entities")) {
      for (const auto& e : j.at("entities")) {
        const auto type = e.at("type").get<std::string>();
        const int t = taxonomy.find_entity_type(type);
        if (t < 0) throw ParseError(line, "unknown entity type " + type);
        const auto start = e.at("start").get<long long>();
        const auto end = e.at("end").get<long long>();
        if (start < 0 || end < 0) throw ParseError(line, "negative entity offset");
        ex.entities.push_back({{static_cast<std::size_t>(start), static_cast<std::size_t>(end)}, t});
      }
    }
    validate_example(ex, taxonomy, line);
    return ex;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line, e.what());
  } catch (const InvalidQueryError& e) {
    throw ParseError(line, e.what());
  }
}

nlohmann::json example_to_json(const LabeledExample& ex, const Taxonomy& taxonomy) {
  nlohmann::json ents = nlohmann::json::array();
  for (const auto& e : ex.entities) {
    ents.push_back({{"start", e.span.start}, {"end", e.span.end},
                    {"type", taxonomy.entity_type_name(e.type)}});
  }
  // ordered keys keep the emitted line layout fixed
  nlohmann::ordered_json j;
  j["text"] = ex.raw.text();
  j["category"] = taxonomy.category_name(ex.category);
  j["subcategory"] = taxonomy.subcategory_name(ex.subcategory);
  j["entities"] = ents;
  return nlohmann::json::parse(j.dump());
}

Vocab build_vocab(const std::vector<LabeledExample>& examples) {
  Vocab v;
  for (const auto& ex : examples) {
    for (const auto& t : tokenize(ex.raw).tokens) v.add(t);
  }
  return v;
}

Dataset parse_dataset(std::string_view jsonl, const Taxonomy& taxonomy) {
  Dataset d;
  d.taxonomy = taxonomy;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    d.examples.push_back(example_from_json(j, taxonomy, lineno));
  }
  d.vocab = build_vocab(d.examples);
  return d;
}

Dataset load_dataset(const std::filesystem::path& path, const Taxonomy& taxonomy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open dataset file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str(), taxonomy);
}

DatasetSplit split_dataset(const Dataset& d, std::uint64_t seed) {
  const std::size_t n = d.size();
  Rng rng(derive_seed(seed, 0x5b117));

  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < n; ++i) by_class[d.examples[i].subcategory].push_back(i);

  // Each example gets a fractional position within its class; sorting by it
  // interleaves classes so that every prefix holds each class in proportion.
  struct Keyed {
    double key;
    std::uint64_t tiebreak;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(n);
  for (auto& [cls, members] : by_class) {
    rng.shuffle(members);
    const double m = static_cast<double>(members.size());
    for (std::size_t r = 0; r < members.size(); ++r) {
      // singletons cannot be stratified
      const double key = members.size() >= 2 ? (static_cast<double>(r) + 0.5) / m : rng.uniform();
      keyed.push_back({key, rng.next(), members[r]});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.tiebreak < b.tiebreak;
  });

  const std::size_t n_train = n * 70 / 100;
  const std::size_t n_val = n * 15 / 100;

  DatasetSplit s;
  for (Dataset* part : {&s.train, &s.validation, &s.test}) part->taxonomy = d.taxonomy;
  for (std::size_t pos = 0; pos < keyed.size(); ++pos) {
    const auto& ex = d.examples[keyed[pos].index];
    if (pos < n_train) {
      s.train.examples.push_back(ex);
    } else if (pos < n_train + n_val) {
      s.validation.examples.push_back(ex);
    } else {
      s.test.examples.push_back(ex);
    }
  }
  // within each part, shuffle away the class interleaving order
  for (Dataset* part : {&s.train, &s.validation, &s.test}) rng.shuffle(part->examples);

  s.train.vocab = build_vocab(s.train.examples);
  s.validation.vocab = s.train.vocab;
  s.test.vocab = s.train.vocab;
  return s;
}

}  // namespace snlu
