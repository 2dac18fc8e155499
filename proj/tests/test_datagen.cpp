#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "snlu/datagen.hpp"
#include "support.hpp"

using namespace snlu;
namespace fs = std::filesystem;

namespace {

const GeneratedCorpus& default_corpus() {
  static const GeneratedCorpus c = generate(GenSpec{});
  return c;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("snlu_datagen_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("default spec shape") {
  const auto& c = default_corpus();
  const auto& tax = c.dataset.taxonomy;
  CHECK(tax.category_count() == 9);
  CHECK(tax.subcategory_count() == 19);
  CHECK(tax.entity_type_count() == 14);
  CHECK(c.dataset.size() == 15687);
  for (const auto& t : default_templates()) CHECK(t.size() >= 3);
  const auto split = split_dataset(c.dataset, 7);
  CHECK(split.train.size() == 10980);
  CHECK(split.validation.size() == 2353);
  CHECK(split.test.size() == 2354);
  std::map<int, int> per_class;
  for (const auto& ex : split.train.examples) ++per_class[ex.subcategory];
  CHECK(per_class.size() == 19);
  for (const auto& [sub, n] : per_class) CHECK(n >= 100);
}

TEST_CASE("vocabulary size is near the target scale") {
  const auto size = default_corpus().dataset.vocab.size();
  CHECK(size >= 3000);
  CHECK(size <= 5500);
}

TEST_CASE("gold spans slice to gazetteer phrases of their type") {
  const auto& c = default_corpus();
  std::map<std::string, int> phrase_type;
  for (const auto& p : c.gazetteer.phrases()) phrase_type[p.text] = p.type;
  std::size_t entities = 0;
  for (const auto& ex : c.dataset.examples) {
    for (const auto& e : ex.entities) {
      const auto phrase = join(tokenize_phrase(slice_chars(ex.raw.text(), e.span)));
      const auto it = phrase_type.find(phrase);
      REQUIRE(it != phrase_type.end());
      REQUIRE(it->second == e.type);
      ++entities;
    }
  }
  CHECK(entities > c.dataset.size());
}

TEST_CASE("no phrase is listed under two types") {
  std::map<std::string, std::set<std::size_t>> types;
  const auto& lex = default_lexicons();
  for (std::size_t t = 0; t < lex.size(); ++t) {
    for (const auto& v : lex[t]) types[join(tokenize_phrase(v))].insert(t);
  }
  for (const auto& [phrase, ts] : types) {
    CAPTURE(phrase);
    CHECK(ts.size() == 1);
  }
}

TEST_CASE("noise-free generation reproduces templates verbatim") {
  GenSpec spec;
  spec.noise = {.typo = 0, .article_drop = 0, .word_swap = 0, .filler = 0};
  spec.train_size = 700;
  spec.validation_size = 150;
  spec.test_size = 150;
  const auto c = generate(spec);
  const auto& tax = c.dataset.taxonomy;
  const auto& templates = default_templates();
  for (const auto& ex : c.dataset.examples) {
    const auto chars = decode_utf8(ex.raw.text());
    std::u32string rebuilt;
    std::size_t pos = 0;
    for (const auto& e : ex.entities) {
      rebuilt += chars.substr(pos, e.span.start - pos);
      rebuilt += decode_utf8("{" + tax.entity_type_name(e.type) + "}");
      pos = e.span.end;
    }
    rebuilt += chars.substr(pos);
    const auto text = encode_utf8(rebuilt);
    const auto& options = templates[ex.subcategory];
    CAPTURE(text);
    REQUIRE(std::find(options.begin(), options.end(), text) != options.end());
  }
}

TEST_CASE("typos are one edit away") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto w = apply_typo("delhi", rng);
    REQUIRE(snlu::testing::oracle_osa_distance("delhi", w) == 1);
  }
  CHECK(apply_typo("a", rng) == "a");
  CHECK(apply_typo("7", rng) == "7");
}

TEST_CASE("noise never touches entities") {
  Rng rng(4);
  const NoiseRates all = {.typo = 0.99, .article_drop = 0.99, .word_swap = 0.99, .filler = 0.99};
  std::vector<NoisyToken> base = {{"the", false, false, -1},
                                  {"best", false, false, -1},
                                  {"New Delhi", true, false, 0},
                                  {"colleges", false, false, -1},
                                  {"the", true, false, 1}};
  for (int i = 0; i < 200; ++i) {
    const auto out = inject_noise(base, all, rng);
    std::vector<std::string> ents;
    for (const auto& t : out) {
      if (t.is_entity) ents.push_back(t.text);
    }
    REQUIRE(ents == std::vector<std::string>{"New Delhi", "the"});
  }
  const NoiseRates none = {.typo = 0, .article_drop = 0, .word_swap = 0, .filler = 0};
  const auto same = inject_noise(base, none, rng);
  REQUIRE(same.size() == base.size());
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(same[i].text == base[i].text);
}

TEST_CASE("rendering records entity character spans") {
  const auto ex = render_example({{"fees", false, false, -1}, {"at", false, false, -1}, {"IIT Bombay", true, false, 4},
                                  {"?", false, true, -1}},
                                 1, 2, 0);
  CHECK(ex.raw.text() == "fees at IIT Bombay?");
  REQUIRE(ex.entities.size() == 1);
  CHECK(ex.entities[0].span == CharSpan{8, 18});
}

TEST_CASE("entity-typo mode keeps types and spans") {
  GenSpec spec;
  spec.entity_typo_rate = 0.5;
  spec.train_size = 700;
  spec.validation_size = 150;
  spec.test_size = 150;
  const auto c = generate(spec);
  std::set<std::string> phrases;
  for (const auto& p : c.gazetteer.phrases()) phrases.insert(p.text);
  std::size_t missing = 0, total = 0;
  for (const auto& ex : c.dataset.examples) {
    for (const auto& e : ex.entities) {
      ++total;
      missing += !phrases.contains(join(tokenize_phrase(slice_chars(ex.raw.text(), e.span))));
    }
  }
  CHECK(missing > total / 5);
  CHECK(missing < total);
}

TEST_CASE("same seed writes identical files") {
  GenSpec spec;
  spec.train_size = 350;
  spec.validation_size = 75;
  spec.test_size = 75;
  const auto a = scratch_dir("a"), b = scratch_dir("b"), other = scratch_dir("c");
  write_corpus(generate(spec), a);
  write_corpus(generate(spec), b);
  spec.seed = 8;
  write_corpus(generate(spec), other);
  for (const char* f : {"dataset.jsonl", "gazetteer.tsv", "taxonomy.json", "rules.json"}) {
    CHECK(read_file(a / f) == read_file(b / f));
  }
  CHECK(read_file(a / "dataset.jsonl") != read_file(other / "dataset.jsonl"));
  const auto tax = load_taxonomy(a / "taxonomy.json");
  CHECK(load_dataset(a / "dataset.jsonl", tax).size() == 500);
  CHECK(load_gazetteer(a / "gazetteer.tsv", tax.entity_types()).size() == generate(spec).gazetteer.size());
  CHECK(load_rules(a / "rules.json", tax).size() == default_rules(tax).size());
  for (const auto& d : {a, b, other}) fs::remove_all(d);
}

TEST_CASE("spec validation") {
  GenSpec spec;
  spec.noise.typo = 1.0;
  CHECK_THROWS(spec.validate());
  spec = GenSpec{};
  spec.test_size = 0;
  CHECK_THROWS(spec.validate());
}
