#include <doctest.h>

#include <set>

#include "snlu/errors.hpp"
#include "snlu/gazetteer.hpp"
#include "support.hpp"

using namespace snlu;
using snlu::testing::oracle_similarity;

namespace {

const std::vector<std::string> kTypes = {"city", "degree", "college"};
const std::vector<int> kAll = {0, 1, 2};

Gazetteer sample() {
  Gazetteer g(kTypes);
  g.add("New Delhi", 0);
  g.add("Mumbai", 0);
  g.add("Pune", 0);
  g.add("B. Tech", 1);
  g.add("MBA", 1);
  g.add("Manipal University", 2);
  return g;
}

TokenizedQuery tok(const std::string& s) { return tokenize(RawQuery(s)); }

std::u32string u32(const std::string& s) { return decode_utf8(s); }

std::set<std::pair<std::size_t, std::size_t>> windows(const std::vector<EntityMatch>& ms) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& m : ms) out.insert({m.start_tok, m.end_tok});
  return out;
}

}  // namespace

TEST_CASE("similarity examples") {
  CHECK(similarity({"new", "delhi"}, {"new", "delhi"}) == 1.0);
  CHECK(similarity({"delhi"}, {"mumbai"}) == oracle_similarity(U"delhi", U"mumbai"));
  const double btech = similarity({"b", "tech"}, {"btech"});
  CHECK(btech == doctest::Approx(oracle_similarity(U"b tech", U"btech")));
  CHECK(btech >= 0.80);
  CHECK(similarity({"abc"}, {"abd"}) == similarity({"abd"}, {"abc"}));
}

TEST_CASE("property: similarity agrees with the full-table oracle") {
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const auto a = snlu::testing::random_u32(rng, U"abcde é", 0, 14);
    const auto b = snlu::testing::random_u32(rng, U"abcde é", 0, 14);
    REQUIRE(levenshtein(a, b) == snlu::testing::oracle_edit_distance(a, b));
    REQUIRE(similarity(a, b) == oracle_similarity(a, b));
  }
  // Long strings exercise the multi-word bit-parallel path.
  for (int i = 0; i < 300; ++i) {
    const auto a = snlu::testing::random_u32(rng, U"abc", 50, 150);
    const auto b = snlu::testing::random_u32(rng, U"abc", 50, 150);
    REQUIRE(levenshtein(a, b) == snlu::testing::oracle_edit_distance(a, b));
  }
}

TEST_CASE("tier validation") {
  TierThresholds t;
  CHECK(t.tier(1).threshold == 1.0);
  CHECK(t.tier(2).threshold == 0.85);
  CHECK(t.tier(3).allow_partial);
  CHECK_FALSE(t.tier(2).allow_partial);
  CHECK_THROWS_AS(t.tier(4), ConfigError);
  CHECK_THROWS_AS((Tier{.level = 2, .threshold = 0.9, .allow_partial = true}.validate()), ConfigError);
  t.fringe = 0.9;
  CHECK_THROWS_AS(t.validate(), ConfigError);
}

TEST_CASE("exact match at tier 1") {
  const auto g = sample();
  const auto ms = match_entities(tok("colleges in new delhi"), g, TierThresholds{}.tier(1), kAll);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].start_tok == 2);
  CHECK(ms[0].end_tok == 4);
  CHECK(ms[0].type == 0);
  CHECK(ms[0].matched_phrase == "new delhi");
  CHECK(ms[0].score == 1.0);
}

TEST_CASE("empty gazetteer matches nothing") {
  const Gazetteer g(kTypes);
  for (int level : {1, 2, 3}) CHECK(match_entities(tok("colleges in new delhi"), g, TierThresholds{}.tier(level), kAll).empty());
}

TEST_CASE("transposed city name") {
  const auto g = sample();
  const auto q = tok("colleges in nwe delhi");
  const TierThresholds t;
  const double expected = oracle_similarity(U"nwe delhi", U"new delhi");
  CHECK(match_entities(q, g, t.tier(1), kAll).empty());
  // One transposition costs two edits over nine characters, which sits
  // between the fuzzy and fringe thresholds.
  CHECK(expected < t.fuzzy);
  CHECK(expected >= t.fringe);
  CHECK(match_entities(q, g, t.tier(2), kAll).empty());
  const auto ms = match_entities(q, g, t.tier(3), kAll);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].score == doctest::Approx(expected));
  CHECK(ms[0].type == 0);
  // A single deletion clears the fuzzy tier.
  const auto del = match_entities(tok("colleges in new dlhi"), g, t.tier(2), kAll);
  REQUIRE(del.size() == 1);
  CHECK(del[0].score == doctest::Approx(oracle_similarity(U"new dlhi", U"new delhi")));
}

TEST_CASE("short windows only match exactly") {
  const auto g = sample();
  // "puna" is one edit from "pune" (0.75) but shorter than the fuzzy minimum.
  CHECK(match_entities(tok("jobs in puna"), g, TierThresholds{}.tier(3), kAll).empty());
  CHECK(match_entities(tok("jobs in pune"), g, TierThresholds{}.tier(3), kAll).size() == 1);
}

TEST_CASE("fringe tier accepts phrase prefixes") {
  const auto g = sample();
  const auto q = tok("fees at manipal please");
  CHECK(match_entities(q, g, TierThresholds{}.tier(2), kAll).empty());
  const auto ms = match_entities(q, g, TierThresholds{}.tier(3), kAll);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].partial);
  CHECK(ms[0].type == 2);
  CHECK(ms[0].matched_phrase == "manipal university");
}

TEST_CASE("enabled types restrict matching") {
  const auto g = sample();
  const std::vector<int> degrees = {1};
  CHECK(match_entities(tok("mba in mumbai"), g, TierThresholds{}.tier(1), degrees).size() == 1);
}

TEST_CASE("blocked positions and tag tokens are skipped") {
  const auto g = sample();
  const auto q = tok("mba in mumbai");
  CHECK(match_entities(q, g, TierThresholds{}.tier(1), kAll, {false, false, true}).size() == 1);
  auto sub = substitute_tags(q, match_entities(q, g, TierThresholds{}.tier(1), kAll), kTypes).query;
  CHECK(sub.tokens == std::vector<std::string>{"<degree>", "in", "<city>"});
  CHECK(match_candidates(sub, g, TierThresholds{}.tier(3), kAll).empty());
}

TEST_CASE("overlap resolution prefers score, then length, then position") {
  auto mk = [](std::size_t s, std::size_t e, double score) {
    return EntityMatch{.start_tok = s, .end_tok = e, .score = score};
  };
  auto r = resolve_overlaps({mk(0, 2, 0.9), mk(1, 3, 1.0)});
  REQUIRE(r.size() == 1);
  CHECK(r[0].start_tok == 1);
  r = resolve_overlaps({mk(0, 1, 1.0), mk(0, 2, 1.0)});
  REQUIRE(r.size() == 1);
  CHECK(r[0].end_tok == 2);
  r = resolve_overlaps({mk(2, 4, 1.0), mk(1, 3, 1.0), mk(4, 5, 0.8)});
  REQUIRE(r.size() == 2);
  CHECK(r[0].start_tok == 1);
  CHECK(r[1].start_tok == 4);
}

TEST_CASE("substitution replaces spans with tags") {
  const auto q = tok("which are the best colleges in new delhi");
  const EntityMatch m{.start_tok = 6, .end_tok = 8, .type = 0, .matched_phrase = "new delhi", .score = 1.0};
  const auto s = substitute_tags(q, std::vector{m}, kTypes);
  CHECK(s.query.tokens == std::vector<std::string>{"which", "are", "the", "best", "colleges", "in", "<city>"});
  CHECK(s.query.offsets.back() == CharSpan{31, 40});
  REQUIRE(s.substitutions.size() == 1);
  CHECK(s.substitutions[0].token_index == 6);
  CHECK(substitute_tags(q, std::vector<EntityMatch>{}, kTypes).query == q);
}

TEST_CASE("adjacent substitutions shrink the query by span length minus count") {
  const auto q = tok("new delhi mumbai mba now");
  const std::vector<EntityMatch> ms = {{.start_tok = 0, .end_tok = 2, .type = 0},
                                       {.start_tok = 2, .end_tok = 3, .type = 0},
                                       {.start_tok = 3, .end_tok = 4, .type = 1}};
  const auto s = substitute_tags(q, ms, kTypes);
  CHECK(s.query.size() == q.size() - (4 - 3));
  CHECK(s.query.tokens == std::vector<std::string>{"<city>", "<city>", "<degree>", "now"});
  const std::vector<EntityMatch> bad = {{.start_tok = 0, .end_tok = 2}, {.start_tok = 1, .end_tok = 3}};
  CHECK_THROWS_AS(substitute_tags(q, bad, kTypes), OverlapError);
}

TEST_CASE("property: tier candidate sets are nested") {
  Rng rng(77);
  const TierThresholds t;
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Gazetteer g(kTypes);
    const std::size_t phrases = 1 + rng.below(6);
    for (std::size_t p = 0; p < phrases; ++p) {
      std::string phrase = snlu::testing::random_word(rng, "abcd", 2, 7);
      if (rng.bernoulli(0.4)) phrase += " " + snlu::testing::random_word(rng, "abcd", 2, 6);
      g.add(phrase, static_cast<int>(rng.below(kTypes.size())));
    }
    std::string text;
    const std::size_t words = 1 + rng.below(7);
    for (std::size_t w = 0; w < words; ++w) text += snlu::testing::random_word(rng, "abcd", 1, 7) + " ";
    // Plant a perturbed phrase so that the fuzzy tiers see near misses.
    auto planted = g.phrases()[rng.below(g.size())].text;
    if (rng.bernoulli(0.7)) planted[rng.below(planted.size())] = "abcd"[rng.below(4)];
    text += planted;
    const auto q = tok(text);
    const auto c1 = windows(match_candidates(q, g, t.tier(1), kAll));
    const auto c2 = windows(match_candidates(q, g, t.tier(2), kAll));
    const auto c3 = windows(match_candidates(q, g, t.tier(3), kAll));
    for (const auto& w : c1) violations += !c2.contains(w);
    for (const auto& w : c2) violations += !c3.contains(w);
  }
  CHECK(violations == 0);
}

TEST_CASE("property: substitution is idempotent") {
  Rng rng(5);
  const auto g = sample();
  const std::vector<std::string> words = {"new", "delhi", "mumbai", "b", "tech", "mba", "in", "manipal",
                                          "university", "colleges", "nwe", "mumbay"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (std::size_t i = 0, n = 1 + rng.below(8); i < n; ++i) text += rng.pick(words) + " ";
    const auto q = tok(text);
    for (int level : {1, 2, 3}) {
      const Tier tier = TierThresholds{}.tier(level);
      const auto once = substitute_tags(q, match_entities(q, g, tier, kAll), kTypes).query;
      const auto twice = substitute_tags(once, match_entities(once, g, tier, kAll), kTypes).query;
      REQUIRE(once == twice);
    }
  }
}

TEST_CASE("gazetteer file parsing") {
  const auto g = parse_gazetteer("# phrase\ttype\nNew Delhi\tcity\n\nB. Tech\tdegree\nnew delhi\tcity\n", kTypes);
  CHECK(g.size() == 2);
  CHECK(g.max_phrase_tokens() == 2);
  CHECK(parse_gazetteer(g.to_tsv(), kTypes).digest() == g.digest());
  CHECK(g.digest().size() == 8);
  CHECK(g.digest() != sample().digest());
  CHECK_THROWS_AS(parse_gazetteer("Pune\tplanet\n", kTypes), ParseError);
  CHECK_THROWS_AS(parse_gazetteer("Pune city\n", kTypes), ParseError);
}

TEST_CASE("entity groups cover every category exactly once") {
  Taxonomy tax;
  tax.add_category("colleges", {"search"});
  tax.add_category("jobs", {"find"});
  for (const auto& t : kTypes) tax.add_entity_type(t);
  const auto groups = EntityGroups::from_json(nlohmann::json::parse(
                                                  R"([{"name": "a", "categories": ["colleges"], "entity_types": ["city", "college"]},
                                                      {"name": "b", "categories": ["jobs"], "entity_types": ["city"]}])"),
                                              tax);
  CHECK(groups.types_for(0) == std::vector<int>{0, 2});
  CHECK(EntityGroups::from_json(groups.to_json(tax), tax).types_for(1) == std::vector<int>{0});
  CHECK(EntityGroups::single(tax).types_for(1).size() == 3);
  CHECK_THROWS_AS(EntityGroups::from_json(nlohmann::json::parse(
                                              R"([{"categories": ["colleges"], "entity_types": ["city"]}])"),
                                          tax),
                  ConfigError);
  CHECK_THROWS_AS(EntityGroups::from_json(nlohmann::json::parse(
                                              R"([{"categories": ["colleges", "jobs"], "entity_types": []},
                                                  {"categories": ["jobs"], "entity_types": []}])"),
                                          tax),
                  ConfigError);
}
