#include <doctest.h>

#include <cctype>

#include "snlu/errors.hpp"
#include "snlu/rng.hpp"
#include "snlu/text.hpp"

using namespace snlu;

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace and punctuation") {
  const auto q = tokenize(RawQuery("Which are the best colleges in New Delhi?"));
  CHECK(q.tokens == std::vector<std::string>{"which", "are", "the", "best", "colleges", "in", "new", "delhi"});
  CHECK(q.offsets.back() == CharSpan{35, 40});
}

TEST_CASE("single character query") {
  const auto q = tokenize(RawQuery("a"));
  REQUIRE(q.size() == 1);
  CHECK(q.tokens[0] == "a");
  CHECK(q.offsets[0] == CharSpan{0, 1});
}

TEST_CASE("punctuation inside a degree name") {
  const std::string raw = "B. Tech!!";
  const auto q = tokenize(RawQuery(raw));
  CHECK(q.tokens == std::vector<std::string>{"b", "tech"});
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(lower(slice_chars(raw, q.offsets[i])) == q.tokens[i]);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(RawQuery("   "), InvalidQueryError);
  CHECK_THROWS_AS(RawQuery(std::string(513, 'x')), InvalidQueryError);
  CHECK_NOTHROW(RawQuery(std::string(512, 'x')));
  CHECK_THROWS_AS(RawQuery("bad \xff byte"), InvalidQueryError);
  CHECK_THROWS_AS(tokenize(RawQuery("?!...")), EmptyQueryError);
}

TEST_CASE("offsets count code points") {
  const std::string raw = "café in pune";
  const auto q = tokenize(RawQuery(raw));
  REQUIRE(q.size() == 3);
  CHECK(q.offsets[0] == CharSpan{0, 4});
  CHECK(q.offsets[1] == CharSpan{5, 7});
  CHECK(slice_chars(raw, q.offsets[0]) == "café");
}

TEST_CASE("utf8 round trip") {
  const std::string s = "naïve — ünïcode ✓";
  CHECK(encode_utf8(decode_utf8(s)) == s);
}

TEST_CASE("tag tokens") {
  CHECK(make_tag("city") == "<city>");
  CHECK(is_tag_token("<city>"));
  CHECK_FALSE(is_tag_token("city"));
  CHECK_FALSE(is_tag_token("<>"));
  CHECK(tokenize_phrase("B. Tech") == std::vector<std::string>{"b", "tech"});
  CHECK(tokenize_phrase("...").empty());
}

TEST_CASE("property: offsets re-slice to their tokens") {
  Rng rng(41);
  const std::string alphabet = "abcXYZ .,!?-'\t";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string raw;
    const std::size_t len = 1 + rng.below(40);
    for (std::size_t i = 0; i < len; ++i) raw += alphabet[rng.below(alphabet.size())];
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    TokenizedQuery q;
    try {
      q = tokenize(RawQuery(raw));
    } catch (const EmptyQueryError&) {
      continue;
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      REQUIRE(lower(slice_chars(raw, q.offsets[i])) == q.tokens[i]);
      if (i > 0) REQUIRE(q.offsets[i - 1].end <= q.offsets[i].start);
    }
  }
}
