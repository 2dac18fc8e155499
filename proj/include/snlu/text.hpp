#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace snlu {

/// Half-open range of Unicode code-point indices into a raw query.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool overlaps(const CharSpan& o) const { return start < o.end && o.start < end; }
  auto operator<=>(const CharSpan&) const = default;
};

inline constexpr std::size_t kMaxQueryChars = 512;

/// A user query as typed. Construction validates: non-empty after trimming,
/// at most kMaxQueryChars code points, valid UTF-8.
class RawQuery {
 public:
  explicit RawQuery(std::string text);

  const std::string& text() const { return text_; }
  std::size_t char_count() const { return chars_; }

 private:
  std::string text_;
  std::size_t chars_ = 0;
};

struct TokenizedQuery {
  std::vector<std::string> tokens;
  std::vector<CharSpan> offsets;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const TokenizedQuery&) const = default;
};

/// Lowercases (ASCII), splits on Unicode whitespace and ASCII punctuation,
/// drops the punctuation. Throws EmptyQueryError if nothing survives.
TokenizedQuery tokenize(const RawQuery& raw);

/// Tokenizes a phrase (gazetteer entry, rule pattern) the same way queries
/// are tokenized. Returns an empty vector for all-punctuation input.
std::vector<std::string> tokenize_phrase(std::string_view text);

std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

/// Substring by code-point range.
std::string slice_chars(std::string_view text, CharSpan span);

/// Entity and category placeholder tokens look like `<name>`; the tokenizer
/// never produces them since it drops '<' and '>'.
bool is_tag_token(std::string_view token);
std::string make_tag(std::string_view name);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

}  // namespace snlu
