#include "snlu/text.hpp"

#include "snlu/errors.hpp"

namespace snlu {
namespace {

bool is_unicode_space(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_ascii_punct(char32_t c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
         (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
}

char32_t ascii_lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

struct Piece {
  std::u32string text;
  CharSpan span;
};

std::vector<Piece> split(const std::u32string& chars) {
  std::vector<Piece> out;
  Piece cur;
  bool open = false;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t c = chars[i];
    if (is_unicode_space(c) || is_ascii_punct(c)) {
      if (open) {
        cur.span.end = i;
        out.push_back(std::move(cur));
        cur = Piece{};
        open = false;
      }
      continue;
    }
    if (!open) {
      cur.span.start = i;
      open = true;
    }
    cur.text.push_back(ascii_lower(c));
  }
  if (open) {
    cur.span.end = chars.size();
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int extra;
    char32_t cp;
    if (b0 < 0x80) {
      cp = b0;
      extra = 0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      throw InvalidQueryError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + extra >= text.size() && extra > 0) {
      throw InvalidQueryError("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw InvalidQueryError("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

RawQuery::RawQuery(std::string text) : text_(std::move(text)) {
  const std::u32string chars = decode_utf8(text_);
  chars_ = chars.size();
  if (chars_ > kMaxQueryChars) {
    throw InvalidQueryError("query longer than " + std::to_string(kMaxQueryChars) + " characters");
  }
  bool blank = true;
  for (char32_t c : chars) {
    if (!is_unicode_space(c)) {
      blank = false;
      break;
    }
  }
  if (blank) throw InvalidQueryError("query is empty");
}

TokenizedQuery tokenize(const RawQuery& raw) {
  TokenizedQuery q;
  for (auto& piece : split(decode_utf8(raw.text()))) {
    q.tokens.push_back(encode_utf8(piece.text));
    q.offsets.push_back(piece.span);
  }
  if (q.tokens.empty()) throw EmptyQueryError();
  return q;
}

std::vector<std::string> tokenize_phrase(std::string_view text) {
  std::vector<std::string> out;
  for (auto& piece : split(decode_utf8(text))) out.push_back(encode_utf8(piece.text));
  return out;
}

std::string slice_chars(std::string_view text, CharSpan span) {
  const std::u32string chars = decode_utf8(text);
  if (span.start > span.end || span.end > chars.size()) {
    throw IndexError("character span out of range");
  }
  return encode_utf8(std::u32string_view(chars).substr(span.start, span.size()));
}

bool is_tag_token(std::string_view token) {
  return token.size() >= 3 && token.front() == '<' && token.back() == '>';
}

std::string make_tag(std::string_view name) { return "<" + std::string(name) + ">"; }

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

}  // namespace snlu
