#include "lexforge/tokenize.hpp"

#include <cstdint>

namespace lexforge {

namespace {

// Decodes one UTF-8 codepoint starting at text[pos]; advances pos.
// Malformed bytes decode as U+FFFD and advance one byte.
std::uint32_t next_codepoint(std::string_view text, std::size_t& pos) {
  unsigned char lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra;
  std::uint32_t cp;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + static_cast<std::size_t>(extra) >= text.size()) {
    ++pos;
    return 0xFFFD;
  }
  std::uint32_t out = cp;
  for (int i = 1; i <= extra; ++i) {
    unsigned char cont = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(i)]);
    if ((cont & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    out = (out << 6) | (cont & 0x3F);
  }
  pos += static_cast<std::size_t>(extra) + 1;
  return out;
}

bool is_word_codepoint(std::uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  if (cp >= 0xA0 && cp <= 0xBF) return false;   // Latin-1 punctuation/symbols
  if (cp == 0xD7 || cp == 0xF7) return false;   // multiplication/division sign
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;  // supplemental punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp == 0xFFFD) return false;
  return true;
}

std::uint32_t lowercase_codepoint(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

std::string stem_token(std::string_view token) {
  if (ends_with(token, "ies") && !ends_with(token, "eies") &&
      !ends_with(token, "aies")) {
    return std::string(token.substr(0, token.size() - 3)) + "y";
  }
  if (ends_with(token, "es") && !ends_with(token, "aes") &&
      !ends_with(token, "ees") && !ends_with(token, "oes")) {
    return std::string(token.substr(0, token.size() - 1));
  }
  if (ends_with(token, "s") && !ends_with(token, "us") &&
      !ends_with(token, "ss")) {
    return std::string(token.substr(0, token.size() - 1));
  }
  return std::string(token);
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& cfg) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  auto flush = [&]() {
    if (current.empty()) return;
    if (cfg.stopwords.empty() || !cfg.stopwords.count(current)) {
      tokens.push_back(cfg.stem ? stem_token(current) : current);
    }
    current.clear();
  };
  while (pos < text.size()) {
    std::uint32_t cp = next_codepoint(text, pos);
    if (is_word_codepoint(cp)) {
      append_utf8(current, lowercase_codepoint(cp));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace lexforge
