#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexforge {

/// Normalization settings. Recorded alongside every corpus so lexicons
/// declare how their tokens were produced.
struct TokenizerConfig {
  bool stem = false;
  std::set<std::string> stopwords;  // matched after lowercasing, before stemming

  bool operator==(const TokenizerConfig&) const = default;
};

/// Lowercase + alphabetic token extraction over UTF-8 text.
///
/// A codepoint joins a token if it is an ASCII letter or a non-ASCII
/// codepoint outside the common punctuation blocks (Latin-1 punctuation,
/// general punctuation, CJK punctuation). Digits and symbols split tokens.
/// Lowercasing maps ASCII and Latin-1 uppercase letters; other codepoints
/// pass through unchanged. Tokenization is idempotent.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& cfg);

/// Light S-stemmer (ies->y, es->e, trailing s dropped, with the usual
/// us/ss/aes/ees/oes/aies/eies exclusions). Idempotent.
std::string stem_token(std::string_view token);

}  // namespace lexforge
