#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexforge/tokenize.hpp"

namespace lexforge {

enum class Side { Target, Contrast };
enum class Split { Train, LeftOut };

std::string to_string(Side side);
std::string to_string(Split split);
Side side_from_string(const std::string& name);
Split split_from_string(const std::string& name);

struct Document {
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;  // non-empty for admitted documents
  Side side = Side::Target;
  Split split = Split::Train;  // documents start in Train; split() reassigns
};

struct TokenCounts {
  std::int64_t target = 0;
  std::int64_t contrast = 0;
  std::int64_t total() const { return target + contrast; }
  std::int64_t on(Side side) const {
    return side == Side::Target ? target : contrast;
  }
};

struct SplitConfig {
  double train_fraction = 0.8;
  std::uint64_t rng_seed = 0;
};

/// Immutable labeled document collection with frequency tables. All
/// downstream stages treat a Corpus as a read-only value.
class Corpus {
 public:
  Corpus() = default;

  /// Builds frequency tables over the given documents. Documents with no
  /// tokens are rejected (they must be discarded at ingestion).
  static Corpus from_documents(std::vector<Document> documents,
                               TokenizerConfig tokenizer = {});

  const std::vector<Document>& documents() const { return documents_; }
  const TokenizerConfig& tokenizer() const { return tokenizer_; }

  std::size_t doc_count() const { return documents_.size(); }
  std::size_t doc_count(Side side) const;

  std::size_t vocab_size() const { return freq_.size(); }
  bool contains(const std::string& token) const { return freq_.count(token) > 0; }

  std::int64_t count(const std::string& token) const;
  std::int64_t count(const std::string& token, Side side) const;
  std::int64_t total_tokens() const { return total_target_ + total_contrast_; }
  std::int64_t total_tokens(Side side) const {
    return side == Side::Target ? total_target_ : total_contrast_;
  }

  const std::unordered_map<std::string, TokenCounts>& freq() const {
    return freq_;
  }

  /// Vocabulary in lexicographic order; the deterministic iteration order
  /// used whenever token order can affect output.
  std::vector<std::string> vocabulary_sorted() const;

  /// p_w = f_w / sum_w' f_w' over one side. Returns 0 for tokens absent
  /// from that side (documented convention).
  double relative_frequency(Side side, const std::string& token) const;

  /// Copy containing only documents of the given split (frequency tables
  /// recomputed over the subset).
  Corpus restricted(Split split) const;

  /// Stable content hash used for provenance stamping.
  std::string content_id() const;

 private:
  std::vector<Document> documents_;
  TokenizerConfig tokenizer_;
  std::unordered_map<std::string, TokenCounts> freq_;
  std::int64_t total_target_ = 0;
  std::int64_t total_contrast_ = 0;
  std::size_t docs_target_ = 0;
  std::size_t docs_contrast_ = 0;
};

/// Reads the given files as one side of a corpus. Files ending in .jsonl or
/// .json are parsed as JSON-lines ({"id": ..., "text": ...}); anything else
/// is one plain-text document per file. Records that tokenize to nothing are
/// discarded; if nothing at all is admitted the call fails.
Corpus ingest(const std::vector<std::string>& paths, Side side,
              const TokenizerConfig& tokenizer);

/// Joins two single-side corpora into one (tokenizer configs must match).
Corpus merge(const Corpus& a, const Corpus& b);

/// Assigns Train/LeftOut per document, stratified by side: per side the
/// document indices are shuffled with a seeded generator and the first
/// round(train_fraction * n) go to Train. Deterministic given (corpus, cfg).
Corpus split(const Corpus& corpus, const SplitConfig& cfg);

double relative_frequency(const Corpus& corpus, Side side,
                          const std::string& token);

void save_corpus(const std::string& path, const Corpus& corpus,
                 const SplitConfig* split_cfg = nullptr);
Corpus load_corpus(const std::string& path);

}  // namespace lexforge
