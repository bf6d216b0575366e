#pragma once

#include <string>
#include <vector>

#include "lexforge/corpus.hpp"

namespace lexforge {

struct SeedEntry {
  std::string token;
  double shift = 0.0;
};

/// Data-driven seed word lists. target_seeds hold the k largest positive
/// frequency shifts (descending), contrast_seeds the k most negative
/// (ascending); the lists are disjoint by construction and every seed has
/// overall frequency >= min_freq.
struct SeedSet {
  std::vector<SeedEntry> target_seeds;
  std::vector<SeedEntry> contrast_seeds;
  long min_freq = 100;
  long k = 20;
  std::string freq_scope = "overall";  // threshold applied to overall counts
  std::string corpus_id;
};

/// delta p_w = p_w(Target) - p_w(Contrast). Absent sides contribute 0.
double frequency_shift(const Corpus& corpus, const std::string& token);

/// Ranks the vocabulary (overall count >= min_freq) by frequency shift and
/// keeps the top k per direction. Ties break by token order so extraction is
/// deterministic. Fails if either direction has fewer than k candidates.
SeedSet extract_seeds(const Corpus& corpus, long min_freq = 100, long k = 20);

/// TSV with header: token<TAB>shift<TAB>side. Target seeds first.
void save_seeds(const std::string& path, const SeedSet& seeds);
SeedSet load_seeds(const std::string& path);

}  // namespace lexforge
