#include "lexforge/seeds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexforge/common.hpp"

namespace lexforge {

double frequency_shift(const Corpus& corpus, const std::string& token) {
  return corpus.relative_frequency(Side::Target, token) -
         corpus.relative_frequency(Side::Contrast, token);
}

SeedSet extract_seeds(const Corpus& corpus, long min_freq, long k) {
  if (k < 1) throw ConfigError("seed count k must be >= 1");
  if (corpus.doc_count(Side::Target) == 0 ||
      corpus.doc_count(Side::Contrast) == 0) {
    throw DataError("seed extraction needs documents on both sides");
  }

  std::vector<SeedEntry> positive;
  std::vector<SeedEntry> negative;
  for (const std::string& token : corpus.vocabulary_sorted()) {
    if (corpus.count(token) < min_freq) continue;
    double shift = frequency_shift(corpus, token);
    if (shift > 0.0) {
      positive.push_back({token, shift});
    } else if (shift < 0.0) {
      negative.push_back({token, shift});
    }
  }

  auto take_top = [k](std::vector<SeedEntry>& entries, bool descending,
                      const char* direction) {
    std::sort(entries.begin(), entries.end(),
              [descending](const SeedEntry& a, const SeedEntry& b) {
                if (a.shift != b.shift) {
                  return descending ? a.shift > b.shift : a.shift < b.shift;
                }
                return a.token < b.token;
              });
    if (static_cast<long>(entries.size()) < k) {
      throw DataError("only " + std::to_string(entries.size()) + " " +
                      direction + " seed candidates available, need " +
                      std::to_string(k));
    }
    entries.resize(static_cast<std::size_t>(k));
  };

  SeedSet seeds;
  seeds.min_freq = min_freq;
  seeds.k = k;
  seeds.corpus_id = corpus.content_id();
  take_top(positive, true, "target-side");
  take_top(negative, false, "contrast-side");
  seeds.target_seeds = std::move(positive);
  seeds.contrast_seeds = std::move(negative);
  return seeds;
}

void save_seeds(const std::string& path, const SeedSet& seeds) {
  std::ostringstream out;
  out << "token\tshift\tside\n";
  for (const SeedEntry& entry : seeds.target_seeds) {
    out << entry.token << '\t' << format_double(entry.shift) << "\ttarget\n";
  }
  for (const SeedEntry& entry : seeds.contrast_seeds) {
    out << entry.token << '\t' << format_double(entry.shift) << "\tcontrast\n";
  }
  write_file(path, out.str());

  nlohmann::json meta;
  meta["min_freq"] = seeds.min_freq;
  meta["k"] = seeds.k;
  meta["freq_scope"] = seeds.freq_scope;
  meta["corpus_id"] = seeds.corpus_id;
  write_file(path + ".meta.json", meta.dump(2) + "\n");
}

SeedSet load_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read seeds file: " + path);
  SeedSet seeds;
  std::string line;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_on(line, '\t');
    if (fields.size() != 3) {
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": expected 3 tab-separated fields");
    }
    SeedEntry entry{fields[0], parse_double(fields[1])};
    if (fields[2] == "target") {
      seeds.target_seeds.push_back(std::move(entry));
    } else if (fields[2] == "contrast") {
      seeds.contrast_seeds.push_back(std::move(entry));
    } else {
      throw IoError(path + ":" + std::to_string(lineno) + ": unknown side '" +
                    fields[2] + "'");
    }
  }
  std::string meta_path = path + ".meta.json";
  if (std::ifstream meta_in(meta_path); meta_in) {
    auto meta = nlohmann::json::parse(read_file(meta_path));
    seeds.min_freq = meta.value("min_freq", seeds.min_freq);
    seeds.k = meta.value("k", seeds.k);
    seeds.freq_scope = meta.value("freq_scope", seeds.freq_scope);
    seeds.corpus_id = meta.value("corpus_id", seeds.corpus_id);
  }
  return seeds;
}

}  // namespace lexforge
