#include "lexforge/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexforge/common.hpp"

namespace lexforge {

using nlohmann::json;

std::string to_string(Side side) {
  return side == Side::Target ? "target" : "contrast";
}

std::string to_string(Split split) {
  return split == Split::Train ? "train" : "leftout";
}

Side side_from_string(const std::string& name) {
  if (name == "target") return Side::Target;
  if (name == "contrast") return Side::Contrast;
  throw DataError("unknown side: '" + name + "'");
}

Split split_from_string(const std::string& name) {
  if (name == "train") return Split::Train;
  if (name == "leftout") return Split::LeftOut;
  throw DataError("unknown split: '" + name + "'");
}

Corpus Corpus::from_documents(std::vector<Document> documents,
                              TokenizerConfig tokenizer) {
  Corpus corpus;
  corpus.tokenizer_ = std::move(tokenizer);
  for (const Document& doc : documents) {
    if (doc.tokens.empty()) {
      throw DataError("document '" + doc.id +
                      "' has no tokens; discard before building a corpus");
    }
    for (const std::string& token : doc.tokens) {
      TokenCounts& counts = corpus.freq_[token];
      if (doc.side == Side::Target) {
        ++counts.target;
      } else {
        ++counts.contrast;
      }
    }
    if (doc.side == Side::Target) {
      corpus.total_target_ += static_cast<std::int64_t>(doc.tokens.size());
      ++corpus.docs_target_;
    } else {
      corpus.total_contrast_ += static_cast<std::int64_t>(doc.tokens.size());
      ++corpus.docs_contrast_;
    }
  }
  corpus.documents_ = std::move(documents);
  return corpus;
}

std::size_t Corpus::doc_count(Side side) const {
  return side == Side::Target ? docs_target_ : docs_contrast_;
}

std::int64_t Corpus::count(const std::string& token) const {
  auto it = freq_.find(token);
  return it == freq_.end() ? 0 : it->second.total();
}

std::int64_t Corpus::count(const std::string& token, Side side) const {
  auto it = freq_.find(token);
  return it == freq_.end() ? 0 : it->second.on(side);
}

std::vector<std::string> Corpus::vocabulary_sorted() const {
  std::vector<std::string> vocab;
  vocab.reserve(freq_.size());
  for (const auto& [token, counts] : freq_) vocab.push_back(token);
  std::sort(vocab.begin(), vocab.end());
  return vocab;
}

double Corpus::relative_frequency(Side side, const std::string& token) const {
  std::int64_t total = total_tokens(side);
  if (total == 0) return 0.0;
  std::int64_t f = count(token, side);
  if (f == 0) return 0.0;
  return static_cast<double>(f) / static_cast<double>(total);
}

Corpus Corpus::restricted(Split split) const {
  std::vector<Document> kept;
  for (const Document& doc : documents_) {
    if (doc.split == split) kept.push_back(doc);
  }
  return Corpus::from_documents(std::move(kept), tokenizer_);
}

std::string Corpus::content_id() const {
  std::ostringstream payload;
  for (const Document& doc : documents_) {
    payload << doc.id << '\x1f' << to_string(doc.side) << '\x1f'
            << to_string(doc.split) << '\x1f';
    for (const std::string& token : doc.tokens) payload << token << '\x1e';
    payload << '\x1d';
  }
  payload << (tokenizer_.stem ? "stem" : "nostem");
  for (const std::string& word : tokenizer_.stopwords) payload << '\x1c' << word;
  return fnv1a_hex(payload.str());
}

namespace {

bool is_jsonl_path(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  return ext == ".jsonl" || ext == ".json";
}

void ingest_jsonl(const std::string& path, Side side,
                  const TokenizerConfig& tokenizer,
                  std::vector<Document>& out) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  std::string line;
  std::size_t lineno = 0;
  std::string base = std::filesystem::path(path).filename().string();
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": invalid JSON record: " + e.what());
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": record has no \"text\" string");
    }
    Document doc;
    doc.raw_text = record["text"].get<std::string>();
    doc.id = record.contains("id") && record["id"].is_string()
                 ? record["id"].get<std::string>()
                 : base + "#" + std::to_string(lineno);
    doc.tokens = tokenize(doc.raw_text, tokenizer);
    doc.side = side;
    if (!doc.tokens.empty()) out.push_back(std::move(doc));
  }
  if (in.bad()) throw IoError("read failed: " + path);
}

void ingest_plain(const std::string& path, Side side,
                  const TokenizerConfig& tokenizer,
                  std::vector<Document>& out) {
  Document doc;
  doc.raw_text = read_file(path);
  doc.id = path;
  doc.tokens = tokenize(doc.raw_text, tokenizer);
  doc.side = side;
  if (!doc.tokens.empty()) out.push_back(std::move(doc));
}

}  // namespace

Corpus ingest(const std::vector<std::string>& paths, Side side,
              const TokenizerConfig& tokenizer) {
  std::vector<Document> documents;
  for (const std::string& path : paths) {
    if (is_jsonl_path(path)) {
      ingest_jsonl(path, side, tokenizer, documents);
    } else {
      ingest_plain(path, side, tokenizer, documents);
    }
  }
  if (documents.empty()) {
    throw DataError("zero admitted documents for side '" + to_string(side) +
                    "' (all records empty after tokenization?)");
  }
  return Corpus::from_documents(std::move(documents), tokenizer);
}

Corpus merge(const Corpus& a, const Corpus& b) {
  if (!(a.tokenizer() == b.tokenizer())) {
    throw ConfigError("cannot merge corpora with different tokenizer configs");
  }
  std::vector<Document> documents = a.documents();
  documents.insert(documents.end(), b.documents().begin(),
                   b.documents().end());
  return Corpus::from_documents(std::move(documents), a.tokenizer());
}

Corpus split(const Corpus& corpus, const SplitConfig& cfg) {
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0,1), got " +
                      format_double(cfg.train_fraction));
  }
  if (corpus.doc_count() == 0) throw DataError("cannot split an empty corpus");

  std::vector<Document> documents = corpus.documents();
  for (Side side : {Side::Target, Side::Contrast}) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < documents.size(); ++i) {
      if (documents[i].side == side) indices.push_back(i);
    }
    if (indices.empty()) continue;
    std::mt19937_64 rng(cfg.rng_seed ^
                        (side == Side::Target ? 0x746172676574ull
                                              : 0x636f6e7472ull));
    shuffle_vec(indices, rng);
    auto n_train = static_cast<std::size_t>(std::llround(
        cfg.train_fraction * static_cast<double>(indices.size())));
    if (n_train > indices.size()) n_train = indices.size();
    for (std::size_t k = 0; k < indices.size(); ++k) {
      documents[indices[k]].split =
          k < n_train ? Split::Train : Split::LeftOut;
    }
  }
  return Corpus::from_documents(std::move(documents), corpus.tokenizer());
}

double relative_frequency(const Corpus& corpus, Side side,
                          const std::string& token) {
  return corpus.relative_frequency(side, token);
}

void save_corpus(const std::string& path, const Corpus& corpus,
                 const SplitConfig* split_cfg) {
  json j;
  j["format"] = "lexforge-corpus";
  j["version"] = 1;
  j["id"] = corpus.content_id();
  j["tokenizer"] = {{"stem", corpus.tokenizer().stem},
                    {"stopwords", corpus.tokenizer().stopwords}};
  if (split_cfg != nullptr) {
    j["split_config"] = {{"train_fraction", split_cfg->train_fraction},
                         {"rng_seed", split_cfg->rng_seed}};
  }
  json docs = json::array();
  for (const Document& doc : corpus.documents()) {
    docs.push_back({{"id", doc.id},
                    {"raw_text", doc.raw_text},
                    {"tokens", doc.tokens},
                    {"side", to_string(doc.side)},
                    {"split", to_string(doc.split)}});
  }
  j["documents"] = std::move(docs);
  write_file(path, j.dump());
}

Corpus load_corpus(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw IoError("invalid corpus file " + path + ": " + e.what());
  }
  if (!j.contains("format") || j["format"] != "lexforge-corpus") {
    throw IoError(path + " is not a lexforge corpus file");
  }
  TokenizerConfig tokenizer;
  if (j.contains("tokenizer")) {
    tokenizer.stem = j["tokenizer"].value("stem", false);
    if (j["tokenizer"].contains("stopwords")) {
      for (const auto& word : j["tokenizer"]["stopwords"]) {
        tokenizer.stopwords.insert(word.get<std::string>());
      }
    }
  }
  std::vector<Document> documents;
  for (const auto& record : j["documents"]) {
    Document doc;
    doc.id = record["id"].get<std::string>();
    doc.raw_text = record.value("raw_text", std::string());
    doc.tokens = record["tokens"].get<std::vector<std::string>>();
    doc.side = side_from_string(record["side"].get<std::string>());
    doc.split = split_from_string(record["split"].get<std::string>());
    documents.push_back(std::move(doc));
  }
  return Corpus::from_documents(std::move(documents), std::move(tokenizer));
}

}  // namespace lexforge
