#pragma once

// Pre-trained word vectors in the word2vec text format and exact
// nearest-neighbor queries over them. Vectors are L2-normalized on load, so
// cosine similarity is a plain dot product. Lookups are brute force; the
// bundled desk-scale vocabularies make an index pointless.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylo/error.hpp"
#include "stylo/pos.hpp"
#include "stylo/rng.hpp"
#include "stylo/text.hpp"
#include "stylo/vocab_clusters.hpp"

namespace stylo {

struct EmbeddingTable {
  std::size_t dim = 0;
  std::vector<std::string> words;              // file order, first-wins
  std::vector<std::vector<double>> vectors;    // unit-normalized, parallel
  std::unordered_map<std::string, std::size_t> index;

  bool contains(std::string_view word) const {
    return index.contains(std::string(word));
  }

  std::size_t size() const { return words.size(); }
};

struct Neighbor {
  std::string word;
  double similarity = 0.0;
};

namespace detail {

inline std::vector<std::string_view> split_single_spaces(std::string_view line) {
  // fields split on single spaces; trailing whitespace ignored
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i <= line.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    fields.push_back(line.substr(i, j - i));
    i = j + 1;
    if (j == line.size()) break;
  }
  return fields;
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const std::string tmp(s);
  out = std::strtod(tmp.c_str(), &end);
  return end == tmp.c_str() + tmp.size() && std::isfinite(out);
}

inline void l2_normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
}

}  // namespace detail

inline EmbeddingTable load_embeddings(const std::filesystem::path& path,
                                      std::optional<std::size_t> vocab_limit = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open embeddings file: " + path.string());

  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_single_spaces(line);
    if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
    if (first) {
      first = false;
      // optional "count dim" header
      double a, b;
      if (fields.size() == 2 && detail::parse_double(fields[0], a) &&
          detail::parse_double(fields[1], b)) {
        continue;
      }
    }
    if (vocab_limit && table.words.size() >= *vocab_limit) break;
    if (fields.size() < 2) {
      throw Error("embeddings line " + std::to_string(line_no) + ": too few fields");
    }
    std::vector<double> vec(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!detail::parse_double(fields[i], vec[i - 1])) {
        throw Error("embeddings line " + std::to_string(line_no) +
                    ": unparsable value '" + std::string(fields[i]) + "'");
      }
    }
    if (table.dim == 0) {
      table.dim = vec.size();
    } else if (vec.size() != table.dim) {
      throw Error("embeddings line " + std::to_string(line_no) +
                  ": dimension mismatch (" + std::to_string(vec.size()) + " vs " +
                  std::to_string(table.dim) + ")");
    }
    const std::string word = to_lower(fields[0]);
    if (table.index.contains(word)) continue;  // first occurrence wins
    detail::l2_normalize(vec);
    table.index.emplace(word, table.words.size());
    table.words.push_back(word);
    table.vectors.push_back(std::move(vec));
  }
  if (table.words.empty()) throw Error("embeddings file has no entries: " + path.string());
  return table;
}

// Top-k cosine neighbors of `word`, excluding the word itself. Sorted by
// similarity descending, ties broken lexicographically. If `same_pos_filter`
// is set, candidates whose single-word POS tag differs are skipped before
// ranking. Out-of-vocabulary queries return nullopt: the caller should skip
// the site.
inline std::optional<std::vector<Neighbor>> neighbors(
    const EmbeddingTable& table, std::string_view word, std::size_t k,
    std::optional<PosTag> same_pos_filter = {}) {
  const auto it = table.index.find(to_lower(word));
  if (it == table.index.end()) return std::nullopt;
  const auto& query = table.vectors[it->second];

  std::vector<Neighbor> all;
  all.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == it->second) continue;
    if (same_pos_filter && pos_tag_word(table.words[i]) != *same_pos_filter) continue;
    double dot = 0.0;
    for (std::size_t d = 0; d < table.dim; ++d) dot += query[d] * table.vectors[i][d];
    all.push_back({table.words[i], dot});
  }
  std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.word < b.word;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

// ---------------------------------------------------------------------------
// bundled test table

// Deterministic vectors for the synonym-cluster vocabulary: cluster members
// share a center (plus a POS-axis component), so embedding neighbors are
// same-cluster synonyms first, nearby same-POS words after. Independent of
// any corpus seed; the checked-in data file is this table saved to disk.
inline EmbeddingTable bundled_embedding_table(std::size_t dim = 24) {
  constexpr std::uint64_t kTableSeed = 0x517a10c0ffee;
  EmbeddingTable table;
  table.dim = dim;

  auto random_unit = [&](std::string_view key) {
    Rng rng(derive_seed(kTableSeed, "emb", key));
    std::vector<double> v(dim);
    for (auto& x : v) x = rng.normal();
    detail::l2_normalize(v);
    return v;
  };

  std::vector<std::vector<double>> pos_axes;
  for (std::size_t p = 0; p < kNumPosTags; ++p) {
    pos_axes.push_back(random_unit("pos-axis-" + std::string(kPosTagNames[p])));
  }

  for (std::size_t c = 0; c < vocab::kClusters.size(); ++c) {
    const auto& cluster = vocab::kClusters[c];
    const auto center = random_unit("cluster-" + std::to_string(c));
    const auto& axis = pos_axes[static_cast<std::size_t>(cluster.pos)];
    for (auto word : cluster.words) {
      const auto offset = random_unit("word-" + std::string(word));
      std::vector<double> v(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        v[d] = 0.5 * axis[d] + 0.85 * center[d] + 0.35 * offset[d];
      }
      detail::l2_normalize(v);
      table.index.emplace(std::string(word), table.words.size());
      table.words.emplace_back(word);
      table.vectors.push_back(std::move(v));
    }
  }
  return table;
}

inline void save_embeddings(const EmbeddingTable& table,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write embeddings file: " + path.string());
  out << table.size() << " " << table.dim << "\n";
  char buf[32];
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.words[i];
    for (double x : table.vectors[i]) {
      std::snprintf(buf, sizeof(buf), " %.6f", x);
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace stylo
