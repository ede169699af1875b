#pragma once

// Author-labeled plain-text corpora: loading from disk, author grouping,
// deterministic stratified train/test splits. Directory layout is
// <root>/<author_id>/<doc>.txt; document ids are "<author_id>/<stem>".
// All corpus values are immutable after construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "stylo/error.hpp"
#include "stylo/rng.hpp"
#include "stylo/text.hpp"

namespace stylo {

struct Document {
  std::string id;
  std::string author_id;
  std::string text;
  std::size_t word_count = 0;
};

struct Corpus {
  std::vector<Document> documents;  // sorted by (author_id, id)
  std::vector<std::string> authors;

  const Document& document(std::string_view id) const {
    for (const auto& d : documents)
      if (d.id == id) return d;
    throw Error("unknown document id: " + std::string(id));
  }
};

struct Split {
  std::vector<std::string> train;
  std::vector<std::string> test;
  std::uint64_t seed = 0;
};

namespace detail {

inline bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    if (c < 0x80) {
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      if (c < 0xC2) return false;  // overlong
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      if (c > 0xF4) return false;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += len;
  }
  return true;
}

inline std::string normalize_newlines(std::string text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      out.push_back('\n');
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

inline bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ascii_space(c); });
}

inline void sort_corpus(Corpus& c) {
  std::sort(c.documents.begin(), c.documents.end(),
            [](const Document& a, const Document& b) {
              if (a.author_id != b.author_id) return a.author_id < b.author_id;
              return a.id < b.id;
            });
  std::sort(c.authors.begin(), c.authors.end());
}

}  // namespace detail

inline Corpus load_corpus(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw Error("corpus root is not a directory: " + root.string());
  }

  Corpus corpus;
  std::vector<fs::path> author_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) author_dirs.push_back(entry.path());
  }
  std::sort(author_dirs.begin(), author_dirs.end());
  if (author_dirs.empty()) {
    throw Error("corpus root contains no author directories: " + root.string());
  }

  for (const auto& dir : author_dirs) {
    const std::string author = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw Error("author directory has no .txt documents: " + author);
    }
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw Error("cannot read file: " + file.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string text = buf.str();
      if (!detail::is_valid_utf8(text)) {
        throw Error("file is not valid UTF-8: " + file.string());
      }
      text = detail::normalize_newlines(std::move(text));
      if (detail::is_blank(text)) {
        throw Error("file contains only whitespace: " + file.string());
      }
      Document doc;
      doc.id = author + "/" + file.stem().string();
      doc.author_id = author;
      doc.word_count = tokenize(text).words.size();
      doc.text = std::move(text);
      corpus.documents.push_back(std::move(doc));
    }
    corpus.authors.push_back(author);
  }
  detail::sort_corpus(corpus);
  return corpus;
}

// Partitions authors into consecutive groups of `group_size`, ordered by
// total word count descending (author id ascending on ties). A trailing
// remainder group is kept only if it still has at least two authors.
inline std::vector<Corpus> group_authors(const Corpus& corpus, std::size_t group_size) {
  if (group_size < 2) throw Error("group_size must be at least 2");
  if (group_size > corpus.authors.size()) {
    throw Error("group_size exceeds author count");
  }

  std::map<std::string, std::size_t> words;
  for (const auto& d : corpus.documents) words[d.author_id] += d.word_count;
  std::vector<std::string> order = corpus.authors;
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     if (words[a] != words[b]) return words[a] > words[b];
                     return a < b;
                   });

  std::vector<Corpus> groups;
  for (std::size_t i = 0; i < order.size(); i += group_size) {
    const std::size_t n = std::min(group_size, order.size() - i);
    if (n < 2) break;  // a 1-author group is degenerate
    Corpus g;
    std::set<std::string> members(order.begin() + i, order.begin() + i + n);
    for (const auto& d : corpus.documents) {
      if (members.contains(d.author_id)) g.documents.push_back(d);
    }
    g.authors.assign(members.begin(), members.end());
    detail::sort_corpus(g);
    groups.push_back(std::move(g));
  }
  return groups;
}

// Stratified per-author split. Per author, round-half-up of
// train_fraction * docs go to train, clamped so both sides stay non-empty.
inline Split split_corpus(const Corpus& corpus, double train_fraction,
                          std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error("train_fraction must lie in (0, 1)");
  }
  std::map<std::string, std::vector<std::string>> by_author;
  for (const auto& d : corpus.documents) by_author[d.author_id].push_back(d.id);

  Split split;
  split.seed = seed;
  for (const auto& [author, ids] : by_author) {
    if (ids.size() < 2) {
      throw Error("author has fewer than 2 documents: " + author);
    }
    std::vector<std::string> shuffled = ids;  // already sorted (corpus order)
    Rng rng(derive_seed(seed, "split", author));
    rng.shuffle(shuffled);
    auto n_train = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(ids.size()) + 0.5));
    n_train = std::clamp<std::size_t>(n_train, 1, ids.size() - 1);
    split.train.insert(split.train.end(), shuffled.begin(), shuffled.begin() + n_train);
    split.test.insert(split.test.end(), shuffled.begin() + n_train, shuffled.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

inline nlohmann::json split_to_json(const Split& s) {
  return nlohmann::json{{"seed", s.seed}, {"train", s.train}, {"test", s.test}};
}

inline Split split_from_json(const nlohmann::json& j) {
  Split s;
  s.seed = j.at("seed").get<std::uint64_t>();
  s.train = j.at("train").get<std::vector<std::string>>();
  s.test = j.at("test").get<std::vector<std::string>>();
  return s;
}

// Convenience views used throughout training and evaluation.
inline std::vector<const Document*> documents_in(const Corpus& corpus,
                                                 const std::vector<std::string>& ids) {
  std::unordered_map<std::string_view, const Document*> index;
  for (const auto& d : corpus.documents) index.emplace(d.id, &d);
  std::vector<const Document*> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    auto it = index.find(id);
    if (it == index.end()) throw Error("split references unknown document: " + id);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace stylo
