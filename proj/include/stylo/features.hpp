#pragma once

// Stylometric feature schemas and extractors.
//
//   writeprints-static  fixed 442-dim lexical/syntactic set, 9 contextual
//                       groups (letters, digits, special chars, punctuation,
//                       POS tags, function words, letter bigrams/trigrams,
//                       hapax+lexical stats)
//   basic-9             nine readability/lexical statistics
//   jgaap-table1        word/char n-gram frequencies with a vocabulary frozen
//                       from a training corpus, plus function words and mean
//                       sentence length
//
// Extraction is a pure function of the text. Every *_freq block is
// normalized by its own denominator and is all-zero when that denominator
// is zero.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/pos.hpp"
#include "stylo/text.hpp"
#include "stylo/wordlists.hpp"

namespace stylo {

inline constexpr std::string_view kWriteprintsSchemaId = "writeprints-static";
inline constexpr std::string_view kBasic9SchemaId = "basic-9";
inline constexpr std::string_view kJgaapSchemaId = "jgaap-table1";

struct FeatureSchema {
  std::string schema_id;
  std::vector<std::string> names;
  std::vector<std::string> groups;  // parallel to names

  std::size_t dim() const { return names.size(); }
};

struct FeatureVector {
  std::string schema_id;
  std::vector<double> values;
};

namespace detail {

inline std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

// Maximal vowel groups with a silent trailing 'e' rule; at least 1.
inline std::size_t count_syllables(std::string_view lower_word) {
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : lower_word) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (groups > 1 && lower_word.size() >= 2 && lower_word.back() == 'e' &&
      !ends_with(lower_word, "le")) {
    --groups;
  }
  return groups == 0 ? 1 : groups;
}

inline void normalize_block(std::vector<double>& values, std::size_t begin,
                            std::size_t count, double denom) {
  if (denom <= 0.0) return;  // block stays all-zero
  for (std::size_t i = begin; i < begin + count; ++i) values[i] /= denom;
}

}  // namespace detail

inline const FeatureSchema& writeprints_schema() {
  static const FeatureSchema schema = [] {
    FeatureSchema s;
    s.schema_id = std::string(kWriteprintsSchemaId);
    auto push = [&s](std::string name, std::string_view group) {
      s.names.push_back(std::move(name));
      s.groups.emplace_back(group);
    };
    for (char c = 'a'; c <= 'z'; ++c) push(std::string("letter_freq_") + c, "letters");
    for (char c = '0'; c <= '9'; ++c) push(std::string("digit_freq_") + c, "digits");
    for (char c : wordlists::kSpecialChars)
      push(std::string("special_freq_") + c, "special-characters");
    for (char c : wordlists::kPunctuation)
      push(std::string("punct_freq_") + c, "punctuation");
    for (auto tag : kPosTagNames) push("pos_freq_" + std::string(tag), "pos-tags");
    for (auto w : wordlists::kFunctionWords)
      push("func_word_" + std::string(w), "function-words");
    for (auto g : wordlists::kTopLetterBigrams)
      push("bigram_" + std::string(g), "letter-bigrams");
    for (auto g : wordlists::kTopLetterTrigrams)
      push("trigram_" + std::string(g), "letter-trigrams");
    push("hapax_ratio", "hapax-lexical");
    push("total_words", "hapax-lexical");
    push("avg_word_length", "hapax-lexical");
    return s;
  }();
  return schema;
}

inline const FeatureSchema& basic9_schema() {
  static const FeatureSchema schema = [] {
    FeatureSchema s;
    s.schema_id = std::string(kBasic9SchemaId);
    s.names = {"unique_words",       "lexical_complexity", "sentence_count",
               "avg_sentence_length", "avg_syllables_per_word", "gunning_fog",
               "char_count",         "letter_count",       "flesch_reading_ease"};
    s.groups.assign(s.names.size(), "basic");
    return s;
  }();
  return schema;
}

inline FeatureVector extract_writeprints(const std::string& text) {
  const Tokens tokens = tokenize(text);
  if (tokens.words.empty()) {
    throw Error("writeprints extraction requires at least one word");
  }
  const FeatureSchema& schema = writeprints_schema();
  FeatureVector fv{schema.schema_id, std::vector<double>(schema.dim(), 0.0)};
  auto& v = fv.values;

  // fixed block offsets, matching writeprints_schema() construction order
  constexpr std::size_t kLetters = 0;
  constexpr std::size_t kDigits = kLetters + 26;
  constexpr std::size_t kSpecial = kDigits + 10;
  constexpr std::size_t kPunct = kSpecial + 21;
  constexpr std::size_t kPos = kPunct + 11;
  constexpr std::size_t kFunc = kPos + kNumPosTags;
  constexpr std::size_t kBigrams = kFunc + 300;
  constexpr std::size_t kTrigrams = kBigrams + 39;
  constexpr std::size_t kHapax = kTrigrams + 20;

  double letter_count = 0.0, digit_count = 0.0;
  for (char c : tokens.chars) {
    const char lc = ascii_lower(c);
    if (lc >= 'a' && lc <= 'z') {
      v[kLetters + static_cast<std::size_t>(lc - 'a')] += 1.0;
      ++letter_count;
    } else if (lc >= '0' && lc <= '9') {
      v[kDigits + static_cast<std::size_t>(lc - '0')] += 1.0;
      ++digit_count;
    }
    for (std::size_t i = 0; i < wordlists::kSpecialChars.size(); ++i) {
      if (c == wordlists::kSpecialChars[i]) v[kSpecial + i] += 1.0;
    }
    for (std::size_t i = 0; i < wordlists::kPunctuation.size(); ++i) {
      if (c == wordlists::kPunctuation[i]) v[kPunct + i] += 1.0;
    }
  }
  const double char_count = static_cast<double>(detail::codepoint_count(tokens.chars));
  detail::normalize_block(v, kLetters, 26, letter_count);
  detail::normalize_block(v, kDigits, 10, digit_count);
  detail::normalize_block(v, kSpecial, 21, char_count);
  detail::normalize_block(v, kPunct, 11, char_count);

  const double word_count = static_cast<double>(tokens.words.size());
  for (PosTag tag : pos_tag(tokens.words)) {
    v[kPos + static_cast<std::size_t>(tag)] += 1.0;
  }
  detail::normalize_block(v, kPos, kNumPosTags, word_count);

  static const std::unordered_map<std::string_view, std::size_t> func_index = [] {
    std::unordered_map<std::string_view, std::size_t> m;
    for (std::size_t i = 0; i < wordlists::kFunctionWords.size(); ++i)
      m.emplace(wordlists::kFunctionWords[i], i);
    return m;
  }();
  static const std::unordered_map<std::string_view, std::size_t> bigram_index = [] {
    std::unordered_map<std::string_view, std::size_t> m;
    for (std::size_t i = 0; i < wordlists::kTopLetterBigrams.size(); ++i)
      m.emplace(wordlists::kTopLetterBigrams[i], i);
    return m;
  }();
  static const std::unordered_map<std::string_view, std::size_t> trigram_index = [] {
    std::unordered_map<std::string_view, std::size_t> m;
    for (std::size_t i = 0; i < wordlists::kTopLetterTrigrams.size(); ++i)
      m.emplace(wordlists::kTopLetterTrigrams[i], i);
    return m;
  }();

  std::unordered_map<std::string, std::size_t> word_counts;
  double total_word_length = 0.0;
  double bigram_total = 0.0, trigram_total = 0.0;
  for (const auto& word : tokens.words) {
    const std::string lower = to_lower(word);
    ++word_counts[lower];
    total_word_length += static_cast<double>(detail::codepoint_count(word));
    if (auto it = func_index.find(lower); it != func_index.end()) {
      v[kFunc + it->second] += 1.0;
    }
    // letter n-grams within maximal letter runs of the word
    std::size_t run_start = 0;
    const std::size_t len = lower.size();
    for (std::size_t i = 0; i <= len; ++i) {
      if (i == len || !is_ascii_letter(lower[i])) {
        const std::size_t run_len = i - run_start;
        if (run_len >= 2) {
          bigram_total += static_cast<double>(run_len - 1);
          for (std::size_t j = run_start; j + 1 < i; ++j) {
            if (auto it = bigram_index.find(std::string_view(lower).substr(j, 2));
                it != bigram_index.end()) {
              v[kBigrams + it->second] += 1.0;
            }
          }
        }
        if (run_len >= 3) {
          trigram_total += static_cast<double>(run_len - 2);
          for (std::size_t j = run_start; j + 2 < i; ++j) {
            if (auto it = trigram_index.find(std::string_view(lower).substr(j, 3));
                it != trigram_index.end()) {
              v[kTrigrams + it->second] += 1.0;
            }
          }
        }
        run_start = i + 1;
      }
    }
  }
  detail::normalize_block(v, kFunc, 300, word_count);
  detail::normalize_block(v, kBigrams, 39, bigram_total);
  detail::normalize_block(v, kTrigrams, 20, trigram_total);

  double hapax = 0.0;
  for (const auto& [w, n] : word_counts)
    if (n == 1) ++hapax;
  v[kHapax] = hapax / word_count;
  v[kHapax + 1] = word_count;
  v[kHapax + 2] = total_word_length / word_count;
  return fv;
}

inline FeatureVector extract_basic9(const std::string& text) {
  const Tokens tokens = tokenize(text);
  if (tokens.sentences.empty()) {
    throw Error("basic-9 extraction requires at least one sentence");
  }
  const double words = static_cast<double>(tokens.words.size());
  const double sentences = static_cast<double>(tokens.sentences.size());

  std::unordered_map<std::string, std::size_t> uniq;
  double syllables = 0.0, complex_words = 0.0;
  for (const auto& w : tokens.words) {
    const std::string lower = to_lower(w);
    ++uniq[lower];
    const std::size_t s = detail::count_syllables(lower);
    syllables += static_cast<double>(s);
    if (s >= 3) ++complex_words;
  }
  double letters = 0.0;
  for (char c : tokens.chars)
    if (is_ascii_letter(c)) ++letters;

  const double avg_sentence_len = words / sentences;
  const double syll_per_word = syllables / words;

  FeatureVector fv{std::string(kBasic9SchemaId), std::vector<double>(9, 0.0)};
  fv.values[0] = static_cast<double>(uniq.size());
  fv.values[1] = static_cast<double>(uniq.size()) / words;
  fv.values[2] = sentences;
  fv.values[3] = avg_sentence_len;
  fv.values[4] = syll_per_word;
  fv.values[5] = 0.4 * (avg_sentence_len + 100.0 * (complex_words / words));
  fv.values[6] = static_cast<double>(detail::codepoint_count(tokens.chars));
  fv.values[7] = letters;
  fv.values[8] = 206.835 - 1.015 * avg_sentence_len - 84.6 * syll_per_word;
  return fv;
}

// ---------------------------------------------------------------------------
// jgaap-table1

struct JgaapSchema {
  FeatureSchema schema;  // empty until built
  std::vector<std::string> word_unigrams;
  std::vector<std::string> word_bigrams;
  std::vector<std::string> char_bigrams;
  std::vector<std::string> char_trigrams;
};

namespace detail {

// Table-1 preprocessing: lowercase, strip punctuation, normalize whitespace.
inline std::string jgaap_preprocess(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    const char lc = ascii_lower(c);
    if (is_ascii_letter(lc) || is_ascii_digit(lc)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(lc);
    } else if (is_ascii_space(c)) {
      pending_space = true;
    }
    // anything else is punctuation: stripped
  }
  return out;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    if (j > i) words.emplace_back(s.substr(i, j - i));
    i = j + 1;
  }
  return words;
}

template <class Counter>
std::vector<std::string> top_by_count(const Counter& counts, std::size_t v) {
  std::vector<std::pair<std::string, std::size_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < items.size() && i < v; ++i) out.push_back(items[i].first);
  return out;
}

}  // namespace detail

inline JgaapSchema build_jgaap_schema(const std::vector<std::string>& train_texts,
                                      std::size_t vocab_per_family = 50) {
  if (train_texts.empty()) throw Error("jgaap schema needs at least one training text");
  std::map<std::string, std::size_t> uni, wbi, cbi, ctri;
  for (const auto& text : train_texts) {
    const std::string p = detail::jgaap_preprocess(text);
    const auto words = detail::split_words(p);
    for (const auto& w : words) ++uni[w];
    for (std::size_t i = 0; i + 1 < words.size(); ++i) ++wbi[words[i] + " " + words[i + 1]];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) ++cbi[p.substr(i, 2)];
    for (std::size_t i = 0; i + 2 < p.size(); ++i) ++ctri[p.substr(i, 3)];
  }

  JgaapSchema js;
  js.word_unigrams = detail::top_by_count(uni, vocab_per_family);
  js.word_bigrams = detail::top_by_count(wbi, vocab_per_family);
  js.char_bigrams = detail::top_by_count(cbi, vocab_per_family);
  js.char_trigrams = detail::top_by_count(ctri, vocab_per_family);

  FeatureSchema& s = js.schema;
  s.schema_id = std::string(kJgaapSchemaId);
  auto push = [&s](std::string name, std::string_view group) {
    s.names.push_back(std::move(name));
    s.groups.emplace_back(group);
  };
  for (const auto& g : js.word_unigrams) push("word_unigram_" + g, "word-unigrams");
  for (const auto& g : js.word_bigrams) push("word_bigram_" + g, "word-bigrams");
  for (const auto& g : js.char_bigrams) push("char_bigram_" + g, "char-bigrams");
  for (const auto& g : js.char_trigrams) push("char_trigram_" + g, "char-trigrams");
  for (auto w : wordlists::kFunctionWords) push("func_word_" + std::string(w), "function-words");
  push("mean_sentence_length", "sentence");
  return js;
}

inline FeatureVector extract_jgaap(const JgaapSchema& js, const std::string& text) {
  if (js.schema.names.empty()) {
    throw Error("jgaap schema vocabulary has not been built");
  }
  const std::string p = detail::jgaap_preprocess(text);
  const auto words = detail::split_words(p);
  if (words.empty()) throw Error("jgaap extraction requires at least one word");

  FeatureVector fv{js.schema.schema_id, std::vector<double>(js.schema.dim(), 0.0)};
  auto& v = fv.values;
  std::size_t off = 0;

  auto count_block = [&v](std::size_t base, const std::vector<std::string>& vocab,
                          auto&& counter, double denom) {
    std::unordered_map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);
    counter([&](std::string_view gram) {
      if (auto it = index.find(gram); it != index.end()) v[base + it->second] += 1.0;
    });
    detail::normalize_block(v, base, vocab.size(), denom);
  };

  count_block(off, js.word_unigrams,
              [&](auto&& hit) {
                for (const auto& w : words) hit(std::string_view(w));
              },
              static_cast<double>(words.size()));
  off += js.word_unigrams.size();

  std::vector<std::string> bigrams;
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    bigrams.push_back(words[i] + " " + words[i + 1]);
  count_block(off, js.word_bigrams,
              [&](auto&& hit) {
                for (const auto& b : bigrams) hit(std::string_view(b));
              },
              static_cast<double>(bigrams.size()));
  off += js.word_bigrams.size();

  count_block(off, js.char_bigrams,
              [&](auto&& hit) {
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                  hit(std::string_view(p).substr(i, 2));
              },
              p.size() >= 2 ? static_cast<double>(p.size() - 1) : 0.0);
  off += js.char_bigrams.size();

  count_block(off, js.char_trigrams,
              [&](auto&& hit) {
                for (std::size_t i = 0; i + 2 < p.size(); ++i)
                  hit(std::string_view(p).substr(i, 3));
              },
              p.size() >= 3 ? static_cast<double>(p.size() - 2) : 0.0);
  off += js.char_trigrams.size();

  {
    std::unordered_map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < wordlists::kFunctionWords.size(); ++i)
      index.emplace(wordlists::kFunctionWords[i], i);
    for (const auto& w : words) {
      if (auto it = index.find(std::string_view(w)); it != index.end())
        v[off + it->second] += 1.0;
    }
    detail::normalize_block(v, off, wordlists::kFunctionWords.size(),
                            static_cast<double>(words.size()));
    off += wordlists::kFunctionWords.size();
  }

  // sentence structure is measured on the raw text, before punctuation
  // stripping removes the boundaries
  const Tokens raw = tokenize(text);
  v[off] = raw.sentences.empty()
               ? 0.0
               : static_cast<double>(raw.words.size()) /
                     static_cast<double>(raw.sentences.size());
  return fv;
}

// The 9 contextual groups of the writeprints-static schema, as
// group label -> ordered feature indices. Partition of all indices.
inline std::map<std::string, std::vector<std::size_t>> contextual_groups(
    const FeatureSchema& schema) {
  if (schema.schema_id != kWriteprintsSchemaId) {
    throw Error("contextual groups are defined for the writeprints-static schema");
  }
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < schema.dim(); ++i) {
    groups[schema.groups[i]].push_back(i);
  }
  return groups;
}

// ---------------------------------------------------------------------------
// schema persistence

inline nlohmann::json schema_to_json(const FeatureSchema& s) {
  return nlohmann::json{
      {"schema_id", s.schema_id}, {"names", s.names}, {"groups", s.groups}};
}

inline nlohmann::json jgaap_schema_to_json(const JgaapSchema& js) {
  nlohmann::json j = schema_to_json(js.schema);
  j["word_unigrams"] = js.word_unigrams;
  j["word_bigrams"] = js.word_bigrams;
  j["char_bigrams"] = js.char_bigrams;
  j["char_trigrams"] = js.char_trigrams;
  return j;
}

inline JgaapSchema jgaap_schema_from_json(const nlohmann::json& j) {
  JgaapSchema js;
  js.schema.schema_id = j.at("schema_id").get<std::string>();
  js.schema.names = j.at("names").get<std::vector<std::string>>();
  js.schema.groups = j.at("groups").get<std::vector<std::string>>();
  js.word_unigrams = j.at("word_unigrams").get<std::vector<std::string>>();
  js.word_bigrams = j.at("word_bigrams").get<std::vector<std::string>>();
  js.char_bigrams = j.at("char_bigrams").get<std::vector<std::string>>();
  js.char_trigrams = j.at("char_trigrams").get<std::vector<std::string>>();
  return js;
}

// ---------------------------------------------------------------------------
// extractor handle usable for any schema

class FeatureExtractor {
 public:
  static FeatureExtractor writeprints() {
    return FeatureExtractor(std::string(kWriteprintsSchemaId), nullptr);
  }
  static FeatureExtractor basic9() {
    return FeatureExtractor(std::string(kBasic9SchemaId), nullptr);
  }
  static FeatureExtractor jgaap(JgaapSchema schema) {
    auto shared = std::make_shared<const JgaapSchema>(std::move(schema));
    return FeatureExtractor(std::string(kJgaapSchemaId), std::move(shared));
  }

  const std::string& schema_id() const { return schema_id_; }

  const FeatureSchema& schema() const {
    if (jgaap_) return jgaap_->schema;
    if (schema_id_ == kWriteprintsSchemaId) return writeprints_schema();
    return basic9_schema();
  }

  FeatureVector extract(const std::string& text) const {
    if (jgaap_) return extract_jgaap(*jgaap_, text);
    if (schema_id_ == kWriteprintsSchemaId) return extract_writeprints(text);
    return extract_basic9(text);
  }

 private:
  FeatureExtractor(std::string id, std::shared_ptr<const JgaapSchema> jgaap)
      : schema_id_(std::move(id)), jgaap_(std::move(jgaap)) {}

  std::string schema_id_;
  std::shared_ptr<const JgaapSchema> jgaap_;
};

inline std::vector<std::vector<double>> extract_matrix(
    const FeatureExtractor& extractor, const std::vector<const Document*>& docs) {
  std::vector<std::vector<double>> X;
  X.reserve(docs.size());
  for (const auto* d : docs) X.push_back(extractor.extract(d->text).values);
  return X;
}

}  // namespace stylo
