#pragma once

// Desk-scale synthetic corpus generator. Each author owns a style profile
// derived from the seed: weighted preferences over synonym-cluster members,
// favorite function words, sentence-length and punctuation habits, and a
// numeral habit. Word choice inside shared clusters is the dominant signal,
// so authors are separable in stylometric feature space while documents stay
// superficially similar in topic.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/pos.hpp"
#include "stylo/rng.hpp"
#include "stylo/vocab_clusters.hpp"

namespace stylo {

namespace detail {

struct AuthorStyle {
  // weight[cluster][member]
  std::vector<std::vector<double>> member_pref;
  std::vector<double> cluster_pref;
  double mean_sentence_len = 10.0;
  double p_exclaim = 0.05;
  double p_question = 0.05;
  double p_adjective = 0.5;
  double p_adverb = 0.4;
  double p_semicolon = 0.05;
  double p_numeral = 0.05;
  std::vector<double> det_pref, adp_pref, conj_pref, pron_pref, opener_pref;
};

inline constexpr std::string_view kDetChoices[] = {"the", "a", "this", "that",
                                                   "every", "some"};
inline constexpr std::string_view kAdpChoices[] = {"in", "on", "at", "near",
                                                   "by", "over", "under", "through"};
inline constexpr std::string_view kConjChoices[] = {"and", "but", "so", "yet"};
inline constexpr std::string_view kPronChoices[] = {"he", "she", "they", "we", "i"};
inline constexpr std::string_view kOpenerChoices[] = {
    "often", "sometimes", "usually", "perhaps", "indeed", "still", "however", "soon"};

inline std::vector<double> style_weights(Rng& rng, std::size_t n, double strength) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = std::exp(strength * rng.normal());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline std::size_t weighted_pick(Rng& rng, const std::vector<double>& weights) {
  double u = rng.uniform();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    u -= weights[i];
    if (u < 0.0) return i;
  }
  return weights.size() - 1;
}

inline AuthorStyle make_author_style(std::uint64_t seed, std::size_t author_index) {
  Rng rng(derive_seed(seed, "synth-author", author_index));
  AuthorStyle s;
  const auto& clusters = vocab::kClusters;
  s.member_pref.reserve(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    s.member_pref.push_back(style_weights(rng, vocab::kClusterSize, 2.2));
  }
  s.cluster_pref = style_weights(rng, clusters.size(), 0.9);
  s.mean_sentence_len = 7.0 + 8.0 * rng.uniform();
  s.p_exclaim = 0.12 * rng.uniform();
  s.p_question = 0.10 * rng.uniform();
  s.p_adjective = 0.3 + 0.5 * rng.uniform();
  s.p_adverb = 0.2 + 0.5 * rng.uniform();
  s.p_semicolon = 0.12 * rng.uniform();
  s.p_numeral = 0.12 * rng.uniform();
  s.det_pref = style_weights(rng, std::size(kDetChoices), 1.4);
  s.adp_pref = style_weights(rng, std::size(kAdpChoices), 1.4);
  s.conj_pref = style_weights(rng, std::size(kConjChoices), 1.4);
  s.pron_pref = style_weights(rng, std::size(kPronChoices), 1.4);
  s.opener_pref = style_weights(rng, std::size(kOpenerChoices), 1.4);
  return s;
}

class SentenceWriter {
 public:
  SentenceWriter(const AuthorStyle& style, Rng& rng) : style_(style), rng_(rng) {
    // per-POS cluster index lists
    for (std::size_t c = 0; c < vocab::kClusters.size(); ++c) {
      by_pos_[static_cast<int>(vocab::kClusters[c].pos)].push_back(c);
    }
  }

  std::string sentence() {
    const double len = style_.mean_sentence_len;
    // clause count grows with the author's preferred length
    int clauses = 1;
    if (len > 9.0 && rng_.uniform() < (len - 9.0) / 8.0) ++clauses;
    if (rng_.uniform() < 0.15) ++clauses;

    std::string out;
    for (int cl = 0; cl < clauses; ++cl) {
      if (cl > 0) {
        if (rng_.uniform() < style_.p_semicolon) {
          out += "; ";
        } else {
          out += ", ";
          out += pick(kConjChoices, style_.conj_pref);
          out += " ";
        }
      }
      out += clause(cl == 0);
    }
    const double u = rng_.uniform();
    if (u < style_.p_exclaim) {
      out += "!";
    } else if (u < style_.p_exclaim + style_.p_question) {
      out += "?";
    } else {
      out += ".";
    }
    return out;
  }

  std::size_t words_emitted() const { return words_; }

 private:
  std::string clause(bool opening) {
    std::string out;
    bool capitalize = opening;
    auto emit = [&](std::string w) {
      if (capitalize && !w.empty()) {
        w[0] = static_cast<char>(w[0] - 'a' + 'A');
        capitalize = false;
      }
      if (!out.empty()) out += " ";
      out += w;
      ++words_;
    };

    if (opening && rng_.uniform() < 0.25) {
      emit(std::string(pick(kOpenerChoices, style_.opener_pref)));
      out += ",";
    }

    const bool pronoun_subject = rng_.uniform() < 0.22;
    bool third_singular = true;
    if (pronoun_subject) {
      const std::string_view pron = pick(kPronChoices, style_.pron_pref);
      third_singular = (pron == "he" || pron == "she");
      emit(std::string(pron));
    } else {
      emit(std::string(pick(kDetChoices, style_.det_pref)));
      if (rng_.uniform() < style_.p_adjective) emit(cluster_word(PosTag::Adj));
      emit(cluster_word(PosTag::Noun));
    }

    emit(conjugate(cluster_word(PosTag::Verb), third_singular));
    if (rng_.uniform() < style_.p_adverb) emit(cluster_word(PosTag::Adv));

    // object phrase
    if (rng_.uniform() < 0.8) {
      if (rng_.uniform() < 0.45) emit(std::string(pick(kAdpChoices, style_.adp_pref)));
      emit(std::string(pick(kDetChoices, style_.det_pref)));
      if (rng_.uniform() < style_.p_adjective * 0.6) emit(cluster_word(PosTag::Adj));
      emit(cluster_word(PosTag::Noun));
    }
    if (rng_.uniform() < style_.p_numeral) {
      emit("in");
      emit(std::to_string(1900 + rng_.below(140)));
    }
    return out;
  }

  std::string cluster_word(PosTag pos) {
    const auto& candidates = by_pos_[static_cast<int>(pos)];
    // author cluster preference restricted to this POS
    double total = 0.0;
    for (auto c : candidates) total += style_.cluster_pref[c];
    double u = rng_.uniform() * total;
    std::size_t chosen = candidates.back();
    for (auto c : candidates) {
      u -= style_.cluster_pref[c];
      if (u < 0.0) {
        chosen = c;
        break;
      }
    }
    const std::size_t member = weighted_pick(rng_, style_.member_pref[chosen]);
    return std::string(vocab::kClusters[chosen].words[member]);
  }

  static std::string conjugate(std::string verb, bool third_singular) {
    if (!third_singular) return verb;
    if (ends_with(verb, "s") || ends_with(verb, "x") || ends_with(verb, "z") ||
        ends_with(verb, "ch") || ends_with(verb, "sh") || ends_with(verb, "o")) {
      return verb + "es";
    }
    if (ends_with(verb, "y") && verb.size() > 1 && !is_vowel_char(verb[verb.size() - 2])) {
      return verb.substr(0, verb.size() - 1) + "ies";
    }
    return verb + "s";
  }

  template <std::size_t N>
  std::string_view pick(const std::string_view (&choices)[N],
                        const std::vector<double>& weights) {
    return choices[weighted_pick(rng_, weights)];
  }

  const AuthorStyle& style_;
  Rng& rng_;
  std::vector<std::size_t> by_pos_[kNumPosTags];
  std::size_t words_ = 0;
};

}  // namespace detail

inline Corpus generate_synthetic_corpus(std::size_t n_authors,
                                        std::size_t docs_per_author,
                                        std::size_t words_per_doc,
                                        std::uint64_t seed) {
  if (n_authors == 0 || docs_per_author == 0 || words_per_doc == 0) {
    throw Error("synthetic corpus parameters must be positive");
  }
  Corpus corpus;
  char buf[32];
  for (std::size_t a = 0; a < n_authors; ++a) {
    std::snprintf(buf, sizeof(buf), "a%03zu", a);
    const std::string author = buf;
    const detail::AuthorStyle style = detail::make_author_style(seed, a);
    for (std::size_t d = 0; d < docs_per_author; ++d) {
      Rng rng(derive_seed(seed, "synth-doc", author, d));
      detail::SentenceWriter writer(style, rng);
      std::string text;
      int sentences_in_paragraph = 0;
      while (writer.words_emitted() < words_per_doc) {
        if (!text.empty()) {
          text += (++sentences_in_paragraph % 6 == 0) ? "\n\n" : " ";
        }
        text += writer.sentence();
      }
      std::snprintf(buf, sizeof(buf), "d%04zu", d);
      Document doc;
      doc.id = author + "/" + buf;
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

// Writes a corpus in the on-disk layout load_corpus expects.
inline void save_corpus(const Corpus& corpus, const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  fs::create_directories(root);
  for (const auto& doc : corpus.documents) {
    const fs::path path = root / (doc.id + ".txt");
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << doc.text;
  }
}

}  // namespace stylo
