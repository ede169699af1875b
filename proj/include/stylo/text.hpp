#pragma once

// Tokenization. Words are maximal runs of letters/digits/apostrophes (edge
// apostrophes are treated as quote marks and trimmed); sentence boundaries
// sit at '.', '!' or '?' followed by whitespace or end of text. Everything is
// ASCII-oriented: bytes outside the ASCII range simply never count as
// letters, digits or boundaries, so multi-byte UTF-8 content passes through
// untouched in `chars`.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stylo {

inline bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

// Half-open range of word indices forming one sentence.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Tokens {
  std::vector<std::string> words;
  std::vector<SentenceSpan> sentences;
  std::string chars;  // the input text, verbatim
  // Byte range of each word inside `chars`, parallel to `words`. Used to
  // splice replacement words back into the original text.
  std::vector<std::pair<std::size_t, std::size_t>> word_spans;
};

namespace detail {

inline bool is_word_char(char c) {
  return is_ascii_letter(c) || is_ascii_digit(c) || c == '\'';
}

inline bool has_alnum(std::string_view s) {
  for (char c : s)
    if (is_ascii_letter(c) || is_ascii_digit(c)) return true;
  return false;
}

}  // namespace detail

inline Tokens tokenize(std::string_view text) {
  Tokens t;
  t.chars.assign(text);

  std::size_t sentence_start_word = 0;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (detail::is_word_char(c)) {
      std::size_t j = i;
      while (j < n && detail::is_word_char(text[j])) ++j;
      std::size_t lo = i, hi = j;
      while (lo < hi && text[lo] == '\'') ++lo;
      while (hi > lo && text[hi - 1] == '\'') --hi;
      if (lo < hi && detail::has_alnum(text.substr(lo, hi - lo))) {
        t.words.emplace_back(text.substr(lo, hi - lo));
        t.word_spans.emplace_back(lo, hi);
      }
      i = j;
      continue;
    }
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 >= n || is_ascii_space(text[i + 1]))) {
      if (t.words.size() > sentence_start_word) {
        t.sentences.push_back({sentence_start_word, t.words.size()});
        sentence_start_word = t.words.size();
      }
    }
    ++i;
  }
  if (t.words.size() > sentence_start_word) {
    t.sentences.push_back({sentence_start_word, t.words.size()});
  }
  return t;
}

// Reassembles a document from the original tokenization and a (possibly
// mutated) word list of the same length, keeping all inter-word characters.
inline std::string rebuild_text(const Tokens& original,
                                const std::vector<std::string>& words) {
  std::string out;
  out.reserve(original.chars.size() + 16);
  std::size_t cursor = 0;
  for (std::size_t w = 0; w < original.word_spans.size(); ++w) {
    const auto [lo, hi] = original.word_spans[w];
    out.append(original.chars, cursor, lo - cursor);
    out.append(words[w]);
    cursor = hi;
  }
  out.append(original.chars, cursor, original.chars.size() - cursor);
  return out;
}

}  // namespace stylo
