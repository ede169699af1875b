#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace stylo {

// Coarse 12-tag scheme used by the POS distribution features.
enum class PosTag {
  Noun,
  Verb,
  Adj,
  Adv,
  Pron,
  Det,
  Adp,
  Conj,
  Num,
  Prt,
  Punct,
  Other,
};

inline constexpr std::size_t kNumPosTags = 12;

inline constexpr std::array<std::string_view, kNumPosTags> kPosTagNames = {
    "NOUN", "VERB", "ADJ",  "ADV", "PRON",  "DET",
    "ADP",  "CONJ", "NUM",  "PRT", "PUNCT", "OTHER",
};

inline std::string_view pos_tag_name(PosTag t) {
  return kPosTagNames[static_cast<std::size_t>(t)];
}

}  // namespace stylo
