#pragma once

// Bundled, frozen feature vocabularies. These lists pin the writeprints-static
// schema dimensions: changing any of them changes feature indices, so they are
// versioned with the schema id and never rebuilt from data.

#include <array>
#include <string_view>
#include <unordered_set>

namespace stylo::wordlists {

// 300 English function words, alphabetical.
inline constexpr std::array<std::string_view, 300> kFunctionWords = {
    "a", "about", "above", "across", "after", "again", "against", "ago",
    "ahead", "all", "almost", "alone", "along", "alongside", "already", "also",
    "although", "always", "am", "amid", "among", "amongst", "an", "and",
    "another", "any", "anybody", "anyhow", "anyone", "anything", "anyway", "anywhere",
    "apart", "are", "around", "as", "aside", "at", "away", "back",
    "be", "because", "been", "before", "beforehand", "behind", "being", "below",
    "beneath", "beside", "besides", "between", "beyond", "both", "but", "by",
    "can", "cannot", "certainly", "consequently", "could", "despite", "did", "do",
    "does", "doing", "done", "down", "during", "each", "either", "else",
    "elsewhere", "enough", "especially", "even", "eventually", "ever", "every", "everybody",
    "everyone", "everything", "everywhere", "except", "far", "few", "fewer", "finally",
    "for", "forth", "from", "further", "furthermore", "generally", "had", "hardly",
    "has", "have", "having", "he", "hence", "her", "here", "hers",
    "herself", "him", "himself", "his", "hither", "how", "however", "i",
    "if", "in", "indeed", "inside", "instead", "into", "is", "it",
    "its", "itself", "just", "largely", "last", "later", "latter", "least",
    "less", "lest", "like", "likely", "likewise", "little", "many", "may",
    "maybe", "me", "meanwhile", "merely", "might", "mine", "more", "moreover",
    "most", "mostly", "much", "must", "my", "myself", "namely", "near",
    "nearby", "nearly", "neither", "never", "nevertheless", "next", "no", "nobody",
    "none", "nonetheless", "nor", "not", "nothing", "now", "nowhere", "of",
    "off", "often", "on", "once", "one", "only", "onto", "or",
    "other", "others", "otherwise", "ought", "our", "ours", "ourselves", "out",
    "outside", "over", "overall", "own", "part", "particularly", "per", "perhaps",
    "possibly", "presently", "previously", "probably", "quite", "rather", "really", "recently",
    "regarding", "round", "same", "secondly", "several", "shall", "she", "should",
    "since", "so", "some", "somebody", "somehow", "someone", "something", "sometime",
    "sometimes", "somewhat", "somewhere", "soon", "still", "such", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "thereafter",
    "thereby", "therefore", "therein", "these", "they", "thirdly", "this", "those",
    "though", "through", "throughout", "thus", "till", "to", "together", "too",
    "toward", "towards", "truly", "twice", "under", "underneath", "unless", "unlike",
    "until", "unto", "up", "upon", "upward", "us", "usually", "very",
    "via", "was", "we", "well", "were", "what", "whatever", "when",
    "whence", "whenever", "where", "whereas", "wherever", "whether", "which", "whichever",
    "while", "whither", "who", "whoever", "whole", "whom", "whose", "why",
    "will", "with", "within", "without", "would", "yes", "yet", "you",
    "your", "yours", "yourself", "yourselves",
};

// Most common English letter bigrams and trigrams, descending frequency.
inline constexpr std::array<std::string_view, 39> kTopLetterBigrams = {
    "th", "he", "in", "er", "an", "re", "on", "at", "en", "nd", "ti", "es", "or",
    "te", "of", "ed", "is", "it", "al", "ar", "st", "to", "nt", "ng", "se", "ha",
    "as", "ou", "io", "le", "ve", "co", "me", "de", "hi", "ri", "ro", "ic", "ne",
};

inline constexpr std::array<std::string_view, 20> kTopLetterTrigrams = {
    "the", "and", "ing", "ion", "tio", "ent", "ati", "for", "her", "ter",
    "hat", "tha", "ere", "ate", "his", "con", "res", "ver", "all", "ons",
};

inline constexpr std::array<char, 21> kSpecialChars = {
    '~', '@', '#', '$', '%', '^', '&', '*', '_', '+', '=',
    '<', '>', '[', ']', '{', '}', '/', '\\', '|', '-',
};

inline constexpr std::array<char, 11> kPunctuation = {
    '.', ',', '!', '?', ';', ':', '\'', '"', '`', '(', ')',
};

inline bool is_function_word(std::string_view lowercase_word) {
  static const std::unordered_set<std::string_view> set(kFunctionWords.begin(),
                                                        kFunctionWords.end());
  return set.contains(lowercase_word);
}

}  // namespace stylo::wordlists
