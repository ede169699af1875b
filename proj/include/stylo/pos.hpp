#pragma once

// Deterministic POS tagging: lexicon lookup first, suffix rules for unknown
// words, NOUN as the final fallback. The lexicon is built once from the
// closed-class lists below plus the bundled synonym clusters and common
// open-class stems with regular inflections (a few thousand forms total).

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylo/postag.hpp"
#include "stylo/text.hpp"
#include "stylo/vocab_clusters.hpp"

namespace stylo {

namespace detail {

inline constexpr std::string_view kDetWords[] = {
    "the", "a", "an", "this", "that", "these", "those", "another", "such",
    "each", "every", "either", "neither", "some", "any", "no", "both", "all",
};

inline constexpr std::string_view kPronWords[] = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them",
    "myself", "yourself", "himself", "herself", "itself", "ourselves",
    "yourselves", "themselves", "mine", "yours", "his", "hers", "ours",
    "theirs", "my", "your", "our", "their", "who", "whom", "whose", "which",
    "what", "whoever", "whatever", "whichever", "somebody", "someone",
    "something", "anybody", "anyone", "anything", "everybody", "everyone",
    "everything", "nobody", "none", "nothing",
};

inline constexpr std::string_view kAdpWords[] = {
    "about", "above", "across", "after", "against", "along", "alongside",
    "amid", "among", "amongst", "around", "at", "before", "behind", "below",
    "beneath", "beside", "besides", "between", "beyond", "by", "despite",
    "down", "during", "except", "for", "from", "in", "inside", "into", "like",
    "near", "of", "off", "on", "onto", "outside", "over", "past", "per",
    "since", "through", "throughout", "till", "toward", "towards", "under",
    "underneath", "unlike", "until", "unto", "up", "upon", "via", "with",
    "within", "without", "as", "than",
};

inline constexpr std::string_view kConjWords[] = {
    "and", "but", "or", "nor", "so", "yet", "because", "although", "though",
    "while", "whereas", "if", "unless", "whether",
};

inline constexpr std::string_view kPrtWords[] = {"to", "not"};

inline constexpr std::string_view kNumWords[] = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty",
    "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred",
    "thousand", "million", "billion", "first", "second", "third", "fourth",
    "fifth", "sixth", "seventh", "eighth", "ninth", "tenth", "dozen", "half",
};

// Auxiliaries, copulas and frequent irregular verbs with their forms.
inline constexpr std::string_view kVerbWords[] = {
    "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "done", "will", "would",
    "shall", "should", "can", "could", "may", "might", "must", "ought",
    "go", "goes", "went", "gone", "going", "get", "gets", "got", "gotten",
    "getting", "know", "knows", "knew", "known", "knowing", "see", "sees",
    "saw", "seen", "seeing", "come", "comes", "came", "coming", "want",
    "wants", "feel", "feels", "felt", "feeling", "keep", "keeps", "kept",
    "keeping", "let", "lets", "letting", "seem", "seems", "seemed", "seeming",
    "leave", "leaves", "left", "leaving", "put", "puts", "putting", "mean",
    "means", "meant", "meaning", "bring", "brings", "brought", "bringing",
    "hold", "holds", "held", "holding", "sit", "sits", "sat", "sitting",
    "stand", "stands", "stood", "standing", "hear", "hears", "heard",
    "hearing", "read", "reads", "reading", "meet", "meets", "met", "meeting",
    "pay", "pays", "paid", "paying", "set", "sets", "setting", "grow",
    "grows", "grew", "grown", "growing", "lose", "loses", "lost", "losing",
    "send", "sends", "sent", "sending", "buy", "buys", "bought", "buying",
    "wear", "wears", "wore", "worn", "wearing", "catch", "catches", "caught",
    "catching", "sell", "sells", "sold", "selling", "fall", "falls", "fell",
    "fallen", "falling", "tell", "tells", "told", "telling", "call", "calls",
    "called", "calling", "try", "tries", "tried", "trying", "ask", "asks",
    "asked", "asking", "need", "needs", "needed", "needing", "turn", "turns",
    "turned", "turning", "show", "shows", "showed", "shown", "showing",
    "move", "moves", "moved", "moving", "live", "lives", "lived", "living",
    "believe", "believes", "believed", "believing", "happen", "happens",
    "happened", "happening", "sleep", "sleeps", "slept", "sleeping",
};

inline constexpr std::string_view kAdvWords[] = {
    "here", "there", "now", "then", "today", "tomorrow", "yesterday", "very",
    "quite", "rather", "too", "almost", "already", "again", "soon", "still",
    "however", "maybe", "perhaps", "nearly", "always", "never",
    "often", "sometimes", "usually", "seldom", "rarely", "somewhat",
    "instead", "anyway", "indeed", "away", "back", "forth", "thus", "hence",
    "everywhere", "nowhere", "somewhere", "anywhere", "together", "apart",
    "once", "twice", "abroad", "ahead", "alone",
};

// Common open-class stems beyond the synonym clusters. Regular inflections
// are generated at lexicon build time.
inline constexpr std::string_view kExtraNouns[] = {
    "time", "year", "day", "week", "month", "hour", "minute", "moment",
    "people", "person", "man", "woman", "child", "boy", "girl", "student",
    "king", "queen", "door", "window", "table", "chair", "floor", "wall",
    "roof", "kitchen", "bedroom", "school", "office", "market", "shop",
    "church", "bridge", "tower", "castle", "farm", "barn", "tree", "leaf",
    "branch", "flower", "grass", "stone", "rock", "sand", "soil", "fire",
    "smoke", "lantern", "shadow", "color", "sound", "voice", "word", "name",
    "story", "idea", "thought", "dream", "plan", "question", "answer",
    "problem", "secret", "truth", "game", "sport", "ball", "team", "goal",
    "prize", "gift", "box", "bag", "basket", "bottle", "cup", "plate",
    "knife", "fork", "spoon", "pot", "pan", "water", "milk", "tea", "coffee",
    "juice", "wine", "sugar", "salt", "pepper", "butter", "cheese", "egg",
    "meat", "fish", "fruit", "apple", "orange", "banana", "grape", "berry",
    "corn", "rice", "bean", "soup", "cake", "pie", "candy", "winter",
    "spring", "summer", "autumn", "season", "weather", "cloud", "sky",
    "star", "moon", "sun", "planet", "world", "country", "nation", "border",
    "map", "journey", "trip", "voyage", "guest", "host", "crowd", "group",
    "club", "party", "wedding", "birthday", "holiday", "evening", "night",
    "afternoon", "week", "visitor", "stranger", "driver", "farmer", "baker",
    "singer", "dancer", "painter", "writer", "reader", "keeper", "gardener",
};

inline constexpr std::string_view kExtraVerbs[] = {
    "listen", "visit", "travel", "arrive", "depart", "return", "stay",
    "wait", "stop", "rest", "smile", "laugh", "cry", "shout", "whisper",
    "sing", "dance", "jump", "climb", "swim", "cook", "bake", "wash",
    "paint", "study", "plant", "pick", "gather", "collect", "count",
    "measure", "weigh", "push", "pull", "lift", "drop", "throw", "toss",
    "kick", "strike", "chop", "slice", "mix", "stir", "pour", "fill",
    "cover", "wrap", "tie", "fold", "bend", "stretch", "shake", "wave",
    "knock", "press", "touch", "open", "share", "enjoy", "prefer", "notice",
    "remember", "forget", "decide", "choose", "explain", "describe",
};

inline constexpr std::string_view kExtraAdjs[] = {
    "good", "bad", "great", "fine", "nice", "kind", "cruel", "gentle",
    "rough", "smooth", "soft", "hard", "easy", "difficult", "simple",
    "plain", "rich", "poor", "young", "strong", "weak", "healthy", "sick",
    "tired", "hungry", "thirsty", "dirty", "wet", "dry", "loud", "quiet",
    "busy", "calm", "wild", "tame", "safe", "heavy", "long", "short",
    "tall", "wide", "narrow", "deep", "shallow", "thick", "thin", "flat",
    "steep", "empty", "full", "early", "late", "pleasant", "strange",
    "famous", "common", "rare", "proud", "eager", "clever", "wise",
    "foolish", "polite", "rude", "honest", "lucky",
};

inline bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

inline bool is_vowel_char(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline std::vector<std::string> regular_verb_forms(std::string_view base) {
  std::string b(base);
  std::vector<std::string> forms;
  // 3rd person singular
  if (ends_with(b, "s") || ends_with(b, "x") || ends_with(b, "z") ||
      ends_with(b, "ch") || ends_with(b, "sh") || ends_with(b, "o")) {
    forms.push_back(b + "es");
  } else if (ends_with(b, "y") && b.size() > 1 && !is_vowel_char(b[b.size() - 2])) {
    forms.push_back(b.substr(0, b.size() - 1) + "ies");
  } else {
    forms.push_back(b + "s");
  }
  // past / participle
  if (ends_with(b, "e")) {
    forms.push_back(b + "d");
    forms.push_back(b.substr(0, b.size() - 1) + "ing");
  } else if (ends_with(b, "y") && b.size() > 1 && !is_vowel_char(b[b.size() - 2])) {
    forms.push_back(b.substr(0, b.size() - 1) + "ied");
    forms.push_back(b + "ing");
  } else {
    forms.push_back(b + "ed");
    forms.push_back(b + "ing");
  }
  return forms;
}

inline std::string noun_plural(std::string_view base) {
  std::string b(base);
  if (ends_with(b, "s") || ends_with(b, "x") || ends_with(b, "z") ||
      ends_with(b, "ch") || ends_with(b, "sh")) {
    return b + "es";
  }
  if (ends_with(b, "y") && b.size() > 1 && !is_vowel_char(b[b.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ies";
  }
  return b + "s";
}

inline const std::unordered_map<std::string, PosTag>& pos_lexicon() {
  static const std::unordered_map<std::string, PosTag> lexicon = [] {
    std::unordered_map<std::string, PosTag> lex;
    auto add = [&lex](std::string_view w, PosTag t) {
      lex.emplace(std::string(w), t);  // first entry wins
    };
    for (auto w : kDetWords) add(w, PosTag::Det);
    for (auto w : kPronWords) add(w, PosTag::Pron);
    for (auto w : kPrtWords) add(w, PosTag::Prt);
    for (auto w : kConjWords) add(w, PosTag::Conj);
    for (auto w : kAdpWords) add(w, PosTag::Adp);
    for (auto w : kNumWords) add(w, PosTag::Num);
    for (auto w : kVerbWords) add(w, PosTag::Verb);
    for (auto w : kAdvWords) add(w, PosTag::Adv);
    for (const auto& cluster : vocab::kClusters) {
      for (auto w : cluster.words) {
        add(w, cluster.pos);
        if (cluster.pos == PosTag::Verb) {
          for (const auto& f : regular_verb_forms(w)) add(f, PosTag::Verb);
        } else if (cluster.pos == PosTag::Noun) {
          add(noun_plural(w), PosTag::Noun);
        }
      }
    }
    for (auto w : kExtraNouns) {
      add(w, PosTag::Noun);
      add(noun_plural(w), PosTag::Noun);
    }
    for (auto w : kExtraVerbs) {
      add(w, PosTag::Verb);
      for (const auto& f : regular_verb_forms(w)) add(f, PosTag::Verb);
    }
    for (auto w : kExtraAdjs) add(w, PosTag::Adj);
    return lex;
  }();
  return lexicon;
}

}  // namespace detail

// Tags a single word (as produced by tokenize). Deterministic: lexicon,
// then suffix rules, then NOUN.
inline PosTag pos_tag_word(std::string_view word) {
  if (word.empty()) return PosTag::Other;
  const std::string lower = to_lower(word);

  bool any_digit = false, all_digit = true;
  for (char c : lower) {
    if (is_ascii_digit(c)) {
      any_digit = true;
    } else {
      all_digit = false;
    }
  }
  if (all_digit) return PosTag::Num;

  const auto& lex = detail::pos_lexicon();
  if (auto it = lex.find(lower); it != lex.end()) return it->second;

  if (any_digit) return PosTag::Num;  // mixed alphanumerics like "42nd"

  using detail::ends_with;
  if (ends_with(lower, "ly") && lower.size() > 3) return PosTag::Adv;
  if ((ends_with(lower, "ing") || ends_with(lower, "ed")) && lower.size() > 4)
    return PosTag::Verb;
  if (ends_with(lower, "ize") || ends_with(lower, "ise") || ends_with(lower, "ify"))
    return PosTag::Verb;
  if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "ive") ||
      ends_with(lower, "able") || ends_with(lower, "ible") || ends_with(lower, "ish") ||
      ends_with(lower, "less") || ends_with(lower, "ic"))
    return PosTag::Adj;
  return PosTag::Noun;
}

inline std::vector<PosTag> pos_tag(const std::vector<std::string>& words) {
  std::vector<PosTag> tags;
  tags.reserve(words.size());
  for (const auto& w : words) tags.push_back(pos_tag_word(w));
  return tags;
}

}  // namespace stylo
