#pragma once

// Curated English synonym clusters with POS labels. Three consumers share
// this table: the synthetic corpus generator (author word preferences are
// weights over cluster members), the bundled test embedding table (cluster
// members are embedding neighbors), and the POS lexicon (open-class
// coverage).

#include <array>
#include <string_view>

#include "stylo/postag.hpp"

namespace stylo::vocab {

inline constexpr std::size_t kClusterSize = 6;

struct WordCluster {
  PosTag pos;
  std::array<std::string_view, kClusterSize> words;
};

inline constexpr std::array<WordCluster, 64> kClusters = {{
    {PosTag::Noun, {"house", "home", "cabin", "cottage", "dwelling", "residence"}},
    {PosTag::Noun, {"road", "street", "path", "lane", "avenue", "trail"}},
    {PosTag::Noun, {"ocean", "sea", "lake", "river", "pond", "stream"}},
    {PosTag::Noun, {"mountain", "hill", "peak", "ridge", "summit", "cliff"}},
    {PosTag::Noun, {"forest", "wood", "grove", "thicket", "jungle", "orchard"}},
    {PosTag::Noun, {"city", "town", "village", "hamlet", "suburb", "district"}},
    {PosTag::Noun, {"teacher", "tutor", "mentor", "instructor", "professor", "coach"}},
    {PosTag::Noun, {"doctor", "nurse", "surgeon", "medic", "physician", "healer"}},
    {PosTag::Noun, {"book", "volume", "manuscript", "journal", "pamphlet", "storybook"}},
    {PosTag::Noun, {"letter", "note", "message", "memo", "dispatch", "postcard"}},
    {PosTag::Noun, {"meal", "dinner", "supper", "lunch", "breakfast", "feast"}},
    {PosTag::Noun, {"bread", "loaf", "roll", "bun", "pastry", "muffin"}},
    {PosTag::Noun, {"coat", "jacket", "cloak", "parka", "blazer", "vest"}},
    {PosTag::Noun, {"shoe", "boot", "sandal", "slipper", "sneaker", "loafer"}},
    {PosTag::Noun, {"storm", "rain", "wind", "thunder", "hail", "drizzle"}},
    {PosTag::Noun, {"morning", "dawn", "sunrise", "daybreak", "noon", "dusk"}},
    {PosTag::Noun, {"dog", "hound", "puppy", "terrier", "beagle", "mutt"}},
    {PosTag::Noun, {"cat", "kitten", "tabby", "feline", "tomcat", "mouser"}},
    {PosTag::Noun, {"bird", "sparrow", "finch", "robin", "crow", "wren"}},
    {PosTag::Noun, {"horse", "pony", "stallion", "mare", "colt", "steed"}},
    {PosTag::Noun, {"money", "cash", "coin", "currency", "savings", "wealth"}},
    {PosTag::Noun, {"work", "job", "task", "duty", "labor", "chore"}},
    {PosTag::Noun, {"friend", "companion", "ally", "partner", "comrade", "acquaintance"}},
    {PosTag::Noun, {"family", "household", "clan", "kin", "relatives", "lineage"}},
    {PosTag::Noun, {"music", "melody", "tune", "song", "rhythm", "harmony"}},
    {PosTag::Noun, {"picture", "image", "photo", "portrait", "sketch", "drawing"}},
    {PosTag::Noun, {"garden", "yard", "lawn", "meadow", "field", "pasture"}},
    {PosTag::Noun, {"car", "truck", "wagon", "vehicle", "van", "sedan"}},
    {PosTag::Verb, {"walk", "stroll", "wander", "march", "hike", "pace"}},
    {PosTag::Verb, {"run", "sprint", "dash", "jog", "race", "bolt"}},
    {PosTag::Verb, {"say", "speak", "talk", "utter", "declare", "remark"}},
    {PosTag::Verb, {"look", "gaze", "stare", "glance", "peer", "watch"}},
    {PosTag::Verb, {"make", "build", "craft", "construct", "assemble", "forge"}},
    {PosTag::Verb, {"take", "grab", "seize", "snatch", "fetch", "carry"}},
    {PosTag::Verb, {"think", "ponder", "consider", "reflect", "muse", "reason"}},
    {PosTag::Verb, {"eat", "devour", "consume", "nibble", "munch", "gobble"}},
    {PosTag::Verb, {"write", "scribble", "compose", "draft", "record", "jot"}},
    {PosTag::Verb, {"find", "discover", "locate", "spot", "uncover", "detect"}},
    {PosTag::Verb, {"give", "offer", "grant", "provide", "donate", "hand"}},
    {PosTag::Verb, {"help", "assist", "aid", "support", "serve", "guide"}},
    {PosTag::Verb, {"start", "begin", "commence", "launch", "initiate", "arrange"}},
    {PosTag::Verb, {"finish", "end", "complete", "conclude", "settle", "close"}},
    {PosTag::Verb, {"love", "adore", "cherish", "admire", "treasure", "fancy"}},
    {PosTag::Verb, {"play", "frolic", "romp", "caper", "juggle", "dabble"}},
    {PosTag::Adj, {"big", "large", "huge", "giant", "vast", "immense"}},
    {PosTag::Adj, {"small", "tiny", "petite", "miniature", "slight", "compact"}},
    {PosTag::Adj, {"happy", "glad", "cheerful", "joyful", "merry", "jolly"}},
    {PosTag::Adj, {"sad", "gloomy", "somber", "mournful", "dreary", "forlorn"}},
    {PosTag::Adj, {"fast", "quick", "rapid", "swift", "speedy", "brisk"}},
    {PosTag::Adj, {"slow", "sluggish", "unhurried", "leisurely", "gradual", "tardy"}},
    {PosTag::Adj, {"bright", "shiny", "radiant", "gleaming", "brilliant", "vivid"}},
    {PosTag::Adj, {"dark", "dim", "shadowy", "murky", "dusky", "obscure"}},
    {PosTag::Adj, {"warm", "hot", "toasty", "balmy", "sultry", "humid"}},
    {PosTag::Adj, {"cold", "cool", "chilly", "frosty", "icy", "frigid"}},
    {PosTag::Adj, {"old", "ancient", "aged", "antique", "elderly", "venerable"}},
    {PosTag::Adj, {"new", "fresh", "modern", "recent", "current", "pristine"}},
    {PosTag::Adv, {"quickly", "rapidly", "swiftly", "speedily", "briskly", "hastily"}},
    {PosTag::Adv, {"slowly", "gently", "calmly", "lazily", "sleepily", "dreamily"}},
    {PosTag::Adv, {"loudly", "noisily", "boldly", "fiercely", "sharply", "roughly"}},
    {PosTag::Adv, {"softly", "faintly", "mildly", "meekly", "tenderly", "smoothly"}},
    {PosTag::Adv, {"carefully", "cautiously", "precisely", "neatly", "diligently", "thoroughly"}},
    {PosTag::Adv, {"happily", "gladly", "cheerfully", "merrily", "joyfully", "eagerly"}},
    {PosTag::Adv, {"sadly", "glumly", "dismally", "wearily", "bitterly", "sourly"}},
    {PosTag::Adv, {"proudly", "bravely", "grandly", "nobly", "smugly", "keenly"}},
}};

}  // namespace stylo::vocab
