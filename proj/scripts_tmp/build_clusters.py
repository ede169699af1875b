#!/usr/bin/env python3
"""Scratch helper: validates synonym clusters and emits the C++ table body."""

NOUN = [
    "house home cabin cottage dwelling residence",
    "road street path lane avenue trail",
    "ocean sea lake river pond stream",
    "mountain hill peak ridge summit cliff",
    "forest wood grove thicket jungle orchard",
    "city town village hamlet suburb district",
    "teacher tutor mentor instructor professor coach",
    "doctor nurse surgeon medic physician healer",
    "book volume manuscript journal pamphlet storybook",
    "letter note message memo dispatch postcard",
    "meal dinner supper lunch breakfast feast",
    "bread loaf roll bun pastry muffin",
    "coat jacket cloak parka blazer vest",
    "shoe boot sandal slipper sneaker loafer",
    "storm rain wind thunder hail drizzle",
    "morning dawn sunrise daybreak noon dusk",
    "dog hound puppy terrier beagle mutt",
    "cat kitten tabby feline tomcat mouser",
    "bird sparrow finch robin crow wren",
    "horse pony stallion mare colt steed",
    "money cash coin currency savings wealth",
    "work job task duty labor chore",
    "friend companion ally partner comrade acquaintance",
    "family household clan kin relatives lineage",
    "music melody tune song rhythm harmony",
    "picture image photo portrait sketch drawing",
    "garden yard lawn meadow field pasture",
    "car truck wagon vehicle van sedan",
]

VERB = [
    "walk stroll wander march hike pace",
    "run sprint dash jog race bolt",
    "say speak talk utter declare remark",
    "look gaze stare glance peer watch",
    "make build craft construct assemble forge",
    "take grab seize snatch fetch carry",
    "think ponder consider reflect muse reason",
    "eat devour consume nibble munch gobble",
    "write scribble compose draft record jot",
    "find discover locate spot uncover detect",
    "give offer grant provide donate hand",
    "help assist aid support serve guide",
    "start begin commence launch initiate arrange",
    "finish end complete conclude settle close",
    "love adore cherish admire treasure fancy",
    "play frolic romp caper juggle dabble",
]

ADJ = [
    "big large huge giant vast immense",
    "small tiny petite miniature slight compact",
    "happy glad cheerful joyful merry jolly",
    "sad gloomy somber mournful dreary forlorn",
    "fast quick rapid swift speedy brisk",
    "slow sluggish unhurried leisurely gradual tardy",
    "bright shiny radiant gleaming brilliant vivid",
    "dark dim shadowy murky dusky obscure",
    "warm hot toasty balmy sultry humid",
    "cold cool chilly frosty icy frigid",
    "old ancient aged antique elderly venerable",
    "new fresh modern recent current pristine",
]

ADV = [
    "quickly rapidly swiftly speedily briskly hastily",
    "slowly gently calmly lazily sleepily dreamily",
    "loudly noisily boldly fiercely sharply roughly",
    "softly faintly mildly meekly tenderly smoothly",
    "carefully cautiously precisely neatly diligently thoroughly",
    "happily gladly cheerfully merrily joyfully eagerly",
    "sadly glumly dismally wearily bitterly sourly",
    "proudly bravely grandly nobly smugly keenly",
]

FUNCTION_WORDS = set(open("/root/proj/scripts_tmp/function_words.inc").read()
                     .replace('"', " ").replace(",", " ").split())


def main() -> None:
    all_words = []
    table = []
    for pos, groups in [("Noun", NOUN), ("Verb", VERB), ("Adj", ADJ), ("Adv", ADV)]:
        for g in groups:
            ws = g.split()
            assert len(ws) == 6, g
            table.append((pos, ws))
            all_words += ws
    dup = [w for w in set(all_words) if all_words.count(w) > 1]
    assert not dup, dup
    overlap = set(all_words) & FUNCTION_WORDS
    assert not overlap, overlap
    assert all(w.isalpha() and w.islower() for w in all_words)
    print("clusters:", len(table), "words:", len(all_words))

    lines = []
    for pos, ws in table:
        quoted = ", ".join(f'"{w}"' for w in ws)
        lines.append(f"    {{PosTag::{pos}, {{{quoted}}}}},")
    with open("/root/proj/scripts_tmp/clusters.inc", "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote clusters.inc")


if __name__ == "__main__":
    main()
