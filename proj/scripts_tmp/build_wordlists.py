#!/usr/bin/env python3
"""Scratch helper: validates the bundled word lists and prints C++ array bodies."""

FUNCTION_WORDS = """
a about above across after again against ago ahead all almost alone along alongside already
also although always am amid among amongst an and another any anybody anyhow anyone anything
anyway anywhere apart are around as aside at away back be because been
before beforehand behind being below beneath beside besides between beyond both but by can cannot
certainly consequently could despite did do does doing done down during each either else
elsewhere enough especially even eventually ever every everybody everyone everything everywhere except
far few fewer finally for forth from further furthermore generally had hardly has have having
he hence her here hers herself him himself his hither how however i if in
indeed inside instead into is it its itself just largely last later latter least less lest like likely
likewise little many may maybe me meanwhile merely might mine more moreover most mostly much must my
myself namely near nearby nearly neither never nevertheless next no nobody none nonetheless nor not
nothing now nowhere of off often on once one only onto or other others otherwise ought our ours
ourselves out outside over overall own part particularly per perhaps possibly presently previously
probably quite rather really recently regarding round same secondly several shall she should since so
some somebody somehow someone something sometime sometimes somewhat somewhere soon still such than that
the their theirs them themselves then there thereafter thereby therefore therein these
they thirdly this those though through throughout thus till to together too toward towards
truly twice under underneath unless unlike until unto up upon upward us usually very via was we well
were what whatever when whence whenever where whereas wherever
whether which whichever while whither who whoever whole whom whose why will with within without would
yes yet you your yours yourself yourselves
""".split()

# Frozen global English letter n-gram lists (descending corpus frequency).
BIGRAMS = ("th he in er an re on at en nd ti es or te of ed is it al ar st "
           "to nt ng se ha as ou io le ve co me de hi ri ro ic ne").split()
TRIGRAMS = "the and ing ion tio ent ati for her ter hat tha ere ate his con res ver all ons".split()

SPECIAL = list("~@#$%^&*_+=<>[]{}/\\|-")
PUNCT = list(".,!?;:'\"`()")


def main() -> None:
    assert len(FUNCTION_WORDS) == len(set(FUNCTION_WORDS)), sorted(
        w for w in set(FUNCTION_WORDS) if FUNCTION_WORDS.count(w) > 1)
    print("function words:", len(FUNCTION_WORDS))
    print("bigrams:", len(BIGRAMS), "unique:", len(set(BIGRAMS)))
    print("trigrams:", len(TRIGRAMS), "unique:", len(set(TRIGRAMS)))
    print("special:", len(SPECIAL), "unique:", len(set(SPECIAL)))
    print("punct:", len(PUNCT), "unique:", len(set(PUNCT)))
    assert not set(SPECIAL) & set(PUNCT)

    def emit(words, per_line=10):
        lines = []
        for i in range(0, len(words), per_line):
            lines.append("    " + ", ".join(f'"{w}"' for w in words[i:i + per_line]) + ",")
        return "\n".join(lines)

    with open("/root/proj/scripts_tmp/function_words.inc", "w") as f:
        f.write(emit(sorted(FUNCTION_WORDS), 8) + "\n")
    with open("/root/proj/scripts_tmp/ngrams.inc", "w") as f:
        f.write("BIGRAMS\n" + emit(BIGRAMS, 13) + "\nTRIGRAMS\n" + emit(TRIGRAMS, 10) + "\n")
    print("wrote .inc files")


if __name__ == "__main__":
    main()
