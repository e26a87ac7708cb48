#!/usr/bin/env python3
"""Generate the shipped valence lexicon TSV from a curated base list.

Each base term carries a valence in [-4, 4] and a coarse part-of-speech
used to emit regular inflections (with an override map for irregulars).
All magnitudes are kept >= 0.3 so that negation always moves a matched
term across the neutral band.

Usage: python scripts/build_valence_lexicon.py > src/crs/data/valence_lexicon.tsv
"""

import pathlib
import sys

# (term, valence, pos) with pos in: a=adjective, n=noun, v=verb, x=as-is
BASES = [
    # positive
    ("good", 1.9, "a"), ("great", 3.1, "a"), ("excellent", 2.7, "a"),
    ("awesome", 3.1, "a"), ("amazing", 2.8, "a"), ("wonderful", 2.7, "a"),
    ("fantastic", 2.6, "a"), ("perfect", 2.7, "a"), ("brilliant", 2.8, "a"),
    ("superb", 3.0, "a"), ("outstanding", 2.8, "a"), ("terrific", 2.1, "a"),
    ("nice", 1.8, "a"), ("fine", 0.8, "a"), ("happy", 2.7, "a"),
    ("glad", 2.0, "a"), ("pleased", 1.9, "a"), ("delighted", 2.9, "a"),
    ("thrilled", 2.4, "a"), ("excited", 2.2, "a"), ("grateful", 2.3, "a"),
    ("thankful", 2.1, "a"), ("helpful", 1.8, "a"), ("useful", 1.9, "a"),
    ("valuable", 2.1, "a"), ("beneficial", 1.9, "a"), ("effective", 2.1, "a"),
    ("efficient", 1.8, "a"), ("reliable", 1.9, "a"), ("robust", 1.7, "a"),
    ("stable", 1.2, "a"), ("solid", 1.5, "a"), ("elegant", 2.1, "a"),
    ("clean", 1.7, "a"), ("clear", 1.4, "a"), ("simple", 1.1, "a"),
    ("easy", 1.9, "a"), ("smooth", 1.5, "a"), ("fast", 1.3, "a"),
    ("quick", 1.3, "a"), ("impressive", 2.3, "a"), ("beautiful", 2.9, "a"),
    ("lovely", 2.8, "a"), ("pleasant", 2.3, "a"), ("friendly", 2.2, "a"),
    ("kind", 2.4, "a"), ("generous", 2.3, "a"), ("polite", 2.1, "a"),
    ("respectful", 2.1, "a"), ("welcoming", 2.0, "a"), ("supportive", 2.1, "a"),
    ("smart", 1.8, "a"), ("clever", 2.0, "a"), ("wise", 2.2, "a"),
    ("talented", 2.3, "a"), ("skilled", 1.9, "a"), ("capable", 1.6, "a"),
    ("competent", 1.5, "a"), ("professional", 1.6, "a"), ("neat", 1.8, "a"),
    ("cool", 1.3, "a"), ("handy", 1.4, "a"), ("correct", 1.7, "a"),
    ("right", 1.6, "a"), ("accurate", 1.6, "a"), ("successful", 2.2, "a"),
    ("productive", 1.8, "a"), ("positive", 2.0, "a"), ("optimistic", 1.9, "a"),
    ("promising", 1.7, "a"), ("innovative", 1.9, "a"), ("creative", 1.9, "a"),
    ("fun", 2.3, "a"), ("funny", 1.9, "a"), ("enjoyable", 2.2, "a"),
    ("interesting", 1.7, "a"), ("fascinating", 2.3, "a"), ("satisfying", 2.0, "a"),
    ("comfortable", 1.7, "a"), ("safe", 1.8, "a"), ("secure", 1.5, "a"),
    ("fair", 1.6, "a"), ("honest", 2.1, "a"), ("genuine", 1.9, "a"),
    ("trustworthy", 2.2, "a"), ("superior", 1.7, "a"), ("favorite", 2.0, "a"),
    ("ideal", 2.1, "a"), ("win", 2.8, "v"), ("love", 3.2, "v"),
    ("like", 1.5, "v"), ("enjoy", 2.2, "v"), ("appreciate", 2.0, "v"),
    ("admire", 2.2, "v"), ("praise", 2.4, "v"), ("thank", 1.9, "v"),
    ("help", 1.7, "v"), ("improve", 1.8, "v"), ("succeed", 2.3, "v"),
    ("solve", 1.6, "v"), ("recommend", 1.6, "v"), ("celebrate", 2.4, "v"),
    ("encourage", 1.9, "v"), ("inspire", 2.3, "v"), ("delight", 2.6, "v"),
    ("benefit", 1.7, "v"), ("fix", 1.3, "v"), ("resolve", 1.5, "v"),
    ("success", 2.7, "n"), ("victory", 2.6, "n"), ("progress", 1.8, "n"),
    ("improvement", 1.8, "n"), ("achievement", 2.3, "n"), ("advantage", 1.8, "n"),
    ("solution", 1.5, "n"), ("gem", 2.0, "n"), ("masterpiece", 2.8, "n"),
    ("pleasure", 2.5, "n"), ("joy", 2.9, "n"), ("friend", 2.1, "n"),
    ("hero", 2.5, "n"), ("genius", 2.6, "n"), ("thanks", 1.9, "x"),
    ("congratulations", 2.7, "x"), ("congrats", 2.6, "x"), ("bravo", 2.6, "x"),
    ("kudos", 2.4, "x"), ("cheers", 1.9, "x"), ("wow", 2.1, "x"),
    ("yay", 2.4, "x"), ("please", 1.1, "x"), ("welcome", 2.0, "x"),
    ("agree", 1.5, "v"), ("works", 1.2, "x"), ("worked", 1.2, "x"),
    ("working", 1.2, "x"), ("best", 3.2, "x"), ("better", 1.9, "x"),
    # negative
    ("bad", -2.5, "a"), ("terrible", -2.1, "a"), ("awful", -2.0, "a"),
    ("horrible", -2.5, "a"), ("dreadful", -2.3, "a"), ("atrocious", -2.5, "a"),
    ("abysmal", -2.4, "a"), ("poor", -1.9, "a"), ("mediocre", -1.2, "a"),
    ("lousy", -1.9, "a"), ("disappointing", -1.9, "a"), ("frustrating", -2.0, "a"),
    ("annoying", -1.8, "a"), ("irritating", -1.9, "a"), ("infuriating", -2.4, "a"),
    ("useless", -1.8, "a"), ("pointless", -1.6, "a"), ("worthless", -2.1, "a"),
    ("broken", -1.6, "a"), ("buggy", -1.7, "a"), ("unstable", -1.4, "a"),
    ("unreliable", -1.7, "a"), ("slow", -1.2, "a"), ("clumsy", -1.4, "a"),
    ("messy", -1.5, "a"), ("ugly", -2.2, "a"), ("confusing", -1.3, "a"),
    ("unclear", -1.1, "a"), ("wrong", -1.7, "a"), ("incorrect", -1.5, "a"),
    ("flawed", -1.6, "a"), ("defective", -1.7, "a"), ("inferior", -1.6, "a"),
    ("stupid", -2.4, "a"), ("dumb", -2.3, "a"), ("idiotic", -2.5, "a"),
    ("moronic", -2.5, "a"), ("foolish", -1.9, "a"), ("ignorant", -1.9, "a"),
    ("incompetent", -2.0, "a"), ("lazy", -1.6, "a"), ("careless", -1.5, "a"),
    ("sloppy", -1.6, "a"), ("pathetic", -2.2, "a"), ("ridiculous", -1.6, "a"),
    ("absurd", -1.4, "a"), ("nonsensical", -1.4, "a"), ("rude", -2.0, "a"),
    ("hostile", -2.1, "a"), ("toxic", -2.3, "a"), ("offensive", -2.0, "a"),
    ("abusive", -2.6, "a"), ("insulting", -2.1, "a"), ("disrespectful", -2.1, "a"),
    ("arrogant", -1.9, "a"), ("condescending", -1.9, "a"), ("obnoxious", -2.2, "a"),
    ("nasty", -2.3, "a"), ("mean", -1.9, "a"), ("cruel", -2.5, "a"),
    ("vicious", -2.4, "a"), ("hateful", -2.7, "a"), ("disgusting", -2.4, "a"),
    ("gross", -1.9, "a"), ("vile", -2.6, "a"), ("evil", -2.9, "a"),
    ("angry", -2.1, "a"), ("furious", -2.5, "a"), ("upset", -1.7, "a"),
    ("sad", -2.1, "a"), ("miserable", -2.4, "a"), ("depressing", -2.2, "a"),
    ("hopeless", -2.0, "a"), ("painful", -1.9, "a"), ("unhappy", -1.9, "a"),
    ("afraid", -1.7, "a"), ("scared", -1.8, "a"), ("worried", -1.4, "a"),
    ("anxious", -1.4, "a"), ("unwelcome", -1.6, "a"), ("unfair", -1.8, "a"),
    ("dishonest", -2.0, "a"), ("selfish", -1.9, "a"), ("petty", -1.4, "a"),
    ("hate", -2.7, "v"), ("dislike", -1.6, "v"), ("despise", -2.5, "v"),
    ("loathe", -2.5, "v"), ("fail", -2.0, "v"), ("suck", -1.9, "v"),
    ("break", -1.2, "v"), ("crash", -1.5, "v"), ("ruin", -2.1, "v"),
    ("destroy", -2.2, "v"), ("waste", -1.7, "v"), ("complain", -1.2, "v"),
    ("whine", -1.5, "v"), ("insult", -2.1, "v"), ("offend", -1.9, "v"),
    ("attack", -1.8, "v"), ("abuse", -2.8, "v"), ("harass", -2.5, "v"),
    ("bully", -2.4, "v"), ("mock", -1.7, "v"), ("ridicule", -1.9, "v"),
    ("blame", -1.4, "v"), ("reject", -1.4, "v"), ("ignore", -1.1, "v"),
    ("annoy", -1.7, "v"), ("irritate", -1.8, "v"), ("disappoint", -1.9, "v"),
    ("frustrate", -1.9, "v"), ("confuse", -1.1, "v"), ("regret", -1.6, "v"),
    ("failure", -2.1, "n"), ("disaster", -2.3, "n"), ("catastrophe", -2.2, "n"),
    ("mess", -1.5, "n"), ("garbage", -1.9, "n"), ("trash", -1.8, "n"),
    ("junk", -1.5, "n"), ("rubbish", -1.5, "n"), ("nonsense", -1.4, "n"),
    ("problem", -1.1, "n"), ("nightmare", -2.2, "n"), ("pain", -1.9, "n"),
    ("shame", -1.8, "n"), ("disgrace", -2.1, "n"), ("insult", -2.1, "n"),
    ("idiot", -2.3, "n"), ("moron", -2.4, "n"), ("imbecile", -2.3, "n"),
    ("fool", -1.9, "n"), ("loser", -2.1, "n"), ("jerk", -2.0, "n"),
    ("coward", -1.9, "n"), ("liar", -2.2, "n"), ("enemy", -1.8, "n"),
    ("threat", -1.7, "n"), ("conflict", -1.3, "n"), ("complaint", -1.1, "n"),
    ("damn", -1.5, "x"), ("dammit", -1.9, "x"), ("crap", -1.9, "x"),
    ("shit", -2.4, "x"), ("shitty", -2.6, "x"), ("fuck", -2.5, "x"),
    ("fucking", -2.3, "x"), ("asshole", -2.8, "x"), ("bitch", -2.6, "x"),
    ("bastard", -2.5, "x"), ("bullshit", -2.2, "x"), ("wtf", -1.9, "x"),
    ("worse", -2.1, "x"), ("worst", -3.1, "x"), ("ugh", -1.6, "x"),
    ("meh", -0.9, "x"), ("nope", -0.8, "x"),
]

# irregular forms the naive morphology would get wrong
IRREGULAR = {
    "win": ["wins", "won", "winning"],
    "break": ["breaks", "broke", "breaking"],
    "love": ["loves", "loved", "loving"],
    "like": ["likes", "liked"],
    "despise": ["despises", "despised"],
    "loathe": ["loathes", "loathed", "loathing"],
    "delight": ["delights", "delighted", "delightful"],
    "thank": ["thanked", "thanking"],
    "succeed": ["succeeds", "succeeded"],
    "success": ["successes"],
    "mess": ["messes"],
    "abuse": ["abuses", "abused", "abusing"],
    "confuse": ["confuses", "confused", "confusing"],
    "bully": ["bullies", "bullied", "bullying"],
    "ridicule": ["ridicules", "ridiculed"],
    "annoy": ["annoys", "annoyed", "annoying"],
    "catastrophe": ["catastrophes"],
    "victory": ["victories"],
    "pleasure": ["pleasures"],
    "enemy": ["enemies"],
    "failure": ["failures"],
    "happy": ["happier", "happiest", "happily"],
    "easy": ["easier", "easiest", "easily"],
    "ugly": ["uglier", "ugliest"],
    "messy": ["messier", "messiest"],
    "buggy": ["buggier", "buggiest"],
    "lazy": ["lazier", "laziest", "lazily"],
    "sloppy": ["sloppier", "sloppiest"],
    "nasty": ["nastier", "nastiest"],
    "petty": ["pettier", "pettiest"],
    "lousy": ["lousier", "lousiest"],
    "funny": ["funnier", "funniest"],
}


def _inflect(term: str, pos: str) -> list[str]:
    if term in IRREGULAR:
        return IRREGULAR[term]
    out = []
    if pos == "n":
        out.append(term + ("es" if term.endswith(("s", "x", "sh", "ch")) else "s"))
    elif pos == "v":
        out.append(term + ("es" if term.endswith(("s", "x", "sh", "ch")) else "s"))
        if term.endswith("e"):
            out += [term + "d", term[:-1] + "ing"]
        else:
            out += [term + "ed", term + "ing"]
    elif pos == "a":
        # comparatives are too irregular to generate; see IRREGULAR
        if not term.endswith(("y", "ly")):
            out.append(term + "ly")
    return out


def _modifier_terms() -> set:
    """Booster and negator terms; the analyzer never scores their valence,
    so they must not appear in the valence lexicon."""
    data = pathlib.Path(__file__).resolve().parent.parent / "src/crs/data"
    out = set()
    for line in (data / "boosters.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            out.add(line.split("\t")[0])
    for line in (data / "negators.txt").read_text().splitlines():
        if line and not line.startswith("#"):
            out.add(line.strip())
    return out


def main() -> None:
    excluded = _modifier_terms()
    entries = {}
    for term, valence, pos in BASES:
        for form in (term, *_inflect(term, pos)):
            if form not in excluded:
                entries.setdefault(form, valence)
    sys.stdout.write("# valence lexicon: term<TAB>valence in [-4, 4]\n")
    sys.stdout.write(f"# {len(entries)} entries, generated by scripts/build_valence_lexicon.py\n")
    for term in sorted(entries):
        sys.stdout.write(f"{term}\t{entries[term]}\n")


if __name__ == "__main__":
    main()
