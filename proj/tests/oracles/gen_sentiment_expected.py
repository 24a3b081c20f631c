#!/usr/bin/env python3
"""Generate frozen expected polarities for the rule-based sentiment scorer.

Independent reimplementation of the documented scoring rule:

  1. lowercase alphabetic tokens, apostrophe-internal contractions kept,
     digits and punctuation dropped
  2. each token with a lexicon valence v0 looks back at the previous
     3 tokens:
       - every booster in the window shifts the valence by
         sign(v0) * booster_value (magnitude change, original sign)
       - then every negator in the window multiplies by -0.74
  3. raw = sum of adjusted valences
  4. polarity = raw / sqrt(raw^2 + 15)

Writes tests/data/sentiment_cases.json with the lexicon and 25 cases.
"""

import json
import math
import os
import re

LEXICON = {
    "good": 1.9, "great": 3.1, "bad": -2.5, "terrible": -3.4,
    "happy": 2.7, "sad": -2.1, "love": 3.2, "hate": -2.7,
    "fine": 0.8, "awful": -3.1, "nice": 1.8, "horrible": -2.9,
    "joy": 2.9, "pain": -2.3, "calm": 1.3, "angry": -2.2,
}
NEGATORS = {"not", "no", "never", "don't", "isn't", "won't", "cannot"}
BOOSTERS = {"very": 0.293, "extremely": 0.293, "really": 0.293,
            "absolutely": 0.293, "slightly": -0.293, "somewhat": -0.293,
            "barely": -0.293}

CASES = [
    "",
    "good",
    "bad",
    "good good good",
    "not good",
    "not bad",
    "very good",
    "very bad",
    "slightly good",
    "not very good",
    "never really happy",
    "no joy no pain",
    "i love sunday dinners",
    "i do not think this is good",
    "the weather was terrible but the food was great",
    "not not good",
    "she is very very happy",
    "extremely awful day today",
    "it was fine, just fine.",
    "don't hate",
    "absolutely horrible and absolutely great",
    "calm calm calm calm calm calm calm calm",
    "somewhat sad but somewhat calm",
    "nothing here matches the lexicon at all",
    "i love it! i love it! i love it!",
]


def tokenize(text):
    toks = re.findall(r"[a-z']+", text.lower())
    out = []
    for t in toks:
        t = t.strip("'")
        if t:
            out.append(t)
    return out


def score(text):
    toks = tokenize(text)
    raw = 0.0
    for i, t in enumerate(toks):
        if t not in LEXICON:
            continue
        v0 = LEXICON[t]
        v = v0
        window = toks[max(0, i - 3):i]
        for w in window:
            if w in BOOSTERS:
                if v0 > 0:
                    v += BOOSTERS[w]
                elif v0 < 0:
                    v -= BOOSTERS[w]
        for w in window:
            if w in NEGATORS:
                v *= -0.74
        raw += v
    return raw / math.sqrt(raw * raw + 15.0)


def main():
    cases = [{"text": t, "expected_polarity": score(t)} for t in CASES]
    assert len(cases) == 25
    payload = {
        "lexicon": LEXICON,
        "negators": sorted(NEGATORS),
        "boosters": BOOSTERS,
        "cases": cases,
    }
    out = os.path.join(os.path.dirname(__file__), "..", "data",
                       "sentiment_cases.json")
    with open(out, "w") as f:
        json.dump(payload, f, indent=1)
    print(f"wrote {len(cases)} sentiment cases")


if __name__ == "__main__":
    main()
