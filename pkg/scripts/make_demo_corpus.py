"""Regenerate the synthetic demo corpora shipped in src/tweetrules/data/.

    python scripts/make_demo_corpus.py

Output is fully determined by the seeds below; rerunning rewrites identical files.
"""

import random
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "tweetrules" / "data"

PLACES = ["Ohio", "Lagos", "Milan", "Queens", "Kerala", "Texas", "Madrid", "Ontario", "Jakarta", "Bavaria",
          "the county", "our district", "Cook County", "Manila", "Cape Town"]
VIRUS = ["covid19", "COVID-19", "coronavirus", "Covid", "corona", "#COVID19", "#coronavirus"]
HASHTAGS = ["#StopCovid19", "#covid19", "#CoronaVirusUpdate", "#StayHome", "#COVID19Pandemic",
            "#FightCoronavirus", "#lockdown", "#MaskUp", ""]
NOISE = 0.07
CHATTER = [
    "Stay safe everyone!", "Please wash your hands.", "Pray for the families.", "Wear a mask!",
    "This is so sad.", "Unbelievable.", "Take care out there.", "Stay home if you can.",
    "Thoughts with the nurses tonight.", "We will get through this!", "So scary...",
]

INFORMATIVE = [
    "{n} new cases confirmed in {place}.",
    "{place} reports {n} new {virus} deaths today.",
    "First confirmed death from {virus} in {place}.",
    "{place} confirms its first case of {virus}.",
    "Health officials report {n} additional deaths in {place}",
    "{n} confirmed cases and {m} deaths in {place} as of this morning.",
    "BREAKING: first {virus} case reported in {place}",
    "{place}: {n} suspected cases, {m} confirmed cases so far.",
    "Second confirmed case in {place}, patient had travelled from {place2}.",
    "{place} now has {n} {virus} cases and {m} recoveries.",
    "Total {virus} infections in {place} rise to {n}.",
    "{n} new infections and {m} new deaths recorded in {place} overnight.",
    "Third death linked to {virus} in {place}.",
    "Update: {n} new confirmed {virus} cases in {place}",
    "A man who returned from {place2} tested positive for {virus} in {place}.",
    "{place} health ministry: {n} people tested positive, {m} died.",
    "{n} people in {place} have now died after contracting the virus.",
    "The patient, a nurse from {place}, is the region's first known infection",
    "Daily update for {place}: {n} new confirmed cases, {m} new deaths and {m2} new recoveries.",
    "{place} records its first confirmed death and {n} new infections.",
]

UNINFORMATIVE = [
    "How is everyone coping with the {virus} lockdown?",
    "My first case of cabin fever is real lol",
    "Working from home again, day {n} of quarantine.",
    "Is there a vaccine for {virus} yet? Asking for a friend.",
    "Just made sourdough for the {n}th time.",
    "Can't believe {place} still has no masks in stores.",
    "The governor of {place} speaks about {virus} at 5pm.",
    "Read this thread on how {virus} spreads on surfaces.",
    "Schools in {place} stay closed until further notice.",
    "Remember to check on your elderly neighbours.",
    "Another {virus} conspiracy video, please stop sharing these.",
    "New study on {virus} and vitamin D, worth a read",
    "I miss going to the gym so much",
    "Why are people hoarding toilet paper in {place}??",
    "Testing capacity in {place} needs to improve, says mayor.",
    "What's the worst case scenario for the economy?",
    "New cases of boredom in my house: {n}",
    "My second coffee today and it's only 9am.",
]


def _fill(template, rng):
    place, place2 = rng.sample(PLACES, 2)
    return template.format(
        n=rng.randint(2, 950), m=rng.randint(1, 80), m2=rng.randint(1, 80), place=place, place2=place2, virus=rng.choice(VIRUS)
    )


def make_tweet(label, rng):
    body = _fill(rng.choice(INFORMATIVE if label == "INFORMATIVE" else UNINFORMATIVE), rng)
    parts = [body]
    roll = rng.random()
    if roll < 0.35:
        parts.append(rng.choice(CHATTER))
    elif roll < 0.5:
        parts.insert(0, rng.choice(CHATTER))
    elif roll < 0.6:
        parts.extend(rng.sample(CHATTER, 2))
    tag = rng.choice(HASHTAGS)
    if tag:
        parts.append(tag)
    return " ".join(parts)


def write_corpus(path, prefix, size, seed):
    rng = random.Random(seed)
    labels = ["INFORMATIVE"] * (size * 9 // 20) + ["UNINFORMATIVE"] * (size - size * 9 // 20)
    rng.shuffle(labels)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, label in enumerate(labels, start=1):
            text = make_tweet(label, rng)
            # annotator disagreement
            if rng.random() < NOISE:
                label = "UNINFORMATIVE" if label == "INFORMATIVE" else "INFORMATIVE"
            fh.write(f"{prefix}{i:04d}\t{text}\t{label}\n")


if __name__ == "__main__":
    write_corpus(DATA / "demo_corpus.tsv", "d", 240, seed=2020)
    write_corpus(DATA / "demo_heldout.tsv", "h", 60, seed=2021)
