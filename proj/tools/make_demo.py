#!/usr/bin/env python3
"""Regenerates the bundled demo data under data/demo.

Everything is synthetic and deterministic: a 10 s voice-like WAV with its
word alignment, a one-line transcript, a gazetteer lexicon and a small
brat-annotated article corpus for `deid prep`.
"""

import math
import os
import random
import struct
import sys
import wave

RATE = 16000
DURATION = 10.0

# (word, start, end); gaps are silence.
WORDS = [
    ("Bonjour", 0.30, 0.78), ("je", 0.90, 1.05), ("suis", 1.05, 1.32),
    ("Marie", 1.40, 1.78), ("Dubois", 1.78, 2.30), ("et", 2.42, 2.55),
    ("je", 2.55, 2.68), ("vis", 2.68, 2.95), ("à", 2.95, 3.05),
    ("Lyon", 3.05, 3.60), ("depuis", 3.70, 4.05), ("deux", 4.05, 4.30),
    ("ans", 4.30, 4.62), ("Je", 5.10, 5.25), ("travaille", 5.25, 5.80),
    ("chez", 5.80, 6.05), ("Renault", 6.05, 6.62), ("pour", 6.75, 6.98),
    ("2000", 6.98, 7.60), ("euros", 7.60, 8.02), ("par", 8.10, 8.30),
    ("mois", 8.30, 8.80),
]

TRANSCRIPT = ("Bonjour, je suis Marie Dubois et je vis à Lyon depuis deux ans. "
              "Je travaille chez Renault pour 2000 euros par mois.")

# (label, first word index, last word index inclusive)
ENTITIES = [("PER", 3, 4), ("LOC", 9, 9), ("ORG", 16, 16), ("MONEY", 18, 19)]

LEXICON = """# CODE phrase, one entry per line; matching is case-insensitive.
PER marie dubois
PER marie
PER jean martin
LOC lyon
LOC paris
LOC marseille
ORG renault
ORG la poste
CUR euros
CUR euro
CUR dollars
"""

REMAP = """# `label = CODE` or `label = DELETE`; `text: surface form = CODE` overrides one entity text (after leading determiners are stripped).
Brand = ORG
Institution = ORG
Region = LOC
text: région = DELETE
"""

ARTICLES = [
    ("Le maire de [Lyon|Location] a reçu [Jean Martin|Person] lundi.",
     "La réunion a eu lieu à la mairie.",
     "Mme [Claire Petit|Person] représentait [la région|Local region].",
     "Le budget atteint [3 millions d'euros|Money Amount]."),
    ("[Renault|Company] annonce un bénéfice de [500 millions|Money Amount].",
     "Les ventes progressent en [Europe|World region].",
     "Le directeur [Luca de Meo|Person] se dit confiant.",
     "La monnaie [euro|Currency] reste stable."),
    ("L'association [Les Amis du Rhône|Association] organise une collecte.",
     "Elle vise [10 000 euros|Money Amount] avant l'été.",
     "Les dons arrivent de toute la [France|Country].",
     "Le président [Paul Durand|Person] remercie les bénévoles."),
    ("La [Banque de France|Organization] publie ses prévisions.",
     "La croissance serait faible en [Bretagne|Local region].",
     "Le [dollar|Currency] recule face à l'euro.",
     "Les économistes de [Paris|City] restent prudents."),
    ("Le journal [Le Monde|Media] révèle un accord.",
     "Il porte sur [2 milliards|Financing] de crédits.",
     "Les négociations ont eu lieu à [Bruxelles|City].",
     "[Anne Leroy|Person] a mené les discussions."),
    ("Dr [Sophie Bernard|Person] ouvre une clinique à [Marseille|City].",
     "Le projet a coûté [1,5 million d'euros|Money Amount].",
     "La [Caisse d'Épargne|Company] a prêté la somme.",
     "Les patients viendront de [Provence|Local region]."),
    ("Le club [Olympique Lyonnais|Organization] recrute un entraîneur.",
     "M. [Karim Benali|Person] serait favori.",
     "Son salaire dépasserait [200 000 euros|Money Amount].",
     "Les supporters attendent à [Gerland|Location]."),
    ("La société [Airbus|Company] livre un avion à [Singapour|Country].",
     "Le contrat vaut [80 millions de dollars|Money Amount].",
     "Les actionnaires de [Toulouse|City] applaudissent.",
     "[Guillaume Faury|Person] salue les équipes."),
]


def write_wav(path):
    rng = random.Random(7)
    n = int(round(DURATION * RATE))
    samples = [rng.randint(-40, 40) for _ in range(n)]  # room noise
    for k, (_, start, end) in enumerate(WORDS):
        a, b = int(start * RATE), int(end * RATE)
        f0 = 110.0 + 15.0 * (k % 5)
        for i in range(a, b):
            x = (i - a) / max(1, b - a)
            env = math.sin(math.pi * x) ** 2
            t = i / RATE
            v = sum(math.sin(2 * math.pi * f0 * h * t) / h for h in (1, 2, 3, 4))
            samples[i] += int(round(6000 * env * v))
    samples = [max(-32768, min(32767, s)) for s in samples]
    with wave.open(path, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(RATE)
        w.writeframes(struct.pack("<%dh" % n, *samples))


def fill_gaps(items):
    out, t = [], 0.0
    for text, start, end in items:
        if start > t:
            out.append(("", t, start))
        out.append((text, start, end))
        t = end
    if t < DURATION:
        out.append(("", t, DURATION))
    return out


def write_textgrid(path):
    entities = [(label, WORDS[a][1], WORDS[b][2]) for label, a, b in ENTITIES]
    tiers = [("words", fill_gaps(WORDS)), ("entities", fill_gaps(entities))]
    lines = ['File type = "ooTextFile"', 'Object class = "TextGrid"', "",
             "xmin = 0", "xmax = %g" % DURATION, "tiers? <exists>", "size = %d" % len(tiers), "item []:"]
    for i, (name, items) in enumerate(tiers, 1):
        lines += ["    item [%d]:" % i, '        class = "IntervalTier"', '        name = "%s"' % name,
                  "        xmin = 0", "        xmax = %g" % DURATION, "        intervals: size = %d" % len(items)]
        for j, (text, start, end) in enumerate(items, 1):
            lines += ["        intervals [%d]:" % j, "            xmin = %g" % start,
                      "            xmax = %g" % end, '            text = "%s"' % text.replace('"', '""')]
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


def write_article(stem, sentences):
    text, anns = "", []
    for s in sentences:
        while "[" in s:
            a = s.index("[")
            b = s.index("]", a)
            surface, label = s[a + 1:b].split("|")
            begin = len(text) + a
            anns.append((label, begin, begin + len(surface), surface))
            s = s[:a] + surface + s[b + 1:]
        text += s + " "
    text = text.rstrip() + "\n"
    with open(stem + ".txt", "w", encoding="utf-8") as f:
        f.write(text)
    with open(stem + ".ann", "w", encoding="utf-8") as f:
        for k, (label, begin, end, surface) in enumerate(anns, 1):
            assert text[begin:end] == surface
            f.write("T%d\t%s %d %d\t%s\n" % (k, label.replace(" ", "_"), begin, end, surface))


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "demo")
    os.makedirs(os.path.join(root, "corpus"), exist_ok=True)
    write_wav(os.path.join(root, "demo.wav"))
    write_textgrid(os.path.join(root, "demo.TextGrid"))
    with open(os.path.join(root, "demo.txt"), "w", encoding="utf-8") as f:
        f.write("demo\t" + TRANSCRIPT + "\n")
    with open(os.path.join(root, "lexicon.txt"), "w", encoding="utf-8") as f:
        f.write(LEXICON)
    with open(os.path.join(root, "remap.txt"), "w", encoding="utf-8") as f:
        f.write(REMAP)
    for k, sentences in enumerate(ARTICLES, 1):
        write_article(os.path.join(root, "corpus", "article_%02d" % k), sentences)


if __name__ == "__main__":
    main()
