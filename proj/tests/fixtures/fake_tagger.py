#!/usr/bin/env python3
"""Stand-in tagger speaking the line-delimited protocol on stdin/stdout.

Capitalized tokens after the first position lean towards B-PER, everything
else towards O. With --bad, every token's probabilities sum to 0.9.
"""

import json
import sys

bad = "--bad" in sys.argv[1:]

for line in sys.stdin:
    request = json.loads(line)
    out = []
    for sentence in request["sentences"]:
        dists = []
        for i, tok in enumerate(sentence):
            if i > 0 and tok[:1].isupper():
                d = {"O": 0.3, "B-PER": 0.6, "B-LOC": 0.1}
            else:
                d = {"O": 0.95, "B-LOC": 0.05}
            if bad:
                d["O"] -= 0.1
            dists.append(d)
        out.append(dists)
    sys.stdout.write(json.dumps({"distributions": out}) + "\n")
    sys.stdout.flush()
