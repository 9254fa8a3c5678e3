"""Count B_ii towers by height and by top degree, and print the signed totals.

The signed total for towers rooted at {b,c} of height u reaching degree
l+2 should be (-1)^(u-1) C(l-u, u-1).
"""

import math
import sys
from collections import Counter

from skewgrowth import enumerate_towers, parse_preset_spec

d = int(sys.argv[1]) if len(sys.argv) > 1 else 10
p = parse_preset_spec("bii")
towers = enumerate_towers(p, d)
print(f"{len(towers)} towers up to degree {d}")
print("by height:", dict(sorted(Counter(t.height for t in towers).items())))

signed = Counter()
for t in towers:
    if t.stages and [p.format_word(e.canonical) for e in t.stages[0]] == ["b", "c"]:
        for m in t.top:
            signed[t.height, m.degree - 2] += t.sign
print("height u, l: signed count vs binomial")
for (u, l), v in sorted(signed.items(), key=lambda kv: (kv[0][1], kv[0][0])):
    expected = (-1) ** (u - 1) * math.comb(l - u, u - 1)
    print(f"  u={u} l={l}: {v:+d}  expected {expected:+d}")
