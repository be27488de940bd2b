"""Entropy grows linearly in the power; so does distance for twisted plats.

Entropy comes from iterating Dynnikov coordinates of a multicurve. For a
highly twisted fishnet plat the bridge distance is ceil(h / (2(m - 2))) with
h the height and m the width.
"""

from platknots import entropy, fishnet_parse, jm_distance, parse_braid

table1 = parse_braid("s2^2 s4 s1 s3 s5 s2", 6)
h = entropy(table1)
print(f"entropy of s2^2 s4 s1 s3 s5 s2: {h:.5f}")
for m in (5, 7, 11, 13):
    print(f"  m={m:2d}: entropy {entropy(table1 ** m):9.5f}   m * base {m * h:9.5f}")

table2 = parse_braid("s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3", 6)
print("\nk  entropy    height  distance")
for k in range(9):
    w = table2 ** (2 * k + 1)
    g = fishnet_parse(w)
    print(f"{k}  {entropy(w):9.5f}  {g.height:6d}  {jm_distance(g):8d}")
