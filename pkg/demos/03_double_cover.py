"""Homology of the double branched cover from the Burau matrix at t = -1.

On four strands the cover of the bridge sphere is a torus. The upper
compressing curve of the trefoil plat is a (3, 1) curve, so the cover is the
lens space L(3, 1). The order of H_1 is the knot determinant, which a
Goeritz matrix of the exported diagram computes independently.
"""

from platknots import cover_data, goeritz_determinant, h1_order, parse_braid
from platknots.cover import bottom_left_entry, is_unknot_2bridge, torus_slope
from platknots.diagram import pd_code

for name, text in (("unknot", "s2"), ("trefoil", "s2^3"), ("figure-eight", "s2 s1^-1 s2^2 s3")):
    w = parse_braid(text, 4)
    print(f"{name:13s} slope {torus_slope(w)}  entry {bottom_left_entry(w):2d}  "
          f"|H1| {h1_order(w)}  Goeritz {goeritz_determinant(pd_code(w))}  unknot {is_unknot_2bridge(w)}")

w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6) ** 5
d = cover_data(w)
print("\nfifth power of s2^2 s4 s1 s3 s5 s2 on six strands")
print("  symplectic lift:", d.symplectic)
print("  H1 presentation:", d.h1_presentation, "order", d.h1_order, "invariant factors", d.h1_invariants)
