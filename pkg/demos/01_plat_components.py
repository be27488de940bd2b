"""Components of plat closures, read from the braid permutation.

A plat caps strand pairs (1,2), (3,4), ... at the top and the bottom. Only
the permutation of the braid matters for the component count, so the knotted
powers of a braid follow from powers of one permutation.
"""

from platknots import canonical_projection, knot_powers, parse_braid, plat_components, plat_graph

w = parse_braid("s4^-1 s2 s3^-1 s2^-1 s3 s4^-2 s3^-1 s2 s3^-1 s2^-1 s5^-1 s4", 6)
p = canonical_projection(w)
g = plat_graph(p)
print("permutation:", p.as_list())
print("bottom bridges:", g.bottom_edges)
print("cycles of the plat graph:", g.cycles())
print("summary:", plat_components(w).as_dict())

for text in ("s2^2 s4 s1 s3 s5 s2", "s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3"):
    b = parse_braid(text, 6)
    q = canonical_projection(b)
    print(f"\n{text}")
    print("  permutation", q.as_list(), "of order", q.order())
    print("  powers up to 25 closing to knots:", knot_powers(b, 25))
