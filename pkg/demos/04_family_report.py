"""A family of prime hyperbolic knots and the genus bounds separating them."""

from platknots import distinctness_witnesses, generate_family, parse_braid

report = generate_family(parse_braid("s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3", 6), 17)
print("verdict:", report.verdict.value, " k =", report.k, " warnings:", list(report.warnings))
for e in report.entries:
    print(f"m={e.power:2d}  entropy {e.entropy:9.5f}  distance {e.distance.value:2d}  "
          f"prime {e.prime!s:5s}  hyperbolic {e.hyperbolic!s:5s}  genus >= {e.genus_lower_bound}")

print("\ngenus witnesses:")
for w in distinctness_witnesses(report):
    if w.separated:
        print(f"  {w.m1} vs {w.m2}: {w.reason}")
