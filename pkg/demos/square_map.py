# The interval embedding and the skew product on the square.
#
# Points of 5^N go to the Cantor set through base-9 digits 0, 2, 4, 6, 8. The
# base map is a 9-lap horseshoe and phi lifts points that leave X.

from fractions import Fraction

from salimit import SymbolicPoint, embed_e, base_f, phi, apply_F, embed_E, preimage_point, SquarePoint
from salimit.intervals import follower_distance, in_B_certified

p = SymbolicPoint.parse("340^inf")
x = embed_e(p)
print("e(340^inf) =", x, " f(x) =", base_f(x), " e(shift) =", embed_e(p.shift()))

# On points of X the square map is the shift in disguise: y stays 0.
q = embed_E(p)
for _ in range(3):
    q = apply_F(q)
    print(q)

# phi vanishes on X and is positive off it. 42^inf embeds at 17/18.
for text in ("42^inf", "31222340^inf", "2^inf"):
    pt = SymbolicPoint.parse(text)
    v = phi(embed_e(pt), 8)
    print(f"{text:14s} phi in [{float(v.enclosure.lo):.6f}, {float(v.enclosure.hi):.6f}]  lap {v.lap}")

# Distances to the follower sets A_i and membership in the regions B_i.
for i in range(5):
    d = follower_distance(Fraction(1), i, 6)
    print(i, d.enclosure, in_B_certified(Fraction(1), i, 6).value)

# Every point of the square has a preimage; here it is exact.
pre = preimage_point(SquarePoint(Fraction(8, 9), Fraction(1, 3)))
print(pre.point, "lap", pre.lap, "residual", pre.residual, "->", apply_F(pre.point, 8))
