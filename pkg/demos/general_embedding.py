# The same square construction for other subshifts.

from fractions import Fraction

from salimit import general_embed
from salimit.languages import FullShift, GoldenMean
from salimit.words import SymbolicPoint

full = general_embed(2, FullShift(2))
golden = general_embed(2, GoldenMean())
print(full, golden)

# For the full shift every follower set is the whole Cantor set, so phi only
# rises on the decreasing lap.
for k in range(0, 19, 3):
    x = Fraction(k, 18)
    print(x, full.lap_index(x), full.phi(x).enclosure)

# The golden mean shift forbids 11. After a 1, the next point must start
# with 0, so 110^inf gets lifted.
x = golden.embed_e(SymbolicPoint.parse("110^inf"))
print(x, golden.phi(x).enclosure)
x = golden.embed_e(SymbolicPoint.parse("1010^inf"))
print(x, golden.phi(x).enclosure)
