# Backward orbits of omega_0 inside X.
#
# Every finite backward segment ending at omega_0 is enumerated exactly and
# checked for the level structure: the omega_n visited appear with strictly
# increasing n.

from collections import Counter

from salimit import enumerate_backward, verify_structure, salpha_prefix_approx
from salimit.subshift import OMEGA0

for depth in (5, 10, 15, 20):
    en = enumerate_backward(OMEGA0, depth)
    ok = all(verify_structure(s).ok for s in en.segments)
    print(f"depth {depth:2d}: {len(en.segments):4d} segments, complete={en.complete}, structure ok={ok}")

# Which first symbols do the far ends of depth-20 segments start with?
en = enumerate_backward(OMEGA0, 20)
print(Counter(s.end.symbol(0) for s in en.segments))

# 4-prefixes of points reachable by backward segments of length 26.
probe = salpha_prefix_approx(4, 26)
print(len(probe.prefixes), "prefixes")
print(sorted("".join(map(str, p)) for p in probe.prefixes))
print("3110 reached from", probe.witnesses[(3, 1, 1, 0)])
