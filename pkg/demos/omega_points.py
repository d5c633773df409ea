# Building the points omega_n(T, y) and checking them against the subshift X.
#
# A tree T and a branch y through it determine a sequence of points that walk
# back towards omega_0 = 3 4 0^inf under the shift.

from salimit import FamilyTree, named_branch, omega, shift_exponent, shift_point, member_point
from salimit.subshift import OMEGA0, parse_structure

tree = FamilyTree("increasing")
y = named_branch("primes")

for n in range(4):
    print(n, omega(n, tree, y))

# Each omega_n shifts onto omega_{n-1} after 2n + 1 + y_{n-1} steps.

for n in range(1, 6):
    t = shift_exponent(n, y)
    w = omega(n, tree, y)
    print(n, t, shift_point(w, t) == omega(n - 1, tree, y), member_point(w))

# The parser explains a word as blocks. A consistent parse means some (T, y)
# produces the word.

for word in ("3122234", "3022234"):
    for p in parse_structure(word):
        print(word, p.consistent, [b["kind"] for b in p.to_json()["blocks"]])

# Words that end in 4 but were never produced are forbidden:
print(member_point(OMEGA0), member_point(OMEGA0.prepend(4)))
