"""
switching rook polynomials by hand and by machine
"""

from math import comb

from cellrook import formats, rook
from cellrook.geometry import normalize, rect


def block(m, n):
    return normalize([(x, y) for x in range(1, m + 1) for y in range(1, n + 1)])


# rectangles: classes of k rooks are picked by choosing k columns and k rows
for m, n in [(2, 2), (3, 2), (3, 3), (4, 3)]:
    p = rook.switching_polynomial(block(m, n))
    print("%dx%d" % (m, n), p, "  closed form", [comb(m, k) * comb(n, k) for k in range(min(m, n) + 1)])

# a switch swaps the two diagonals of a rectangle inside P
sq = block(2, 2)
f = rook.as_config([(1, 1), (2, 2)])
print(f, "->", rook.switch_neighbors(sq, f))

# the L tromino has no 2x2 block so its two rooks can never switch
L = formats.parse_text("#\n##\n")
print("L tromino", rook.switching_polynomial(L), [list(c) for c in rook.configs(L, 2)])

# a non-palindromic one
P = formats.parse_text("..#\n..##\n.##\n##\n.#\n")
classes = rook.SwitchClasses(P, 4)
print(formats.to_text(P), rook.switching_polynomial(P), sep="")
for group in classes.classes():
    print("  class of", len(group), "canonical", rook.canonicalize(P, group[0]))

# square complement on the 8x8 board
f = rook.canonical_in_rectangle(rect(1, 1, 8, 8), [(1, 2), (6, 4), (7, 6)])
print(f, "->", rook.square_complement(8, f))
