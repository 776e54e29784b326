"""
two readings of "aligned" in the second stability condition: same run, or just
same coordinate.
list the shapes where they disagree and show that the coordinate reading
breaks the palindromic equivalence on every one of them
"""

from cellrook import formats
from cellrook.analysis import is_palindromic
from cellrook.enumerate import enumerate_shapes
from cellrook.geometry import ALIGN_COORDINATE, ALIGN_RUN, is_domino_stable
from cellrook.rook import switching_polynomial

for universe, ranks in [("poly", range(6, 10)), ("collection", range(4, 8))]:
    for n in ranks:
        diff = []
        for P in enumerate_shapes(n, universe):
            a = is_domino_stable(P, ALIGN_RUN)[0]
            b = is_domino_stable(P, ALIGN_COORDINATE)[0]
            if a != b:
                diff.append((P, a, b))
        pal = sum(is_palindromic(switching_polynomial(P)) == a for P, a, _ in diff)
        print(universe, n, "disagreements", len(diff), " run reading right on", pal)

P = formats.parse_text(".#\n##.#\n#.#\n")
print(formats.to_text(P), switching_polynomial(P),
      "run:", is_domino_stable(P)[0], "coordinate:", is_domino_stable(P, ALIGN_COORDINATE)[0])
