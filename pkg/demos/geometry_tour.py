"""
walk through the structure behind domino-stability on a few small shapes:
runs, maximal rectangles, residues and the glued squares
"""

from cellrook import formats, geometry

SHAPES = {
    "L tromino": "#\n##\n",
    "plus": ".#.\n###\n.#.\n",
    "staircase": "..#\n.##\n###\n",
    "two blocks": "##\n##..\n..##\n..##\n",
}

for name, text in SHAPES.items():
    P = formats.parse_text(text)
    print("=" * 40)
    print(name, "rank", P.rank)
    print(formats.to_text(P), end="")
    h, v = geometry.runs(P)
    print(len(h), "rows,", len(v), "columns")
    for i, (r, res) in enumerate(zip(P.maximal_rectangles, P.residues)):
        print("  B%d %s residue %s" % (i, r, sorted(map(tuple, res.cells)) or "-"))
    for i, g in geometry.stable_squares(P):
        print("  glued B%d -> %dx%d" % (i, g.width, g.height))
    ok, witness = geometry.is_domino_stable(P)
    print("domino-stable:", ok)
    if witness:
        print("  ", witness)

# the occupancy grid is a plain numpy array, padded by one empty cell
P = formats.parse_text(SHAPES["staircase"])
print(P.occupancy.astype(int)[::-1])
