"""Non-attacking rook configurations and the switching rook polynomial.

A rook configuration is a sorted tuple of :class:`~cellrook.geometry.Cell`.
Two rooks attack each other when their cells share a row run or a column run
of the collection; cells on the same coordinate row separated by a gap do not
attack.

Class counting enumerates every ``k``-configuration, interns it, and merges
configurations one switch apart with a union-find.  Only one ``k`` is held in
memory at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import (CellNotInCollection, InvalidConfig, KOutOfRange,
                     NotCanonical, NotDominoStable, NotSquareBoard)
from .geometry import (ALIGN_RUN, Cell, CellCollection, CellRect, inner_interval,
                       is_domino_stable, rect, run_ids, stable_squares)


def as_config(cells) -> tuple:
    return tuple(sorted(Cell(*c) for c in cells))


def attacking(P: CellCollection, a, b) -> bool:
    """True when rooks on ``a`` and ``b`` share a row run or a column run."""
    for c in (a, b):
        if c not in P.cells:
            raise CellNotInCollection(c)
    ha, va = run_ids(P, a)
    hb, vb = run_ids(P, b)
    return ha == hb or va == vb


def is_valid_config(P: CellCollection, f) -> bool:
    hs, vs = set(), set()
    for c in f:
        if c not in P.cells:
            return False
        h, v = run_ids(P, c)
        if h in hs or v in vs:
            return False
        hs.add(h)
        vs.add(v)
    return True


def _check_config(P: CellCollection, f):
    if not is_valid_config(P, f):
        raise InvalidConfig(f"{list(f)} is not a non-attacking configuration of {P!r}")


# --------------------------------------------------------------------------
# Rook number
# --------------------------------------------------------------------------

def max_matching(P: CellCollection) -> list[Cell]:
    """Cells of one maximum non-attacking placement.

    Rows runs and column runs form the two sides of a bipartite graph with one
    edge per cell; non-attacking placements are exactly its matchings.
    """
    idx = P._runs
    cells = P.sorted_cells
    rows = [idx.h_of[c] for c in cells]
    cols = [idx.v_of[c] for c in cells]
    graph = csr_matrix((np.ones(len(cells), dtype=np.int8), (rows, cols)),
                       shape=(len(idx.horizontal), len(idx.vertical)))
    match = maximum_bipartite_matching(graph, perm_type="column")
    by_runs = {(h, v): c for c, h, v in zip(cells, rows, cols)}
    return sorted(by_runs[(h, int(v))] for h, v in enumerate(match) if v >= 0)


def rook_number(P: CellCollection) -> int:
    return len(max_matching(P))


# --------------------------------------------------------------------------
# Enumeration and switches
# --------------------------------------------------------------------------

class _Board:
    """Integer-indexed view of a collection for the hot loops."""

    def __init__(self, P: CellCollection):
        self.P = P
        self.cells = P.sorted_cells
        self.index = {c: i for i, c in enumerate(self.cells)}
        idx = P._runs
        self.hbit = [1 << idx.h_of[c] for c in self.cells]
        self.vbit = [1 << idx.v_of[c] for c in self.cells]


def _config_indices(board: _Board, k: int):
    n = len(board.cells)
    hbit, vbit = board.hbit, board.vbit
    chosen: list = []

    def extend(start, hmask, vmask):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        need = k - len(chosen)
        for i in range(start, n - need + 1):
            if hbit[i] & hmask or vbit[i] & vmask:
                continue
            chosen.append(i)
            yield from extend(i + 1, hmask | hbit[i], vmask | vbit[i])
            chosen.pop()

    yield from extend(0, 0, 0)


def configs(P: CellCollection, k: int, r: int | None = None):
    """Yield every ``k``-rook configuration exactly once, lexicographically."""
    if r is None:
        r = rook_number(P)
    if not 0 <= k <= r:
        raise KOutOfRange(f"k={k} outside 0..{r}")
    cells = P.sorted_cells
    for t in _config_indices(_Board(P), k):
        yield tuple(cells[i] for i in t)


def _switch_pairs(P: CellCollection, f):
    """Yield ``(i, j, a', b')``: positions in ``f`` of a switchable pair and
    the cells they move to."""
    for i, j in combinations(range(len(f)), 2):
        a, b = f[i], f[j]
        if a.x == b.x or a.y == b.y:
            continue
        if a.x > b.x:
            a, b = b, a
        box = rect(a.x, min(a.y, b.y), b.x, max(a.y, b.y))
        if inner_interval(P, box):
            yield i, j, Cell(a.x, b.y), Cell(b.x, a.y)


def switch_neighbors(P: CellCollection, f) -> list[tuple]:
    """All configurations one switch away from ``f``."""
    f = as_config(f)
    _check_config(P, f)
    out = set()
    for i, j, a, b in _switch_pairs(P, f):
        rest = [c for t, c in enumerate(f) if t != i and t != j]
        out.add(as_config(rest + [a, b]))
    return sorted(out)


class SwitchClasses:
    """Switch-equivalence classes of the ``k``-rook configurations of ``P``."""

    def __init__(self, P: CellCollection, k: int, r: int | None = None):
        if r is None:
            r = rook_number(P)
        if not 0 <= k <= r:
            raise KOutOfRange(f"k={k} outside 0..{r}")
        self.P = P
        self.k = k
        board = _Board(P)
        self._cells = board.cells
        self._index = board.index
        self.configs = list(_config_indices(board, k))
        self._id = {t: n for n, t in enumerate(self.configs)}
        self._parent = list(range(len(self.configs)))
        self._merge_switches()

    def _find(self, a: int) -> int:
        parent = self._parent
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def _union(self, a: int, b: int):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            if ra < rb:
                ra, rb = rb, ra
            self._parent[ra] = rb

    def _merge_switches(self):
        if self.k < 2:
            return
        P, cells, index = self.P, self._cells, self._index
        for n, t in enumerate(self.configs):
            f = [cells[i] for i in t]
            for i, j, a, b in _switch_pairs(P, f):
                # only the anti-diagonal to diagonal direction; the reverse
                # switch yields the same edge
                if (f[i].y < f[j].y) == (f[i].x < f[j].x):
                    continue
                rest = [t[s] for s in range(len(t)) if s != i and s != j]
                g = tuple(sorted(rest + [index[a], index[b]]))
                self._union(n, self._id[g])

    @cached_property
    def roots(self) -> list[int]:
        return [self._find(n) for n in range(len(self.configs))]

    def __len__(self):
        return len(set(self.roots))

    @property
    def count(self) -> int:
        return len(self)

    def config(self, n: int) -> tuple:
        return tuple(self._cells[i] for i in self.configs[n])

    def class_id(self, f) -> int:
        """Representative index of the class containing ``f``."""
        t = tuple(sorted(self._index[c] for c in f))
        if t not in self._id:
            raise InvalidConfig(f"{list(f)} is not a {self.k}-configuration")
        return self._find(self._id[t])

    def same_class(self, f, g) -> bool:
        return self.class_id(f) == self.class_id(g)

    def classes(self) -> list[list[tuple]]:
        """Configurations grouped by class, classes ordered by first member."""
        groups: dict = {}
        for n, root in enumerate(self.roots):
            groups.setdefault(root, []).append(self.config(n))
        return list(groups.values())


def class_count(P: CellCollection, k: int, r: int | None = None) -> int:
    """Number of switch-equivalence classes of ``k``-rook configurations."""
    return SwitchClasses(P, k, r).count


# --------------------------------------------------------------------------
# The polynomial
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SwitchingPolynomial:
    """Coefficients ``[r_0, ..., r_d]`` in ascending degree."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            coef = "" if c == 1 else str(c)
            terms.append(f"{coef}t" if k == 1 else f"{coef}t^{k}")
        return " + ".join(terms) if terms else "0"


def switching_polynomial(P: CellCollection) -> SwitchingPolynomial:
    d = rook_number(P)
    return SwitchingPolynomial(tuple(class_count(P, k, d) for k in range(d + 1)))


# --------------------------------------------------------------------------
# Canonical configurations
# --------------------------------------------------------------------------

def canonical_in_rectangle(r: CellRect, f) -> tuple:
    """The canonical configuration of ``r`` equivalent to ``f``: occupied
    columns and rows sorted ascending and paired in order."""
    for c in f:
        if c not in r:
            raise InvalidConfig(f"cell {tuple(c)} lies outside rectangle {r}")
    xs = sorted(c[0] for c in f)
    ys = sorted(c[1] for c in f)
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise InvalidConfig("rooks attack inside the rectangle")
    return as_config(zip(xs, ys))


def canonicalize(P: CellCollection, f) -> tuple:
    """Make ``f`` canonical in each maximal rectangle in turn."""
    cur = as_config(f)
    _check_config(P, cur)
    for r in P.maximal_rectangles:
        inside = [c for c in cur if c in r]
        if len(inside) < 2:
            continue
        outside = [c for c in cur if c not in r]
        cur = as_config(outside + list(canonical_in_rectangle(r, inside)))
    return cur


def square_complement(n: int, f) -> tuple:
    """The square complement map on the ``n x n`` board ``[1, n]^2``.

    ``f`` must be canonical (strictly increasing columns and rows).  Returns the
    configuration placing rooks on the unused columns and rows, paired in order.
    """
    if n < 1:
        raise NotSquareBoard(f"board side must be positive, got {n}")
    f = as_config(f)
    for c in f:
        if not (1 <= c.x <= n and 1 <= c.y <= n):
            raise NotSquareBoard(f"cell {tuple(c)} outside the {n}x{n} board")
    ys = [c.y for c in f]
    if any(a >= b for a, b in zip(ys, ys[1:])) or len({c.x for c in f}) != len(f):
        raise NotCanonical(f"{[tuple(c) for c in f]} is not canonical")
    if not f:
        return tuple(Cell(i, i) for i in range(1, n + 1))
    free_x = [i for i in range(1, n + 1) if i not in {c.x for c in f}]
    free_y = [j for j in range(1, n + 1) if j not in set(ys)]
    return as_config(zip(free_x, free_y))


def top_config(P: CellCollection, alignment: str = ALIGN_RUN) -> tuple:
    """Rooks on the residue cells matching the diagonal of each stable square."""
    stable, witness = is_domino_stable(P, alignment)
    if not stable:
        raise NotDominoStable(str(witness))
    out = []
    for _, glued in stable_squares(P):
        out.extend(glued.diagonal())
    return as_config(out)
