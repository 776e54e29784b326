"""Collections of cells and their static structure.

A cell is identified by its lower-left corner ``(x, y)``; ``x`` grows east and
``y`` grows north.  Every :class:`CellCollection` is normalized so that its
minimal bounding rectangle starts at cell ``(1, 1)``.

Derived structure (runs, maximal rectangles, residues, gluings) is computed
lazily and cached on the collection, which is otherwise immutable.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np
from scipy import ndimage

from .errors import BoardTooLarge, EmptyCollection, EmptyResidue, NotGrid

MAX_SIDE = 64

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

ALIGN_RUN = "run"
ALIGN_COORDINATE = "coordinate"


class Cell(NamedTuple):
    x: int
    y: int


class CellRect(NamedTuple):
    """The cell interval ``[lo, hi]``; both corners are cells, ``lo <= hi``."""

    lo: Cell
    hi: Cell

    @property
    def width(self) -> int:
        return self.hi.x - self.lo.x + 1

    @property
    def height(self) -> int:
        return self.hi.y - self.lo.y + 1

    @property
    def size(self) -> int:
        return self.width * self.height

    def __contains__(self, c) -> bool:
        return self.lo.x <= c[0] <= self.hi.x and self.lo.y <= c[1] <= self.hi.y

    def contains_rect(self, other: "CellRect") -> bool:
        return other.lo in self and other.hi in self

    def cells(self) -> list[Cell]:
        return [Cell(x, y)
                for x in range(self.lo.x, self.hi.x + 1)
                for y in range(self.lo.y, self.hi.y + 1)]

    def sort_key(self):
        return (self.lo.y, self.lo.x, self.hi.y, self.hi.x)

    def __str__(self):
        return f"[({self.lo.x},{self.lo.y}),({self.hi.x},{self.hi.y})]"


def rect(x1: int, y1: int, x2: int, y2: int) -> CellRect:
    return CellRect(Cell(x1, y1), Cell(x2, y2))


@dataclass(frozen=True)
class Run:
    """A maximal horizontal or vertical run of consecutive cells (a row or
    column of the collection)."""

    kind: str
    anchor: Cell
    length: int
    id: int

    def cells(self) -> list[Cell]:
        x, y = self.anchor
        if self.kind == HORIZONTAL:
            return [Cell(x + i, y) for i in range(self.length)]
        return [Cell(x, y + i) for i in range(self.length)]


@dataclass(frozen=True)
class Residue:
    """Cells of maximal rectangle ``rect_index`` lying in no other maximal
    rectangle."""

    rect_index: int
    cells: frozenset
    cols: tuple
    rows: tuple
    is_grid: bool

    @property
    def empty(self) -> bool:
        return not self.cells


@dataclass(frozen=True)
class Gluing:
    """Rectangle obtained by compacting the occupied columns and rows of a
    grid residue, with the cell correspondence in both directions.  Glued
    coordinates are 1-based."""

    width: int
    height: int
    to_glued: dict = field(repr=False)
    from_glued: dict = field(repr=False)

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    @property
    def size(self) -> int:
        return self.width * self.height

    def diagonal(self) -> list[Cell]:
        """Cells corresponding to the diagonal of the glued square."""
        n = min(self.width, self.height)
        return [self.from_glued[(i, i)] for i in range(1, n + 1)]


@dataclass(frozen=True)
class StabilityWitness:
    rect_index: int
    condition: str
    cell: Cell | None = None
    detail: str = ""

    def __str__(self):
        where = f" at cell ({self.cell.x},{self.cell.y})" if self.cell else ""
        return (f"maximal rectangle #{self.rect_index} fails condition "
                f"{self.condition}{where}: {self.detail}")


class CellCollection:
    """A finite nonempty normalized set of cells.

    Construct with :func:`normalize` (or :meth:`from_cells`); the constructor
    itself assumes its input is already normalized.
    """

    def __init__(self, cells: frozenset, width: int, height: int):
        self.cells = cells
        self.width = width
        self.height = height

    @classmethod
    def from_cells(cls, cells: Iterable) -> "CellCollection":
        return normalize(cells)

    @property
    def rank(self) -> int:
        return len(self.cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted_cells)

    def __contains__(self, c) -> bool:
        return c in self.cells

    def __eq__(self, other):
        if not isinstance(other, CellCollection):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        body = ",".join(f"({x},{y})" for x, y in self.sorted_cells)
        return f"CellCollection({{{body}}})"

    @cached_property
    def sorted_cells(self) -> tuple:
        return tuple(sorted(self.cells))

    @cached_property
    def occupancy(self) -> np.ndarray:
        """Boolean array indexed ``[y, x]`` with a one-cell empty border, so
        real cells sit at indices 1..height, 1..width."""
        occ = np.zeros((self.height + 2, self.width + 2), dtype=bool)
        for x, y in self.cells:
            occ[y, x] = True
        return occ

    @cached_property
    def row_masks(self) -> tuple:
        """One integer bitboard per row; bit ``x`` set when ``(x, y)`` is a cell."""
        masks = [0] * (self.height + 2)
        for x, y in self.cells:
            masks[y] |= 1 << x
        return tuple(masks)

    @cached_property
    def _prefix(self) -> list:
        return self.occupancy.astype(np.int32).cumsum(0).cumsum(1).tolist()

    def count_in(self, r: CellRect) -> int:
        """Number of cells of the collection inside ``r`` in O(1)."""
        x1 = max(r.lo.x, 1)
        y1 = max(r.lo.y, 1)
        x2 = min(r.hi.x, self.width)
        y2 = min(r.hi.y, self.height)
        if x1 > x2 or y1 > y2:
            return 0
        s = self._prefix
        return s[y2][x2] - s[y1 - 1][x2] - s[y2][x1 - 1] + s[y1 - 1][x1 - 1]

    @cached_property
    def _runs(self):
        return _compute_runs(self)

    @cached_property
    def maximal_rectangles(self) -> tuple:
        return tuple(_maximal_rectangles(self))

    @cached_property
    def residues(self) -> tuple:
        return tuple(_residues(self))


def normalize(cells: Iterable) -> CellCollection:
    """Translate ``cells`` so the bounding rectangle starts at ``(1, 1)``."""
    pts = {(int(x), int(y)) for x, y in cells}
    if not pts:
        raise EmptyCollection("a collection of cells must be nonempty")
    min_x = min(x for x, _ in pts)
    min_y = min(y for _, y in pts)
    max_x = max(x for x, _ in pts)
    max_y = max(y for _, y in pts)
    width = max_x - min_x + 1
    height = max_y - min_y + 1
    if width > MAX_SIDE or height > MAX_SIDE:
        raise BoardTooLarge(
            f"bounding rectangle {width}x{height} exceeds {MAX_SIDE}x{MAX_SIDE}")
    dx, dy = 1 - min_x, 1 - min_y
    return CellCollection(frozenset(Cell(x + dx, y + dy) for x, y in pts), width, height)


# --------------------------------------------------------------------------
# Runs
# --------------------------------------------------------------------------

class _RunIndex(NamedTuple):
    horizontal: list
    vertical: list
    h_of: dict
    v_of: dict


def _compute_runs(P: CellCollection) -> _RunIndex:
    cells = P.cells
    horizontal, vertical = [], []
    h_of, v_of = {}, {}
    for c in sorted(cells, key=lambda c: (c.y, c.x)):
        if (c.x - 1, c.y) in cells:
            continue
        n = 1
        while (c.x + n, c.y) in cells:
            n += 1
        run = Run(HORIZONTAL, c, n, len(horizontal))
        horizontal.append(run)
        for i in range(n):
            h_of[Cell(c.x + i, c.y)] = run.id
    for c in sorted(cells):
        if (c.x, c.y - 1) in cells:
            continue
        n = 1
        while (c.x, c.y + n) in cells:
            n += 1
        run = Run(VERTICAL, c, n, len(vertical))
        vertical.append(run)
        for i in range(n):
            v_of[Cell(c.x, c.y + i)] = run.id
    return _RunIndex(horizontal, vertical, h_of, v_of)


def runs(P: CellCollection) -> tuple[list[Run], list[Run]]:
    """Maximal horizontal and vertical runs.  Horizontal runs are numbered
    bottom-to-top then left-to-right; vertical runs left-to-right then
    bottom-to-top."""
    idx = P._runs
    return list(idx.horizontal), list(idx.vertical)


def run_ids(P: CellCollection, c) -> tuple[int, int]:
    """``(horizontal run id, vertical run id)`` of cell ``c``."""
    idx = P._runs
    return idx.h_of[c], idx.v_of[c]


# --------------------------------------------------------------------------
# Rectangles
# --------------------------------------------------------------------------

def inner_interval(P: CellCollection, r: CellRect) -> bool:
    """True when every cell of ``r`` is a cell of ``P``."""
    return P.count_in(r) == r.size


def _maximal_rectangles(P: CellCollection) -> list[CellRect]:
    # Histogram-stack sweep: with row y as the top edge, every rectangle that
    # cannot grow left, right or down is popped from the stack.  It is maximal
    # iff it also cannot grow up.
    w, h = P.width, P.height
    occ = P.occupancy.tolist()
    heights = [0] * (w + 2)
    found = set()
    for y in range(1, h + 1):
        row = occ[y]
        above = occ[y + 1]
        for x in range(1, w + 1):
            heights[x] = heights[x] + 1 if row[x] else 0
        stack = []  # (start x, height)
        for x in range(1, w + 2):
            cur = heights[x] if x <= w else 0
            start = x
            while stack and stack[-1][1] >= cur:
                sx, sh = stack.pop()
                if sh > cur:
                    x1, x2 = sx, x - 1
                    if not all(above[i] for i in range(x1, x2 + 1)):
                        found.add(rect(x1, y - sh + 1, x2, y))
                start = sx
            if cur > 0 and (not stack or stack[-1][1] < cur):
                stack.append((start, cur))
    return sorted(found, key=CellRect.sort_key)


def maximal_rectangles(P: CellCollection) -> list[CellRect]:
    """All maximal rectangles, ordered by ``(lo.y, lo.x, hi.y, hi.x)``."""
    return list(P.maximal_rectangles)


# --------------------------------------------------------------------------
# Residues and gluings
# --------------------------------------------------------------------------

def _residues(P: CellCollection) -> list[Residue]:
    rects = P.maximal_rectangles
    cover: dict = {}
    for i, r in enumerate(rects):
        for c in r.cells():
            cover[c] = cover.get(c, 0) + 1
    out = []
    for i, r in enumerate(rects):
        cells = frozenset(c for c in r.cells() if cover[c] == 1)
        cols = tuple(sorted({c.x for c in cells}))
        rows = tuple(sorted({c.y for c in cells}))
        is_grid = len(cells) == len(cols) * len(rows)
        out.append(Residue(i, cells, cols, rows, is_grid))
    return out


def residues(P: CellCollection) -> list[Residue]:
    """One residue per maximal rectangle, in rectangle order."""
    return list(P.residues)


def gluing(res: Residue) -> Gluing:
    """Glue the blocks of a grid residue into one rectangle by rank
    compaction of its occupied columns and rows."""
    if res.empty:
        raise EmptyResidue(f"residue of rectangle #{res.rect_index} is empty")
    if not res.is_grid:
        raise NotGrid(f"residue of rectangle #{res.rect_index} is not a full "
                      f"{len(res.cols)}x{len(res.rows)} grid")
    to_glued, from_glued = {}, {}
    for c in res.cells:
        u = bisect.bisect_left(res.cols, c.x) + 1
        v = bisect.bisect_left(res.rows, c.y) + 1
        to_glued[c] = (u, v)
        from_glued[(u, v)] = c
    return Gluing(len(res.cols), len(res.rows), to_glued, from_glued)


def stable_squares(P: CellCollection) -> list[tuple[int, Gluing | None]]:
    """Gluings of all nonempty residues as ``(rect_index, gluing)`` pairs.

    A non-grid residue is reported with ``None`` in place of its gluing.
    Entries are squares only when ``P`` is domino-stable.
    """
    out = []
    for res in P.residues:
        if res.empty:
            continue
        out.append((res.rect_index, gluing(res) if res.is_grid else None))
    return out


# --------------------------------------------------------------------------
# Domino-stability
# --------------------------------------------------------------------------

class _Alignment:
    """Which nonempty residues contain a cell aligned with a given cell."""

    def __init__(self, P: CellCollection, mode: str):
        if mode not in (ALIGN_RUN, ALIGN_COORDINATE):
            raise ValueError(f"unknown alignment mode {mode!r}")
        self.mode = mode
        self.P = P
        self.h: dict = {}
        self.v: dict = {}
        for res in P.residues:
            for c in res.cells:
                hk, vk = self._keys(c)
                self.h.setdefault(hk, set()).add(res.rect_index)
                self.v.setdefault(vk, set()).add(res.rect_index)

    def _keys(self, c):
        if self.mode == ALIGN_RUN:
            return run_ids(self.P, c)
        return c.y, c.x

    def indices(self, c) -> tuple[set, set]:
        hk, vk = self._keys(c)
        return self.h.get(hk, set()), self.v.get(vk, set())


def aligned_residues(P: CellCollection, c, alignment: str = ALIGN_RUN) -> tuple[set, set]:
    """Indices ``j`` whose residue holds a cell in horizontal (resp. vertical)
    position with ``c``.  With ``alignment="run"`` that means the same row
    (column) run of ``P``; with ``"coordinate"`` merely the same ``y`` (``x``)."""
    return _Alignment(P, alignment).indices(c)


def is_domino_stable(P: CellCollection, alignment: str = ALIGN_RUN
                     ) -> tuple[bool, StabilityWitness | None]:
    """Decide domino-stability; on failure also return a witness."""
    align = _Alignment(P, alignment)
    for res in P.residues:
        i = res.rect_index
        if not res.empty:
            if not res.is_grid:
                return False, StabilityWitness(
                    i, "1", None, f"residue is not a grid ({len(res.cells)} cells "
                    f"over {len(res.cols)} columns x {len(res.rows)} rows)")
            if len(res.cols) != len(res.rows):
                return False, StabilityWitness(
                    i, "1", None,
                    f"gluing is {len(res.cols)} wide x {len(res.rows)} tall, not a square")
            continue
        for c in P.maximal_rectangles[i].cells():
            hs, vs = align.indices(c)
            hs = hs - {i}
            vs = vs - {i}
            if len(hs) != 1 or len(vs) != 1 or hs == vs:
                return False, StabilityWitness(
                    i, "2", c,
                    f"horizontal witnesses {sorted(hs)}, vertical witnesses {sorted(vs)}")
    return True, None


# --------------------------------------------------------------------------
# Connectivity
# --------------------------------------------------------------------------

_KING = np.ones((3, 3), dtype=int)
_EDGE = ndimage.generate_binary_structure(2, 1)


def _components(P: CellCollection, structure) -> list[CellCollection]:
    labels, n = ndimage.label(P.occupancy, structure=structure)
    groups: list = [[] for _ in range(n)]
    for x, y in P.sorted_cells:
        groups[labels[y, x] - 1].append((x, y))
    groups.sort(key=min)
    return [normalize(g) for g in groups]


def weak_components(P: CellCollection) -> list[CellCollection]:
    """Components under vertex-sharing (king) adjacency, each normalized."""
    return _components(P, _KING)


def strong_components(P: CellCollection) -> list[CellCollection]:
    """Components under edge-sharing adjacency (the polyomino components)."""
    return _components(P, _EDGE)


def is_polyomino(P: CellCollection) -> bool:
    return len(strong_components(P)) == 1


def is_weakly_connected(P: CellCollection) -> bool:
    return len(weak_components(P)) == 1
