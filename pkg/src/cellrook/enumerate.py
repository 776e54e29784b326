"""Exhaustive enumeration of free polyominoes and weakly connected collections.

Fixed shapes are grown with Redelmeier's untried-set recursion from an origin
that is the least cell in ``(y, x)`` order, so every fixed shape appears
exactly once.  A fixed shape is emitted only when it already equals its
canonical form, which picks one representative per symmetry class without a
shared ``seen`` set.  That makes every subtree of the search independent:
``jobs > 1`` farms the subtrees rooted at depth 2 out to worker processes.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor

from .errors import RankOutOfRange
from .geometry import Cell, CellCollection

POLYOMINO = "poly"
COLLECTION = "collection"

EDGE_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))
KING_STEPS = EDGE_STEPS + ((1, 1), (-1, 1), (-1, -1), (1, -1))

SOFT_CAP = {POLYOMINO: 14, COLLECTION: 10}

_TRANSFORMS = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
)


def _normalized(cells) -> tuple:
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted((x - mx + 1, y - my + 1) for x, y in cells))


def dihedral_images(cells) -> list[tuple]:
    """The 8 images under rotations and reflections, each normalized."""
    return [_normalized([t(x, y) for x, y in cells]) for t in _TRANSFORMS]


def canonical_form(P) -> tuple:
    """Least normalized sorted cell list over the 8 dihedral images."""
    cells = P.cells if isinstance(P, CellCollection) else P
    return min(dihedral_images(cells))


def _is_canonical(form: tuple) -> bool:
    for t in _TRANSFORMS[1:]:
        if _normalized([t(x, y) for x, y in form]) < form:
            return False
    return True


def _steps(universe: str):
    if universe == POLYOMINO:
        return EDGE_STEPS
    if universe == COLLECTION:
        return KING_STEPS
    raise ValueError(f"unknown universe {universe!r}")


def _allowed(c) -> bool:
    return c[1] > 0 or (c[1] == 0 and c[0] >= 0)


def _grow(n, steps, poly, untried, seen):
    """Redelmeier recursion; yields each fixed shape of size ``n`` that
    extends ``poly`` using only cells from ``untried`` onwards."""
    untried = list(untried)
    while untried:
        c = untried.pop()
        fresh = []
        for dx, dy in steps:
            nb = (c[0] + dx, c[1] + dy)
            if _allowed(nb) and nb not in seen:
                fresh.append(nb)
                seen.add(nb)
        poly.append(c)
        if len(poly) == n:
            yield tuple(poly)
        else:
            yield from _grow(n, steps, poly, untried + fresh, seen)
        poly.pop()
        for nb in fresh:
            seen.discard(nb)


def _split(n, steps, depth):
    """Search states after ``depth`` cells are placed, as
    ``(poly, untried, seen)`` triples; requires ``depth < n``."""
    states = []

    def walk(poly, untried, seen):
        untried = list(untried)
        while untried:
            c = untried.pop()
            fresh = []
            for dx, dy in steps:
                nb = (c[0] + dx, c[1] + dy)
                if _allowed(nb) and nb not in seen:
                    fresh.append(nb)
                    seen.add(nb)
            poly.append(c)
            if len(poly) == depth:
                states.append((tuple(poly), tuple(untried + fresh), frozenset(seen)))
            else:
                walk(poly, untried + fresh, seen)
            poly.pop()
            for nb in fresh:
                seen.discard(nb)

    walk([], [(0, 0)], {(0, 0)})
    return states


def _free_from(n, steps, poly, untried, seen):
    for fixed in _grow(n, steps, list(poly), untried, set(seen)):
        form = _normalized(fixed)
        if _is_canonical(form):
            yield form


def _subtree_forms(args):
    return list(_free_from(*args))


def _subtree_count(args):
    return sum(1 for _ in _free_from(*args))


def _check_rank(n: int, universe: str, lo: int = 1):
    if universe not in SOFT_CAP:
        raise ValueError(f"unknown universe {universe!r}")
    cap = SOFT_CAP[universe]
    if not lo <= n <= cap:
        raise RankOutOfRange(f"rank {n} outside {lo}..{cap} for universe {universe!r}")


def _tasks(n, steps):
    depth = min(2, n)
    if depth == n:
        return [(n, steps, (), [(0, 0)], {(0, 0)})]
    return [(n, steps, poly, untried, seen) for poly, untried, seen in _split(n, steps, depth)]


def canonical_forms(n: int, universe: str = POLYOMINO, jobs: int = 1):
    """Yield the canonical form of every free shape of rank ``n`` once.

    The order is deterministic for ``jobs == 1``; with a pool it is the order
    of subtrees, each subtree's shapes in search order.
    """
    _check_rank(n, universe)
    steps = _steps(universe)
    tasks = _tasks(n, steps)
    if jobs <= 1 or len(tasks) == 1:
        for t in tasks:
            yield from _free_from(*t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for forms in pool.map(_subtree_forms, tasks):
            yield from forms


def count_shapes(n: int, universe: str = POLYOMINO, jobs: int = 1) -> int:
    _check_rank(n, universe)
    steps = _steps(universe)
    tasks = _tasks(n, steps)
    if jobs <= 1 or len(tasks) == 1:
        return sum(_subtree_count(t) for t in tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_subtree_count, tasks))


def enumerate_shapes(n: int, universe: str = POLYOMINO, jobs: int = 1):
    """Stream every free shape of rank ``n`` in the given universe."""
    for form in canonical_forms(n, universe, jobs):
        yield CellCollection(frozenset(Cell(x, y) for x, y in form),
                             max(x for x, _ in form), max(y for _, y in form))


def enumerate_polyominoes(n: int, jobs: int = 1):
    """Free (edge-connected) polyominoes of rank ``n``, up to symmetry."""
    return enumerate_shapes(n, POLYOMINO, jobs)


def enumerate_collections(n: int, jobs: int = 1):
    """Free weakly connected (king-connected) collections of rank ``n``."""
    return enumerate_shapes(n, COLLECTION, jobs)


def default_jobs() -> int:
    env = os.environ.get("CELLROOK_JOBS")
    if env:
        return max(1, int(env))
    return 1


def shape_id(P) -> str:
    """Short stable identifier derived from the canonical form."""
    form = canonical_form(P)
    text = ";".join(f"{x},{y}" for x, y in form)
    return hashlib.blake2b(text.encode(), digest_size=8).hexdigest()


def same_shape(a: CellCollection, b: CellCollection) -> bool:
    return canonical_form(a) == canonical_form(b)

