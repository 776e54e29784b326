"""Palindromicity and the verification harness.

:func:`verify` computes the switching rook polynomial of one collection and
cross-checks it against the geometry: the palindromic/domino-stable
equivalence plus the structural facts it rests on.  :func:`verify_corpus`
runs that over a stream of shapes and aggregates the results.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from .enumerate import shape_id
from .errors import CounterexampleFound
from .formats import to_text
from .geometry import (ALIGN_COORDINATE, ALIGN_RUN, CellCollection,
                       is_domino_stable, run_ids, runs, stable_squares)
from .rook import (SwitchClasses, SwitchingPolynomial, canonicalize,
                   is_valid_config, rook_number, top_config)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

CHECKS = (
    "theorem",
    "top_class_unique",
    "rook_number_formula",
    "strict_inequality",
    "coverage_lemma",
    "attack_pair",
    "residue_existence",
)


def is_palindromic(p) -> bool:
    """True when the coefficient sequence reads the same reversed."""
    coeffs = list(p.coeffs if isinstance(p, SwitchingPolynomial) else p)
    d = len(coeffs) - 1
    return all(coeffs[i] == coeffs[d - i] for i in range(d // 2 + 1))


@dataclass
class VerificationReport:
    id: str
    rank: int
    poly: tuple
    stable: bool
    palindromic: bool
    checks: dict = field(default_factory=dict)
    reasons: dict = field(default_factory=dict)
    non_grid_residues: int = 0
    shape_text: str = ""
    counterexample: dict | None = None

    @property
    def failed(self) -> list[str]:
        return [name for name, status in self.checks.items() if status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "rank": self.rank,
            "poly": list(self.poly),
            "stable": self.stable,
            "palindromic": self.palindromic,
            "checks": {name: self.checks[name] for name in CHECKS if name in self.checks},
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _set(report, name, ok, reason=""):
    report.checks[name] = PASS if ok else FAIL
    if reason and not ok:
        report.reasons[name] = reason


def _skip(report, name, reason):
    report.checks[name] = SKIPPED
    report.reasons[name] = reason


def verify(P: CellCollection, alignment: str = ALIGN_RUN, checks=None) -> VerificationReport:
    """Compute the polynomial of ``P`` and run every applicable check.

    ``checks`` restricts the run to a subset of :data:`CHECKS`; unselected
    checks are reported as skipped.  Failures are recorded, never raised.
    """
    selected = set(CHECKS if checks is None else checks)
    d = rook_number(P)
    classes = [SwitchClasses(P, k, d) for k in range(d + 1)]
    poly = SwitchingPolynomial(tuple(c.count for c in classes))
    stable, witness = is_domino_stable(P, alignment)
    squares = stable_squares(P)
    report = VerificationReport(
        id=shape_id(P), rank=P.rank, poly=poly.coeffs, stable=stable,
        palindromic=is_palindromic(poly),
        non_grid_residues=sum(1 for _, g in squares if g is None),
    )
    top_unique = poly[d] == 1

    def want(name):
        if name in selected:
            return True
        _skip(report, name, "not selected")
        return False

    if want("theorem"):
        _set(report, "theorem", report.palindromic == stable,
             "" if stable else f"not domino-stable: {witness}")

    if want("residue_existence"):
        _set(report, "residue_existence", bool(squares), "no nonempty residue")

    if want("top_class_unique"):
        if stable:
            _set(report, "top_class_unique", top_unique,
                 f"{poly[d]} classes of {d}-rook configurations")
        else:
            _skip(report, "top_class_unique", "not domino-stable")

    if want("rook_number_formula"):
        if stable:
            side_sum = sum(g.width for _, g in squares)
            T = top_config(P, alignment)
            ok = (side_sum == d and len(T) == d and is_valid_config(P, T))
            _set(report, "rook_number_formula", ok,
                 f"rook number {d}, stable square sides sum to {side_sum}, "
                 f"top configuration has {len(T)} rooks")
        else:
            _skip(report, "rook_number_formula", "not domino-stable")

    if want("strict_inequality"):
        if not stable and top_unique:
            ok = d >= 1 and poly[1] < poly[d - 1]
            _set(report, "strict_inequality", ok,
                 f"r_1 = {poly[1]}, r_(d-1) = {poly[d - 1]}")
        else:
            _skip(report, "strict_inequality",
                  "domino-stable" if stable else f"{poly[d]} top classes")

    cover = want("coverage_lemma")
    attack = want("attack_pair")
    if cover or attack:
        if top_unique:
            T = canonicalize(P, classes[d].config(0))
            if cover:
                _coverage(report, P, T)
            if attack:
                _attack_pair(report, P, T)
        else:
            for name, on in (("coverage_lemma", cover), ("attack_pair", attack)):
                if on:
                    _skip(report, name, f"{poly[d]} top classes")

    if report.failed:
        report.shape_text = to_text(P)
        report.counterexample = {"shape": report.shape_text,
                                 "failed": report.failed,
                                 "reasons": {k: report.reasons.get(k, "")
                                             for k in report.failed}}
    return report


def _coverage(report, P, T):
    horizontal, vertical = runs(P)
    occupied = set(T)
    bare = [r for r in horizontal + vertical
            if not any(c in occupied for c in r.cells())]
    reason = ""
    if bare:
        r = bare[0]
        reason = f"{r.kind} run at ({r.anchor.x},{r.anchor.y}) of length {r.length} has no rook"
    _set(report, "coverage_lemma", not bare, reason)


def _attack_pair(report, P, T):
    rook_h = {}
    rook_v = {}
    for c in T:
        h, v = run_ids(P, c)
        rook_h[h] = c
        rook_v[v] = c
    occupied = set(T)
    for c in P.sorted_cells:
        if c in occupied:
            continue
        h, v = run_ids(P, c)
        attackers = {rook_h.get(h), rook_v.get(v)} - {None}
        if len(attackers) != 2:
            _set(report, "attack_pair", False,
                 f"cell ({c.x},{c.y}) is attacked by {len(attackers)} rooks")
            return
    _set(report, "attack_pair", True)


# --------------------------------------------------------------------------
# Corpus runs
# --------------------------------------------------------------------------

@dataclass
class CorpusReport:
    total: int = 0
    stable: int = 0
    palindromic: int = 0
    failures: int = 0
    non_grid_shapes: int = 0
    checks: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    alignment_disagreements: list = field(default_factory=list)

    def add(self, report: VerificationReport, modes: dict | None = None):
        self.total += 1
        self.stable += report.stable
        self.palindromic += report.palindromic
        self.non_grid_shapes += report.non_grid_residues > 0
        for name, status in report.checks.items():
            self.checks.setdefault(name, Counter())[status] += 1
        if report.failed:
            self.failures += 1
            self.counterexamples.append(report.to_dict())
        if modes is not None and modes[ALIGN_RUN] != modes[ALIGN_COORDINATE]:
            self.alignment_disagreements.append(
                {"id": report.id, "shape": report.shape_text, **modes})

    def finish(self):
        self.counterexamples.sort(key=lambda r: r["id"])
        self.alignment_disagreements.sort(key=lambda r: r["id"])
        return self

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "stable": self.stable,
            "palindromic": self.palindromic,
            "failures": self.failures,
            "non_grid_shapes": self.non_grid_shapes,
            "checks": {name: dict(sorted(c.items())) for name, c in sorted(self.checks.items())},
            "counterexamples": self.counterexamples,
            "alignment_disagreements": self.alignment_disagreements,
        }


def _verify_one(args):
    P, alignment, checks, audit = args
    report = verify(P, alignment, checks)
    modes = None
    if audit:
        modes = {mode: is_domino_stable(P, mode)[0] for mode in (ALIGN_RUN, ALIGN_COORDINATE)}
        if modes[ALIGN_RUN] != modes[ALIGN_COORDINATE] and not report.shape_text:
            report.shape_text = to_text(P)
    return report, modes


def _batched(it, size):
    it = iter(it)
    while batch := list(islice(it, size)):
        yield batch


def _verify_batch(batch):
    return [_verify_one(a) for a in batch]


def verify_corpus(shapes, checks=None, alignment: str = ALIGN_RUN, jobs: int = 1,
                  keep_going: bool = False, audit_alignment: bool = False,
                  on_report=None) -> CorpusReport:
    """Verify every shape of a stream and aggregate.

    The first failing shape raises :class:`CounterexampleFound` unless
    ``keep_going`` is set.  ``audit_alignment`` also evaluates the other
    alignment semantics and records shapes where the two disagree (in the
    ``alignment_disagreements`` list with both stability flags).
    ``on_report`` is called with each :class:`VerificationReport`.
    """
    agg = CorpusReport()
    args = ((P, alignment, checks, audit_alignment) for P in shapes)

    def consume(report, modes):
        agg.add(report, modes)
        if on_report is not None:
            on_report(report)
        if report.failed and not keep_going:
            raise CounterexampleFound(
                f"shape {report.id} fails {', '.join(report.failed)}:\n{report.shape_text}",
                shape=report.shape_text, report=report)

    if jobs <= 1:
        for a in args:
            consume(*_verify_one(a))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for results in pool.map(_verify_batch, _batched(args, 64)):
                for result in results:
                    consume(*result)
    return agg.finish()
