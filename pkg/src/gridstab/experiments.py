"""Search harnesses for tree-topology conjectures.

Conjectures are tested, never assumed: each harness reports every violation
it finds, re-verified from scratch, and an empty list means only that no
counterexample exists among the instances searched.
"""

import csv
import itertools
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .errors import InputError, NotATree, NTooLarge
from .grid import (
    absent_edges,
    add_edge,
    all_pruefer_codes,
    central_node,
    cycle_length_of_edge,
    diameter,
    disjoint_union,
    is_tree,
    tree_from_pruefer,
)
from .pipeline import alpha2, alpha2_many

MAX_TREE_NODES = 8
TIE_TOL = 1e-9


@dataclass(frozen=True)
class TreeRecord:
    code: Tuple[int, ...]
    diameter: int
    alpha2: float


@dataclass
class ConjectureReport:
    instances: int
    violation_count: int = 0
    violations: List[tuple] = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def counterexample_found(self):
        return self.violation_count > 0

    @property
    def verdict(self):
        return "Counterexamples" if self.counterexample_found else "NoCounterexample"


def tree_records(n):
    if n < 3:
        raise InputError("tree experiments need n >= 3")
    if n > MAX_TREE_NODES:
        raise NTooLarge(f"exhaustive sweep capped at n = {MAX_TREE_NODES} (n^(n-2) trees)")
    codes = list(all_pruefer_codes(n))
    trees = [tree_from_pruefer(c) for c in codes]
    values = alpha2_many(trees)
    return [TreeRecord(c, diameter(t), float(a)) for c, t, a in zip(codes, trees, values)]


def find_diameter_violations(records, max_examples=20):
    """Pairs where the smaller-diameter tree does not have the larger alpha2.

    Returns ``(count, examples)``; examples are re-verified by recomputation.
    """
    by_d = {}
    for r in records:
        by_d.setdefault(r.diameter, []).append(r)
    for rs in by_d.values():
        rs.sort(key=lambda r: r.alpha2)
    count = 0
    examples = []
    for d1, d2 in itertools.combinations(sorted(by_d), 2):
        lo = by_d[d1]
        hi_vals = np.array([r.alpha2 for r in by_d[d2]])
        for r1 in lo:
            # r2 violates when alpha2(r1) <= alpha2(r2), ties included
            k = len(hi_vals) - np.searchsorted(hi_vals, r1.alpha2 - TIE_TOL, side="left")
            if k == 0:
                break
            count += int(k)
            for r2 in by_d[d2][len(hi_vals) - k:]:
                if len(examples) < max_examples:
                    examples.append((r1, r2))
    verified = [(r1, r2) for r1, r2 in examples
                if alpha2(tree_from_pruefer(r1.code)) <= alpha2(tree_from_pruefer(r2.code)) + TIE_TOL]
    if len(verified) != len(examples):
        raise AssertionError("violation did not reproduce on recomputation")
    return count, verified


def tree_diameter_experiment(n, max_examples=20):
    """All labeled trees on ``n`` nodes: does smaller diameter mean larger alpha2?"""
    records = tree_records(n)
    count, examples = find_diameter_violations(records, max_examples)
    return ConjectureReport(len(records), count, examples, records)


@dataclass(frozen=True)
class CycleFinding:
    edge: Tuple[int, int]
    cycle_length: int
    alpha2: float


def cycle_addition_experiment(tree):
    """Alpha2 after closing each possible cycle in ``tree``.

    Checks that a longer created cycle always gives a strictly larger
    alpha2; findings are ordered by cycle length, then edge.
    """
    if not is_tree(tree):
        raise NotATree("input grid is not a tree")
    if tree.v < 3:
        raise InputError("need at least three nodes")
    edges = absent_edges(tree)
    grids = [add_edge(tree, a, b) for a, b in edges]
    values = alpha2_many(grids)
    findings = sorted(
        (CycleFinding(e, cycle_length_of_edge(tree, *e), float(a)) for e, a in zip(edges, values)),
        key=lambda f: (f.cycle_length, f.edge),
    )
    violations = [
        (f1, f2) for f1, f2 in itertools.combinations(findings, 2)
        if f1.cycle_length < f2.cycle_length and f1.alpha2 >= f2.alpha2 - TIE_TOL
    ]
    report = ConjectureReport(len(findings), len(violations), violations, findings)
    return report


@dataclass(frozen=True)
class JoinCandidate:
    edge: Tuple[int, int]
    alpha2: float
    diameter: int


@dataclass
class JoinResult:
    best: JoinCandidate
    table: List[JoinCandidate]
    center_edge: Tuple[int, int]
    argmax_is_min_diameter: bool


def best_join_edge(t1, t2):
    """Try every edge joining tree ``t1`` to tree ``t2`` (nodes of t2 offset by |t1|).

    ``center_edge`` joins the two central nodes (minimum eccentricity, lowest
    index on ties).
    """
    for t in (t1, t2):
        if not is_tree(t):
            raise NotATree("both inputs must be trees")
    union = disjoint_union(t1, t2)
    adm = (t1.edges + t2.edges)[0].admittance if (t1.edges or t2.edges) else -1j
    edges = [(a, t1.v + b) for a in range(t1.v) for b in range(t2.v)]
    grids = [add_edge(union, a, b, adm) for a, b in edges]
    values = alpha2_many(grids)
    table = [JoinCandidate(e, float(a), diameter(g)) for e, a, g in zip(edges, values, grids)]
    best = max(table, key=lambda c: c.alpha2)
    min_d = min(c.diameter for c in table)
    return JoinResult(
        best=best,
        table=table,
        center_edge=(central_node(t1), t1.v + central_node(t2)),
        argmax_is_min_diameter=best.diameter == min_d,
    )


def write_tree_csv(records, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["code", "diameter", "alpha2"])
    for r in records:
        w.writerow([" ".join(map(str, r.code)), r.diameter, format(r.alpha2, ".12g")])


def write_cycle_csv(findings, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["a", "b", "cycle_length", "alpha2"])
    for f in findings:
        w.writerow([f.edge[0], f.edge[1], f.cycle_length, format(f.alpha2, ".12g")])


def write_join_csv(result, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["a", "b", "diameter", "alpha2"])
    for c in result.table:
        w.writerow([c.edge[0], c.edge[1], c.diameter, format(c.alpha2, ".12g")])
