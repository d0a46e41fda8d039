"""Hypergraphs on integer points, interval hypergraphs and conflict-free colourings.

Vertices are always the integers 1..n.  Hyperedges keep their input order:
the edge index is an identity, and duplicate hyperedges are legal and stay
distinct.  All types here are immutable after construction and every
operation is a pure function, so values can be shared freely.

A colouring maps each vertex to a colour in {0, 1, ..., k}.  Colour 0 is
neutral: a 0-coloured vertex never serves as the unique-colour witness of a
hyperedge.  A colouring is conflict-free (CF) when every hyperedge contains
some non-zero colour exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ContractError, InputError


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


class Hypergraph:
    """A hypergraph on vertices {1..n} with an ordered tuple of hyperedges."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        _check_int(n, "n")
        if n < 0:
            raise InputError(f"n must be non-negative, got {n}")
        self.n = n
        cleaned = []
        for idx, edge in enumerate(edges):
            seq = [_check_int(v, f"vertex in edge {idx}") for v in edge]
            if len(seq) != len(set(seq)):
                raise InputError(f"edge {idx} repeats a vertex")
            if not seq:
                raise InputError(f"edge {idx} is empty")
            for v in seq:
                if not 1 <= v <= n:
                    raise InputError(f"edge {idx} contains vertex {v} outside 1..{n}")
            cleaned.append(tuple(sorted(seq)))
        self.edges: tuple[tuple[int, ...], ...] = tuple(cleaned)
        self.edge_sets: tuple[frozenset[int], ...] = tuple(frozenset(e) for e in cleaned)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={list(map(list, self.edges))})"


class IntervalHypergraph:
    """Points 1..n with hyperedges that are consecutive ranges [l, r]."""

    def __init__(self, n: int, intervals: Iterable[tuple[int, int]]):
        _check_int(n, "n")
        if n < 0:
            raise InputError(f"n must be non-negative, got {n}")
        self.n = n
        cleaned = []
        for idx, pair in enumerate(intervals):
            pair = tuple(pair)
            if len(pair) != 2:
                raise InputError(f"interval {idx} must be a pair [l, r]")
            l, r = (_check_int(x, f"endpoint of interval {idx}") for x in pair)
            if not (1 <= l <= r <= n):
                raise InputError(f"interval {idx} = [{l},{r}] violates 1 <= l <= r <= {n}")
            cleaned.append((l, r))
        self.intervals: tuple[tuple[int, int], ...] = tuple(cleaned)

    @property
    def m(self) -> int:
        return len(self.intervals)

    def points(self, i: int) -> range:
        l, r = self.intervals[i]
        return range(l, r + 1)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, [self.points(i) for i in range(self.m)])

    def __eq__(self, other):
        return isinstance(other, IntervalHypergraph) and \
            (self.n, self.intervals) == (other.n, other.intervals)

    def __hash__(self):
        return hash((self.n, self.intervals))

    def __repr__(self):
        return f"IntervalHypergraph(n={self.n}, intervals={list(map(list, self.intervals))})"


def discrete_interval_hypergraph(n: int) -> IntervalHypergraph:
    """The interval hypergraph with every range [i, j], 1 <= i <= j <= n."""
    return IntervalHypergraph(n, [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)])


class Colouring:
    """A vertex colouring with palette {0, 1, ..., k}.  Colour 0 colours nothing."""

    def __init__(self, assignment: dict, k: Optional[int] = None):
        clean = {}
        for v, c in assignment.items():
            _check_int(v, "vertex")
            _check_int(c, f"colour of vertex {v}")
            if v < 1:
                raise InputError(f"vertex {v} is not positive")
            if c < 0:
                raise InputError(f"colour of vertex {v} is negative")
            clean[v] = c
        if k is None:
            k = max(clean.values(), default=0)
        _check_int(k, "k")
        if k < 0:
            raise InputError("k must be non-negative")
        for v, c in clean.items():
            if c > k:
                raise InputError(f"vertex {v} uses colour {c} above the palette size {k}")
        self.assignment: dict[int, int] = dict(sorted(clean.items()))
        self.k = k

    def colour(self, v: int) -> int:
        return self.assignment[v]

    def distinct_nonzero(self) -> int:
        return len({c for c in self.assignment.values() if c != 0})

    def __eq__(self, other):
        return isinstance(other, Colouring) and \
            (self.assignment, self.k) == (other.assignment, other.k)

    def __repr__(self):
        return f"Colouring({self.assignment}, k={self.k})"


@dataclass(frozen=True)
class CFReport:
    """Outcome of a CF check: per-edge least witness vertex, or None."""
    is_cf: bool
    witnesses: dict


def verify_cf(h: Hypergraph, c: Colouring) -> CFReport:
    """Check whether c is a conflict-free colouring of h.

    witnesses[i] is the least vertex of edge i whose non-zero colour appears
    exactly once in that edge, or None if the edge has no such vertex.
    """
    for v in c.assignment:
        if not 1 <= v <= h.n:
            raise InputError(f"colouring names vertex {v} outside 1..{h.n}")
    for v in h.vertices():
        if v not in c.assignment:
            raise InputError(f"vertex {v} has no colour assigned")
    witnesses: dict[int, Optional[int]] = {}
    is_cf = True
    for i, edge in enumerate(h.edges):
        counts: dict[int, int] = {}
        for v in edge:
            col = c.assignment[v]
            if col:
                counts[col] = counts.get(col, 0) + 1
        wit = None
        for v in edge:  # edges are stored sorted, so the first hit is the least
            col = c.assignment[v]
            if col and counts[col] == 1:
                wit = v
                break
        witnesses[i] = wit
        if wit is None:
            is_cf = False
    return CFReport(is_cf, witnesses)


def is_exact_hitting_set(h: Hypergraph, s: Iterable[int]) -> bool:
    """True iff s meets every hyperedge of h in exactly one vertex."""
    sset = set()
    for v in s:
        _check_int(v, "hitting-set vertex")
        if not 1 <= v <= h.n:
            raise InputError(f"hitting set names vertex {v} outside 1..{h.n}")
        sset.add(v)
    return all(len(es & sset) == 1 for es in h.edge_sets)


def max_disjoint_intervals(ih: IntervalHypergraph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum number of pairwise disjoint intervals, by the right-endpoint greedy sweep."""
    order = sorted(range(ih.m), key=lambda i: (ih.intervals[i][1], ih.intervals[i][0], i))
    picked = []
    last_r = 0
    for i in order:
        l, r = ih.intervals[i]
        if l > last_r:
            picked.append(ih.intervals[i])
            last_r = r
    return len(picked), picked


def clique_cover_points(ih: IntervalHypergraph) -> list[int]:
    """One or two points that together meet every interval.

    Classical sweep: take the smallest right endpoint among the remaining
    intervals, discard everything it pierces, repeat.  Only valid when no
    three intervals are pairwise disjoint; more than two sweep rounds raise
    a contract error.
    """
    if ih.m == 0:
        raise ContractError("clique cover of an empty interval family is undefined")
    remaining = sorted(range(ih.m), key=lambda i: (ih.intervals[i][1], ih.intervals[i][0], i))
    points: list[int] = []
    while remaining:
        p = ih.intervals[remaining[0]][1]
        points.append(p)
        remaining = [i for i in remaining if ih.intervals[i][0] > p]
    if len(points) > 2:
        raise ContractError(
            f"interval family needs {len(points)} piercing points; "
            "the two-point cover requires at most 2 pairwise disjoint intervals")
    return points


# ---------------------------------------------------------------------------
# JSON interchange.
#
# Instances:   {"n": <int>, "intervals": [[l, r], ...]}
#          or  {"n": <int>, "edges": [[v, ...], ...]}
# Colourings:  {"k": <int>, "assignment": {"<vertex>": <colour>, ...}}
#              (vertices omitted from the assignment default to colour 0)
# ---------------------------------------------------------------------------

def instance_from_json(data) -> "Hypergraph | IntervalHypergraph":
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    unknown = set(data) - {"n", "intervals", "edges"}
    if unknown:
        raise InputError(f"unknown instance keys: {sorted(unknown)}")
    if "n" not in data:
        raise InputError("instance is missing 'n'")
    has_intervals = "intervals" in data
    has_edges = "edges" in data
    if has_intervals == has_edges:
        raise InputError("instance must have exactly one of 'intervals' or 'edges'")
    n = data["n"]
    if has_intervals:
        if not isinstance(data["intervals"], list):
            raise InputError("'intervals' must be a list of [l, r] pairs")
        return IntervalHypergraph(n, data["intervals"])
    if not isinstance(data["edges"], list):
        raise InputError("'edges' must be a list of vertex lists")
    return Hypergraph(n, data["edges"])


def instance_to_json(inst) -> dict:
    if isinstance(inst, IntervalHypergraph):
        return {"n": inst.n, "intervals": [list(p) for p in inst.intervals]}
    if isinstance(inst, Hypergraph):
        return {"n": inst.n, "edges": [list(e) for e in inst.edges]}
    raise InputError(f"not an instance: {inst!r}")


def colouring_from_json(data, n: Optional[int] = None) -> Colouring:
    if not isinstance(data, dict):
        raise InputError("colouring must be a JSON object")
    unknown = set(data) - {"k", "assignment"}
    if unknown:
        raise InputError(f"unknown colouring keys: {sorted(unknown)}")
    raw = data.get("assignment")
    if not isinstance(raw, dict):
        raise InputError("colouring is missing an 'assignment' object")
    assignment = {}
    for key, col in raw.items():
        try:
            v = int(key)
        except (TypeError, ValueError):
            raise InputError(f"assignment key {key!r} is not a vertex id") from None
        assignment[v] = col
    if n is not None:
        for v in range(1, n + 1):
            assignment.setdefault(v, 0)
    return Colouring(assignment, data.get("k"))


def colouring_to_json(c: Colouring) -> dict:
    return {"k": c.k, "assignment": {str(v): col for v, col in c.assignment.items()}}
