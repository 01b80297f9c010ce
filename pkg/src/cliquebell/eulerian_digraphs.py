"""Labelled Eulerian digraphs and their bijection with clique colourings.

A digraph here has vertices ``1..k`` and ``n`` ordered directed cycles; edge
``j`` of cycle ``i`` is the labelled edge e_{i,j}. Loops and parallel edges
are allowed and the digraph need not be connected.

Convention for the bijection: vertex ``t`` of the digraph corresponds to the
colour class holding every v_{i,j} whose edge e_{i,j} *enters* ``t``. In the
other direction e_{i,j} runs from the class of v_{i,j-1} to the class of
v_{i,j}, indices cyclic inside clique ``i``. The two maps are mutually
inverse.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .clique_colourings import (
    CliqueFamily,
    Colouring,
    Vertex,
    build_family,
    is_proper,
    iter_rgs,
)

Edge = Tuple[int, int]


class DigraphError(ValueError):
    pass


@dataclass(frozen=True)
class LabelledEulerianDigraph:
    k: int
    cycles: Tuple[Tuple[Edge, ...], ...]

    @classmethod
    def build(cls, k: int, cycles) -> "LabelledEulerianDigraph":
        """Construct from any nested sequences of ``(tail, head)`` pairs."""
        return cls(int(k), tuple(tuple((int(a), int(b)) for a, b in cyc) for cyc in cycles))

    @property
    def n(self) -> int:
        return len(self.cycles)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def edges(self) -> Iterator[Tuple[int, int, Edge]]:
        """Yield ``(i, j, (tail, head))`` in label order."""
        for i, cyc in enumerate(self.cycles, 1):
            for j, edge in enumerate(cyc, 1):
                yield i, j, edge

    def to_json_obj(self) -> dict:
        return {"k": self.k, "cycles": [[list(e) for e in c] for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "LabelledEulerianDigraph":
        try:
            return cls.build(obj["k"], obj["cycles"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DigraphError(f"malformed digraph JSON: {exc}") from None


@dataclass(frozen=True)
class PathSystem:
    """Cycles with their last edge removed.

    ``anchors[i]`` holds the vertex of a removed loop (cycle of length 1),
    ``None`` for every other path.
    """
    k: int
    paths: Tuple[Tuple[Edge, ...], ...]
    anchors: Tuple[Optional[int], ...]


def validate(d: LabelledEulerianDigraph) -> bool:
    if d.k < 1 or not d.cycles:
        return False
    indeg: Counter = Counter()
    outdeg: Counter = Counter()
    for cyc in d.cycles:
        # a directed m-cycle visits m distinct vertices
        if not cyc or len({head for _, head in cyc}) != len(cyc):
            return False
        for j, (tail, head) in enumerate(cyc):
            if not (1 <= tail <= d.k and 1 <= head <= d.k):
                return False
            if head != cyc[(j + 1) % len(cyc)][0]:
                return False
            outdeg[tail] += 1
            indeg[head] += 1
    if set(indeg) != set(range(1, d.k + 1)):
        return False
    return all(indeg[v] == outdeg[v] for v in range(1, d.k + 1))


def colouring_to_digraph(family: CliqueFamily, c: Colouring) -> LabelledEulerianDigraph:
    if not is_proper(family, c):
        raise DigraphError(f"not a proper colouring of {family.sizes}: {c}")
    where = c.block_of()
    labels = [where[v] + 1 for v in family.vertices]
    cycles = []
    start = 0
    for m in family.sizes:
        heads = labels[start:start + m]
        cycles.append(tuple(zip(heads[-1:] + heads[:-1], heads)))
        start += m
    return LabelledEulerianDigraph(c.k, tuple(cycles))


def digraph_to_colouring(family: CliqueFamily, d: LabelledEulerianDigraph) -> Colouring:
    if not validate(d):
        raise DigraphError("not a labelled Eulerian digraph")
    if d.sizes != family.sizes:
        raise DigraphError(f"cycle lengths {d.sizes} do not match clique sizes {family.sizes}")
    blocks: List[List[Vertex]] = [[] for _ in range(d.k)]
    for i, j, (_, head) in d.edges():
        blocks[head - 1].append(Vertex(i, j))
    return Colouring.from_blocks(blocks)


def canonicalize(d: LabelledEulerianDigraph) -> LabelledEulerianDigraph:
    """Renumber vertices by first appearance as a head in edge-label order."""
    relabel = {}
    for _, _, (_, head) in d.edges():
        if head not in relabel:
            relabel[head] = len(relabel) + 1
    if len(relabel) != d.k:
        raise DigraphError("every vertex must have an in-edge")
    return LabelledEulerianDigraph(
        d.k, tuple(tuple((relabel[a], relabel[b]) for a, b in c) for c in d.cycles))


def relabel(d: LabelledEulerianDigraph, perm: Sequence[int]) -> LabelledEulerianDigraph:
    """Apply the vertex permutation ``v -> perm[v-1]``."""
    return LabelledEulerianDigraph(
        d.k, tuple(tuple((perm[a - 1], perm[b - 1]) for a, b in c) for c in d.cycles))


def _digraphs_from_rgs(family: CliqueFamily, rows: np.ndarray) -> Iterator[LabelledEulerianDigraph]:
    # canonical labels coincide with the restricted-growth labels
    heads = rows.astype(np.int64) + 1
    tails = heads[:, family.predecessor_array()]
    bounds = np.cumsum((0,) + family.sizes)
    ks = heads.max(axis=1)
    for r in range(rows.shape[0]):
        cycles = tuple(
            tuple(zip(tails[r, lo:hi].tolist(), heads[r, lo:hi].tolist()))
            for lo, hi in zip(bounds[:-1], bounds[1:]))
        yield LabelledEulerianDigraph(int(ks[r]), cycles)


def iter_digraphs(sizes: Sequence[int], k: Optional[int] = None) -> Iterator[LabelledEulerianDigraph]:
    """Canonical digraphs in the order of the underlying colourings."""
    family = build_family(sizes)
    ks = range(max(family.sizes), family.order + 1) if k is None else [k]
    for kk in ks:
        for rows in iter_rgs(family, kk):
            yield from _digraphs_from_rgs(family, rows)


def enumerate_digraphs(sizes: Sequence[int]) -> List[LabelledEulerianDigraph]:
    return list(iter_digraphs(sizes))


def to_paths(d: LabelledEulerianDigraph) -> PathSystem:
    if not validate(d):
        raise DigraphError("not a labelled Eulerian digraph")
    paths = tuple(c[:-1] for c in d.cycles)
    anchors = tuple(c[0][0] if len(c) == 1 else None for c in d.cycles)
    return PathSystem(d.k, paths, anchors)


def from_paths(p: PathSystem, sizes: Sequence[int]) -> LabelledEulerianDigraph:
    sizes = tuple(sizes)
    if len(p.paths) != len(sizes) or len(p.anchors) != len(sizes):
        raise DigraphError("path count does not match clique count")
    cycles = []
    for path, anchor, m in zip(p.paths, p.anchors, sizes):
        if len(path) != m - 1:
            raise DigraphError(f"path of length {len(path)} cannot close to a {m}-cycle")
        if path:
            closing = (path[-1][1], path[0][0])
        elif anchor is None:
            raise DigraphError("empty path without an anchor vertex")
        else:
            closing = (anchor, anchor)
        cycles.append(tuple(path) + (closing,))
    d = LabelledEulerianDigraph(p.k, tuple(cycles))
    if not validate(d):
        raise DigraphError("re-closed paths do not form a labelled Eulerian digraph")
    return d


def to_dot(d: LabelledEulerianDigraph, name: str = "G") -> str:
    """Graphviz source; byte-stable for a given digraph."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  w{v};" for v in range(1, d.k + 1))
    for i, j, (tail, head) in d.edges():
        lines.append(f'  w{tail} -> w{head} [label="e{i},{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
