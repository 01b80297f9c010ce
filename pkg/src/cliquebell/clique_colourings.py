"""Disjoint unions of cliques and their proper colourings.

A colouring is a set partition of the vertices into stable blocks; colour
names carry no meaning. Vertices are ``Vertex(i, j)``: position ``j`` of
clique ``i``, both 1-based. Blocks are kept in canonical order (each block
sorted, blocks ordered by their smallest vertex), so two colourings are equal
exactly when they are the same partition.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .kernels import iter_rgs_chunks


class Vertex(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"v{self.i}.{self.j}"


_VERTEX_RE = re.compile(r"^v(\d+)\.(\d+)$")


def parse_vertex(token: str) -> Vertex:
    match = _VERTEX_RE.match(token.strip())
    if not match:
        raise ValueError(f"bad vertex token {token!r}, expected v<i>.<j>")
    return Vertex(int(match.group(1)), int(match.group(2)))


@dataclass(frozen=True)
class CliqueFamily:
    sizes: Tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("a clique family needs at least one clique")
        if any(not isinstance(m, (int, np.integer)) or m < 1 for m in self.sizes):
            raise ValueError(f"clique sizes must be positive integers, got {self.sizes}")
        object.__setattr__(self, "sizes", tuple(int(m) for m in self.sizes))

    @property
    def n(self) -> int:
        return len(self.sizes)

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(Vertex(i, j)
                     for i, m in enumerate(self.sizes, 1)
                     for j in range(1, m + 1))

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def clique_array(self) -> np.ndarray:
        """Clique index of each vertex, vertices in lexicographic order."""
        return np.repeat(np.arange(1, self.n + 1, dtype=np.int64), self.sizes)

    def predecessor_array(self) -> np.ndarray:
        """Flat index of v_{i,j-1} (cyclically) for each flat vertex index."""
        prev = np.empty(self.order, dtype=np.int64)
        start = 0
        for m in self.sizes:
            idx = np.arange(start, start + m)
            prev[start:start + m] = np.roll(idx, 1)
            start += m
        return prev

    def is_uniform(self) -> bool:
        return len(set(self.sizes)) == 1


def build_family(sizes: Sequence[int]) -> CliqueFamily:
    return CliqueFamily(tuple(sizes))


def parse_sizes(text: str) -> List[int]:
    """Parse a comma separated clique-size list such as ``"3,3"``."""
    try:
        sizes = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise ValueError(f"bad clique size list {text!r}") from None
    build_family(sizes)
    return sizes


@dataclass(frozen=True)
class Colouring:
    blocks: Tuple[Tuple[Vertex, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(v if type(v) is Vertex else Vertex(*v) for v in b))
                              for b in self.blocks))
        if any(not b for b in blocks):
            raise ValueError("colour classes must be non-empty")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable]) -> "Colouring":
        return cls(tuple(tuple(b) for b in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict:
        return {v: t for t, block in enumerate(self.blocks) for v in block}

    def to_rgs(self, family: CliqueFamily) -> np.ndarray:
        where = self.block_of()
        return np.array([where[v] for v in family.vertices], dtype=np.int8)

    @classmethod
    def from_rgs(cls, family: CliqueFamily, rgs: Sequence[int]) -> "Colouring":
        k = int(max(rgs)) + 1 if len(rgs) else 0
        blocks: List[List[Vertex]] = [[] for _ in range(k)]
        for v, label in zip(family.vertices, rgs):
            blocks[int(label)].append(v)
        return cls(tuple(tuple(b) for b in blocks))

    def to_text(self) -> str:
        return " | ".join(" ".join(str(v) for v in b) for b in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "Colouring":
        return cls.from_blocks([parse_vertex(tok) for tok in part.split()]
                               for part in text.split("|"))

    def to_json_obj(self) -> dict:
        return {"blocks": [[[v.i, v.j] for v in b] for b in self.blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "Colouring":
        try:
            blocks = obj["blocks"]
            return cls.from_blocks([Vertex(int(i), int(j)) for i, j in b] for b in blocks)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed colouring JSON: {exc}") from None

    def __str__(self) -> str:
        return self.to_text()


def is_proper(family: CliqueFamily, colouring: Colouring) -> bool:
    """True iff the blocks partition the vertex set and each block is stable."""
    seen = set()
    if sum(len(b) for b in colouring.blocks) != family.order:
        return False
    for block in colouring.blocks:
        cliques = set()
        for v in block:
            if v in seen or v.i in cliques:
                return False
            seen.add(v)
            cliques.add(v.i)
    return seen == set(family.vertices)


def iter_rgs(family: CliqueFamily, k: Optional[int] = None, chunk: int = 4096) -> Iterator[np.ndarray]:
    """Chunks of restricted-growth strings of proper colourings (k=None: every k)."""
    if k is not None and k < 1:
        return
    if k is not None and (k < max(family.sizes) or k > family.order):
        return
    yield from iter_rgs_chunks(family.clique_array(), 0 if k is None else k, chunk)


def iter_colourings(family: CliqueFamily, k: Optional[int] = None) -> Iterator[Colouring]:
    """Stream k-colourings in restricted-growth lexicographic order.

    With ``k=None`` this walks k = max(sizes)..sum(sizes) in turn.
    """
    ks = range(max(family.sizes), family.order + 1) if k is None else [k]
    for kk in ks:
        for rows in iter_rgs(family, kk):
            for row in rows:
                yield Colouring.from_rgs(family, row)


def enumerate_colourings(family: CliqueFamily, k: int) -> List[Colouring]:
    return list(iter_colourings(family, k))


def enumerate_all_colourings(family: CliqueFamily) -> List[Colouring]:
    return list(iter_colourings(family))
