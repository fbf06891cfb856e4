"""Seaweed index of partitions into odd parts, via meander graphs.

Each partition is laid out as consecutive blocks on vertices 1..n.  Inside a
block of size s the i-th and (s+1-i)-th vertices are joined by an arc, so
the top (from lambda) and bottom (from mu) arcs give every vertex degree at
most two.  The index is 2 * (#cycles) + (#paths), isolated vertices counting
as paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .series import PochhammerFactor, expand_G, expand_inverse_pochhammer


class SumMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.parts)) + "}"


@dataclass(frozen=True)
class MeanderGraph:
    n: int
    top_arcs: frozenset[tuple[int, int]]
    bottom_arcs: frozenset[tuple[int, int]]

    def components(self) -> list[tuple[str, list[int]]]:
        """Connected components as ("cycle" | "path", sorted vertices)."""
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in [*self.top_arcs, *self.bottom_arcs]:
            adj[a].append(b)
            adj[b].append(a)
        seen: set[int] = set()
        out = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            stack, comp, edges2 = [v], [], 0
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                edges2 += len(adj[u])
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            # a connected graph with max degree 2 is a cycle iff |E| = |V|;
            # the double arc (a,b) top and bottom counts as a 2-cycle
            kind = "cycle" if edges2 // 2 == len(comp) else "path"
            out.append((kind, sorted(comp)))
        return out


def _block_arcs(parts: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    arcs = set()
    start = 1
    for s in parts:
        for i in range(s // 2):
            arcs.add((start + i, start + s - 1 - i))
        start += s
    return frozenset(arcs)


def build_meander(lam: Partition, mu: Partition) -> MeanderGraph:
    if lam.n != mu.n:
        raise SumMismatch(f"partition sums differ: {lam.n} vs {mu.n}")
    return MeanderGraph(lam.n, _block_arcs(lam.parts), _block_arcs(mu.parts))


def seaweed_index(g: MeanderGraph) -> int:
    return sum(2 if kind == "cycle" else 1 for kind, _ in g.components())


def _odd_parts(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(largest, n)
    if top % 2 == 0:
        top -= 1
    for p in range(top, 0, -2):
        for rest in _odd_parts(n - p, p):
            yield (p,) + rest


def odd_partitions(n: int) -> list[Partition]:
    """All partitions of n into odd parts, lexicographically descending."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _odd_parts(n, n)]


def odd_partition_count(n: int) -> int:
    """Coefficient of q^n in prod 1/(1 - q^(2k+1)), from the series engine."""
    return expand_inverse_pochhammer(PochhammerFactor(1, 2, 1), n).coeffs[n]


@dataclass(frozen=True)
class ParityCounts:
    e: int
    o: int


def parity_counts(n: int) -> ParityCounts:
    if n < 1:
        raise ValueError("n must be positive")
    full = Partition((n,))
    e = o = 0
    for lam in odd_partitions(n):
        if seaweed_index(build_meander(lam, full)) % 2 == 0:
            e += 1
        else:
            o += 1
    return ParityCounts(e, o)


@dataclass(frozen=True)
class IndexRow:
    n: int
    e: int
    o: int
    a: int

    @property
    def match(self) -> bool:
        return abs(self.e - self.o) == self.a


def verify_part2(N: int) -> list[IndexRow]:
    """|e_n - o_n| against a(n) for 1 <= n <= N."""
    if N < 1:
        raise ValueError("N must be positive")
    a = expand_G(N).coeffs
    rows = []
    for n in range(1, N + 1):
        pc = parity_counts(n)
        rows.append(IndexRow(n, pc.e, pc.o, a[n]))
    return rows
