"""Wiener index by breadth-first search, and the prime-power closed form."""

from __future__ import annotations

from dataclasses import dataclass

from .zdgraph import ZdGraph, build_compressed_prime_power


class DisconnectedGraphError(ValueError):
    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs distances over the simple graph; ``None`` marks unreachable."""

    vertices: tuple[int, ...]
    dist: tuple[tuple[int | None, ...], ...]
    meta: dict

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __call__(self, u: int, v: int) -> int | None:
        index = {x: i for i, x in enumerate(self.vertices)}
        return self.dist[index[u]][index[v]]


def _bfs_levels(masks: list[int], source: int):
    """Yield ``(level, bitset)`` for each BFS layer around ``source``."""
    full = (1 << len(masks)) - 1
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        level += 1
        reach = 0
        f = frontier
        # highest index first: in the zero-divisor graphs the top vertices
        # have the largest neighbourhoods, so the early exit fires sooner
        while f:
            top = f.bit_length() - 1
            reach |= masks[top]
            if (reach | seen) == full:
                break
            f ^= 1 << top
        frontier = reach & ~seen
        if frontier:
            seen |= frontier
            yield level, frontier


def all_pairs_distances(g: ZdGraph) -> DistanceTable:
    masks = g.neighbor_masks()
    size = len(masks)
    table = []
    for s in range(size):
        row = [None] * size
        row[s] = 0
        for level, layer in _bfs_levels(masks, s):
            while layer:
                low = layer & -layer
                row[low.bit_length() - 1] = level
                layer ^= low
        table.append(tuple(row))
    return DistanceTable(g.vertices, tuple(table), g.describe())


def wiener_index(g: ZdGraph) -> int:
    """Sum of distances over unordered vertex pairs (loops ignored)."""
    masks = g.neighbor_masks()
    size = len(masks)
    total = 0
    for s in range(size):
        reached = 1
        for level, layer in _bfs_levels(masks, s):
            count = bin(layer).count("1")
            reached += count
            total += level * count
        if reached != size:
            row = all_pairs_distances(g).dist[s]
            missing = next(i for i, d in enumerate(row) if d is None)
            raise DisconnectedGraphError(g.vertices[s], g.vertices[missing])
    return total // 2


def wiener_closed_form(n: int) -> int:
    """Wiener index of the compressed graph of Z_{p^n}.

    ``(n-2)(3n-4)/4`` for even ``n``, ``(n-1)(3n-7)/4`` for odd ``n``.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("n must be an int")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    num = (n - 2) * (3 * n - 4) if n % 2 == 0 else (n - 1) * (3 * n - 7)
    q, r = divmod(num, 4)
    assert r == 0, (n, num)
    return q


def wiener_as_printed(n: int):
    """The same expressions over 2 instead of 4, kept for erratum reporting."""
    num = (n - 2) * (3 * n - 4) if n % 2 == 0 else (n - 1) * (3 * n - 7)
    return num // 2 if num % 2 == 0 else num / 2


@dataclass(frozen=True)
class WienerRow:
    n: int
    bfs: int
    closed_form: int

    @property
    def match(self) -> bool:
        return self.bfs == self.closed_form

    def to_json(self) -> dict:
        return {"n": self.n, "bfs": self.bfs, "closed_form": self.closed_form, "match": self.match}

    @classmethod
    def from_json(cls, doc: dict) -> "WienerRow":
        row = cls(int(doc["n"]), int(doc["bfs"]), int(doc["closed_form"]))
        if "match" in doc and bool(doc["match"]) != row.match:
            raise ValueError(f"inconsistent match flag in row n={row.n}")
        return row


def verify_wiener(max_n: int) -> tuple[list[WienerRow], bool]:
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    rows = [
        WienerRow(n, wiener_index(build_compressed_prime_power(n)), wiener_closed_form(n))
        for n in range(2, max_n + 1)
    ]
    return rows, all(r.match for r in rows)
