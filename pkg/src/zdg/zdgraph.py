"""Zero-divisor graphs of Z_m and their compressed forms."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field

from .modring import ann_classes, check_modulus, divisors, zero_divisors

DEFAULT_MAX_M = 10**6
MAX_CLASSES = 10**4

FULL = "full"
COMPRESSED = "compressed"
PRIME_POWER = "compressed-prime-power"


class GraphSizeError(ValueError):
    """Requested graph would be too large to build."""


def max_full_modulus() -> int:
    raw = os.environ.get("ZDG_MAX_M")
    if raw is None:
        return DEFAULT_MAX_M
    try:
        cap = int(raw)
    except ValueError:
        raise GraphSizeError(f"ZDG_MAX_M is not an integer: {raw!r}") from None
    if cap < 2:
        raise GraphSizeError(f"ZDG_MAX_M must be >= 2, got {cap}")
    return cap


@dataclass(frozen=True)
class ZdGraph:
    """Undirected graph on integer labels with loops kept apart from edges.

    ``vertices`` is the canonical (ascending) order, ``edges`` holds pairs
    ``(u, v)`` with ``u < v`` sorted lexicographically, ``loops`` the sorted
    vertices whose label squares to zero.
    """

    kind: str
    param: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    loops: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-pair {u} belongs in loops")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) has an unknown endpoint")
        if not vs.issuperset(self.loops):
            raise ValueError("loop at an unknown vertex")

    @property
    def order(self) -> int:
        return len(self.vertices)

    def structure(self) -> tuple:
        """Vertex/edge/loop sets, ignoring construction metadata."""
        return (self.vertices, self.edges, self.loops)

    def relabel(self, mapping) -> "ZdGraph":
        f = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
        edges = sorted(tuple(sorted((f(u), f(v)))) for u, v in self.edges)
        return ZdGraph(
            kind=self.kind,
            param=self.param,
            vertices=tuple(sorted(f(v) for v in self.vertices)),
            edges=tuple(edges),
            loops=tuple(sorted(f(v) for v in self.loops)),
            meta=dict(self.meta),
        )

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbour bitsets over vertex indices (loops excluded)."""
        index = {v: i for i, v in enumerate(self.vertices)}
        bit = {v: 1 << i for i, v in enumerate(self.vertices)}
        masks = [0] * len(self.vertices)
        for u, v in self.edges:
            masks[index[u]] |= bit[v]
            masks[index[v]] |= bit[u]
        return masks

    def describe(self) -> dict:
        d = {"kind": self.kind}
        d["n" if self.kind == PRIME_POWER else "m"] = self.param
        d.update(self.meta)
        return d


def _full_graph(m, labels):
    label_set = set(labels)
    edges = []
    loops = []
    for x in labels:
        # neighbours of x are exactly the multiples of m / gcd(x, m)
        step = m // math.gcd(x, m)
        start = (x // step + 1) * step
        edges.extend((x, y) for y in range(start, m, step) if y in label_set)
        if x * x % m == 0:
            loops.append(x)
    return tuple(edges), tuple(loops)


def _class_graph(m, keys):
    edges = []
    for i, d in enumerate(keys):
        edges.extend((d, e) for e in keys[i + 1 :] if d * e % m == 0)
    loops = tuple(d for d in keys if d * d % m == 0)
    return tuple(edges), loops


def build_full_graph(m: int) -> ZdGraph:
    """Zero-divisor graph on the nonzero zero divisors of Z_m."""
    check_modulus(m)
    cap = max_full_modulus()
    if m > cap:
        raise GraphSizeError(f"modulus {m} exceeds full-graph cap {cap}")
    labels = zero_divisors(m)
    edges, loops = _full_graph(m, labels)
    return ZdGraph(FULL, m, tuple(labels), edges, loops)


def build_compressed_graph(m: int) -> ZdGraph:
    """Compressed graph: one vertex per annihilator class, keyed by gcd."""
    check_modulus(m)
    if len(divisors(m)) - 2 > MAX_CLASSES:
        raise GraphSizeError(f"modulus {m} has more than {MAX_CLASSES} classes")
    keys = [c.key for c in ann_classes(m)]
    edges, loops = _class_graph(m, keys)
    return ZdGraph(COMPRESSED, m, tuple(keys), edges, loops)


def build_compressed_prime_power(n: int, p: int | None = None) -> ZdGraph:
    """Compressed graph of Z_{p^n} labelled by exponent.

    Vertex ``i`` stands for the class of ``p**i``. The structure does not
    depend on ``p``; when given it is only recorded in ``meta``.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("n must be an int")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    vertices = tuple(range(1, n))
    edges = tuple((i, j) for i in range(1, n) for j in range(max(i + 1, n - i), n))
    loops = tuple(i for i in vertices if 2 * i >= n)
    meta = {} if p is None else {"p": p}
    return ZdGraph(PRIME_POWER, n, vertices, edges, loops, meta)


def adjacency_matrix(g: ZdGraph, include_loops: bool = True) -> list[list[int]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    size = len(g.vertices)
    rows = [[0] * size for _ in range(size)]
    for u, v in g.edges:
        i, j = index[u], index[v]
        rows[i][j] = rows[j][i] = 1
    if include_loops:
        for v in g.loops:
            i = index[v]
            rows[i][i] = 1
    return rows


def _dot_label(g: ZdGraph, v: int) -> str:
    if g.kind == PRIME_POWER:
        return f"[p^{v}]"
    if g.kind == COMPRESSED:
        return f"[{v}]"
    return str(v)


def export_graph(g: ZdGraph, fmt: str) -> bytes:
    """Serialise ``g`` as ``"json"`` or ``"dot"`` (loops become self-edges)."""
    if fmt == "json":
        doc = {
            "meta": g.describe(),
            "vertices": list(g.vertices),
            "edges": [list(e) for e in g.edges],
            "loops": list(g.loops),
        }
        return (json.dumps(doc, sort_keys=True) + "\n").encode()
    if fmt == "dot":
        desc = ", ".join(f"{k}={v}" for k, v in g.describe().items())
        lines = ["graph zdg {", f'  label="{desc}";']
        for v in g.vertices:
            lines.append(f'  {v} [label="{_dot_label(g, v)}"];')
        for u, v in g.edges:
            lines.append(f"  {u} -- {v};")
        for v in g.loops:
            lines.append(f"  {v} -- {v};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}; expected 'json' or 'dot'")
