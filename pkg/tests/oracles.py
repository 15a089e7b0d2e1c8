"""Brute-force reference computations, independent of the zdg code paths."""

from collections import deque
from fractions import Fraction

import numpy as np


def zero_divisors_scan(m):
    return [x for x in range(1, m) if any(x * y % m == 0 for y in range(1, m))]


def annihilator_scan(x, m):
    return [y for y in range(m) if x * y % m == 0]


def annihilator_partition(m):
    groups = {}
    for x in zero_divisors_scan(m):
        groups.setdefault(tuple(annihilator_scan(x, m)), []).append(x)
    return sorted(groups.values())


def annihilator_partition_table(m):
    """Same partition as above, from the full multiplication table mod m."""
    r = np.arange(m, dtype=np.int64 if m > 40000 else np.int32)
    table = np.remainder(np.multiply.outer(r[1:], r), m) == 0
    rows = table.view(np.uint8)
    groups = {}
    for x in np.flatnonzero(table[:, 1:].any(axis=1)):
        groups.setdefault(rows[x].tobytes(), []).append(int(x) + 1)
    return sorted(groups.values())


def zero_product_edges(labels, m):
    labels = sorted(labels)
    return [(x, y) for i, x in enumerate(labels) for y in labels[i + 1:] if x * y % m == 0]


def faddeev_leverrier(matrix):
    """Ascending coefficients of det(xI - M) via the Faddeev-LeVerrier recursion."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]  # descending, c_n = 1
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        mk = [[prod[i][j] + coeffs[-1] * ident[i][j] for j in range(n)] for i in range(n)]
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in reversed(coeffs))


def floyd_warshall(vertices, edges):
    index = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[index[u]][index[v]] = d[index[v]][index[u]] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def bfs_from(vertices, edges, s):
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist
