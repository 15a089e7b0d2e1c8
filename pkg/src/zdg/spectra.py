"""Exact characteristic polynomials of compressed zero-divisor graphs.

Everything here works over Python integers and ``fractions.Fraction``;
there is no floating point anywhere in the module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from operator import mul

from .zdgraph import adjacency_matrix, build_compressed_prime_power


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        """Coefficient of ``x**k`` (zero outside the stored range)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self, n: int | None = None) -> dict:
        doc = {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}
        if n is not None:
            doc = {"n": n, **doc}
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "IntPolynomial":
        poly = cls(tuple(int(c) for c in doc["coeffs"]))
        if "degree" in doc and poly.degree != doc["degree"]:
            raise ValueError(f"degree {doc['degree']} does not match coefficients")
        return poly

    def format(self, var: str = "x") -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.format()


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when ``b > a``."""
    return math.comb(a, b)


def charpoly_exact(matrix) -> IntPolynomial:
    """``det(x*I - M)`` of an integer matrix by Berkowitz's algorithm.

    The algorithm is division free: each leading principal submatrix
    contributes a Toeplitz factor built from ``R @ A^k @ C``.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("charpoly_exact needs a non-empty square matrix")
    # poly holds det(x*I - A_r) in descending order, starting from A_0
    poly = [1]
    for r in range(n):
        a_rr = rows[r][r]
        col = [rows[i][r] for i in range(r)]
        row = rows[r][:r]
        block = [rows[i][:r] for i in range(r)]
        # t[k] = -R A^(k-2) C for k >= 2, t[1] = -a_rr, t[0] = 1
        t = [1, -a_rr]
        v = col
        for _ in range(r):
            t.append(-sum(map(mul, row, v)))
            v = [sum(map(mul, b, v)) for b in block]
        # multiply lower-triangular Toeplitz(t) by the previous polynomial
        poly = [
            sum(t[i - j] * poly[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return IntPolynomial(tuple(reversed(poly)))


@dataclass(frozen=True)
class ClosedFormCoefficients:
    n: int
    p: tuple[int, ...]
    b: tuple[int, ...]
    s: tuple[int, ...]


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("n must be an int")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n


def sign(k: int) -> int:
    """Sign of the ``k``-th coefficient: -, -, +, +, -, -, ..."""
    return -1 if ((k + 1) // 2) % 2 else 1


def closed_form_coefficients(n: int) -> ClosedFormCoefficients:
    _check_n(n)
    ks = range(1, n)
    p = tuple((n - 1 + i) // 2 for i in ks)
    b = tuple(binomial(p_i, i) for i, p_i in zip(ks, p))
    s = tuple(sign(k) for k in ks)
    return ClosedFormCoefficients(n, p, b, s)


def closed_form_charpoly(n: int) -> IntPolynomial:
    """Characteristic polynomial of the compressed graph of Z_{p^n}.

    The coefficient of ``x**(n-1-k)`` is ``s_k * C(floor((n-1+k)/2), k)``.
    """
    cf = closed_form_coefficients(n)
    desc = [1] + [s * b for s, b in zip(cf.s, cf.b)]
    return IntPolynomial(tuple(reversed(desc)))


def prime_power_matrix(n: int, include_loops: bool = True) -> list[list[int]]:
    return adjacency_matrix(build_compressed_prime_power(_check_n(n)), include_loops)


def coefficient_triangle(max_n: int) -> list[tuple[int, ...]]:
    """Rows ``(1, b_1, ..., b_{n-1})`` for ``n = 2 .. max_n``."""
    _check_n(max_n)
    return [(1, *closed_form_coefficients(n).b) for n in range(2, max_n + 1)]


def triangle_csv(rows) -> str:
    return "".join(",".join(str(x) for x in row) + "\n" for row in rows)


def _det(rows) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    size = len(a)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _inverse(rows) -> list[list[Fraction]]:
    size = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(size)]
           for i, r in enumerate(rows)]
    for c in range(size):
        pivot = next((r for r in range(c, size) if aug[r][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular block")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[size:] for r in aug]


def _matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def schur_sides(n: int, lam) -> tuple[Fraction, Fraction]:
    """``det(M - lam*I)`` two ways: from the polynomial, and by Schur complement.

    The block split puts the leading ``floor((n-1)/2)`` rows in ``A``,
    where the shifted matrix is ``-lam * I``.
    """
    _check_n(n)
    if n < 4:
        raise ValueError(f"schur_check needs n >= 4, got {n}")
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero (the A block would be singular)")
    m = prime_power_matrix(n)
    order = n - 1
    via_poly = (-1) ** order * charpoly_exact(m)(lam)

    shifted = [[Fraction(x) - (lam if i == j else 0) for j, x in enumerate(r)]
               for i, r in enumerate(m)]
    k = (n - 1) // 2
    a = [r[:k] for r in shifted[:k]]
    b = [r[k:] for r in shifted[:k]]
    c = [r[:k] for r in shifted[k:]]
    d = [r[k:] for r in shifted[k:]]
    cab = _matmul(_matmul(c, _inverse(a)), b)
    schur = [[x - y for x, y in zip(dr, sr)] for dr, sr in zip(d, cab)]
    via_blocks = _det(a) * _det(schur)
    return via_poly, via_blocks


def schur_check(n: int, lam) -> bool:
    via_poly, via_blocks = schur_sides(n, lam)
    return via_poly == via_blocks
