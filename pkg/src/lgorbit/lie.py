"""Adjoint orbits of sl(n, C): trace pairing, height functions, critical points.

The orbit of a diagonal traceless matrix H0 under conjugation is studied
through the height function A -> tr(H A) attached to a regular diagonal H.
Critical points are the diagonal matrices with permuted H0 entries; their
count and Hessian nondegeneracy are checked numerically in explicit charts.
Exact paths (orbit membership, heights at critical points) run over the
Gaussian rationals.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np
from scipy.linalg import expm

from .errors import PreconditionError, StructureError
from .gaussian import ONE, ZERO, ExactMatrix, GaussianRational

TRACE_TOL = 1e-9


@dataclass(frozen=True)
class CartanDiagonal:
    """Diagonal traceless data, kept exact as Fractions."""

    diag: Tuple[Fraction, ...]

    def __init__(self, diag: Sequence) -> None:
        entries = tuple(Fraction(d) for d in diag)
        if len(entries) < 2:
            raise StructureError("need at least a 2x2 diagonal")
        if sum(entries) != 0:
            raise StructureError(f"diagonal {entries} does not sum to zero")
        object.__setattr__(self, "diag", entries)

    @property
    def n(self) -> int:
        return len(self.diag)

    @property
    def regular(self) -> bool:
        return len(set(self.diag)) == len(self.diag)

    def as_matrix(self) -> np.ndarray:
        return np.diag([complex(d) for d in self.diag])

    def as_exact_matrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal([GaussianRational(d) for d in self.diag])


class SlnMatrix:
    """Square complex matrix with (numerically) vanishing trace."""

    __slots__ = ("array",)

    def __init__(self, array) -> None:
        arr = np.asarray(array, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise StructureError(f"expected a square matrix, got shape {arr.shape}")
        if abs(np.trace(arr)) > TRACE_TOL:
            raise StructureError(f"trace {np.trace(arr)} is not zero within {TRACE_TOL}")
        self.array = arr

    @property
    def n(self) -> int:
        return self.array.shape[0]


def trace_form(a: np.ndarray, b: np.ndarray) -> complex:
    """The invariant pairing tr(AB)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.ndim != 2:
        raise StructureError("trace form needs two square matrices of one size")
    return complex(np.trace(a @ b))


def height(h: CartanDiagonal, a) -> complex:
    """Height tr(H A) of a matrix on the orbit, float regime."""
    arr = a.array if isinstance(a, SlnMatrix) else np.asarray(a, dtype=complex)
    if arr.shape != (h.n, h.n):
        raise StructureError("size mismatch between H and A")
    return complex(sum(complex(h.diag[i]) * arr[i, i] for i in range(h.n)))


def height_exact(h: CartanDiagonal, a: ExactMatrix) -> GaussianRational:
    if a.rows != h.n or a.cols != h.n:
        raise StructureError("size mismatch between H and A")
    total = ZERO
    for i in range(h.n):
        total = total + GaussianRational(h.diag[i]) * a[i, i]
    return total


def height_of_diagonal(h: CartanDiagonal, diag: Sequence[Fraction]) -> Fraction:
    """Exact height of a diagonal orbit point: the dot product of diagonals."""
    if len(diag) != h.n:
        raise StructureError("size mismatch")
    return sum((hi * Fraction(di) for hi, di in zip(h.diag, diag)), Fraction(0))


# --------------------------------------------------------- orbit membership


def orbit_contains(h0: CartanDiagonal, a, tol: float = 1e-9) -> bool:
    """Float regime: eigenvalue multisets compared after sorting."""
    arr = a.array if isinstance(a, SlnMatrix) else np.asarray(a, dtype=complex)
    if arr.shape != (h0.n, h0.n):
        raise StructureError("size mismatch between H0 and A")
    eig = sorted(np.linalg.eigvals(arr), key=lambda z: (z.real, z.imag))
    ref = sorted((complex(d) for d in h0.diag), key=lambda z: (z.real, z.imag))
    return all(abs(e - r) <= tol for e, r in zip(eig, ref))


def orbit_contains_exact(h0: CartanDiagonal, a: ExactMatrix) -> bool:
    """Exact regime: compare power sums tr(A^k), k = 1..n (Newton identities).

    Over a field of characteristic zero equal power sums up to n are
    equivalent to an equal characteristic polynomial, hence to an equal
    eigenvalue multiset.  For n = 2 this is the familiar x^2 + yz = const
    test written invariantly.
    """
    n = h0.n
    if a.rows != n or a.cols != n:
        raise StructureError("size mismatch between H0 and A")
    power = a
    for k in range(1, n + 1):
        target = sum((GaussianRational(d) ** k for d in h0.diag), ZERO)
        if power.trace() != target:
            return False
        if k < n:
            power = power * a
    return True


def sl2_orbit_coordinates(a: ExactMatrix) -> Tuple[GaussianRational, ...]:
    """Read (x, y, z) off a 2x2 traceless matrix [[x, y], [z, -x]]."""
    if a.rows != 2 or a.cols != 2:
        raise StructureError("expected a 2x2 matrix")
    if a[0, 0] != -a[1, 1]:
        raise StructureError("matrix is not traceless")
    return (a[0, 0], a[0, 1], a[1, 0])


# ----------------------------------------------------------- critical points


def critical_points(h0: CartanDiagonal, h: CartanDiagonal) -> Set[Tuple[Fraction, ...]]:
    """Diagonals of the critical points of the height tr(H .) on the orbit of H0.

    For regular H these are exactly the coordinate permutations of H0's
    diagonal; repeated H0 entries collapse the set.
    """
    if h0.n != h.n:
        raise StructureError("H0 and H must have one size")
    if not h.regular:
        raise PreconditionError("height diagonal H must be regular")
    return set(itertools.permutations(h0.diag))


def critical_count(h0: CartanDiagonal, h: CartanDiagonal) -> int:
    """n! divided by the factorials of the multiplicities of H0's entries."""
    if h0.n != h.n:
        raise StructureError("H0 and H must have one size")
    if not h.regular:
        raise PreconditionError("height diagonal H must be regular")
    count = math.factorial(h0.n)
    for value in set(h0.diag):
        count //= math.factorial(h0.diag.count(value))
    return count


def _chart_directions(point: Sequence[Fraction]) -> List[Tuple[int, int]]:
    n = len(point)
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and point[i] != point[j]
    ]


def _require_critical(h0: CartanDiagonal, h: CartanDiagonal, point: Sequence) -> Tuple[Fraction, ...]:
    pt = tuple(Fraction(p) for p in point)
    if pt not in critical_points(h0, h):
        raise PreconditionError(f"{pt} is not a critical point of this height")
    return pt


def _sl2_chart_value(h: CartanDiagonal, a: Fraction, y: complex, z: complex) -> complex:
    # branch of x = sqrt(a^2 - yz) through x(0, 0) = a
    root = complex(a) * np.sqrt(1 - (y * z) / complex(a) ** 2)
    k = complex(h.diag[0])
    return 2 * k * root


def _expm_chart_value(
    h: CartanDiagonal, point: Sequence[Fraction], directions, u: np.ndarray
) -> complex:
    n = h.n
    z = np.zeros((n, n), dtype=complex)
    for coord, (i, j) in zip(u, directions):
        z[i, j] = coord
    g = expm(z)
    p = np.diag([complex(c) for c in point])
    conj = g @ p @ expm(-z)
    return complex(sum(complex(h.diag[i]) * conj[i, i] for i in range(n)))


def hessian_matrix(
    h0: CartanDiagonal,
    h: CartanDiagonal,
    point: Sequence,
    step: float = 1e-4,
) -> np.ndarray:
    """Complex Hessian of the height at a critical point, by central differences.

    For sl(2) the chart solves the orbit equation for x near the critical
    value; for larger n the chart is exp(ad) along the root directions that
    move the point.  The finite-difference truncation error is O(step^2).
    """
    pt = _require_critical(h0, h, point)
    n = h0.n
    if n == 2:
        a = pt[0]
        if a == 0:
            raise PreconditionError("sl(2) chart needs a nonzero critical diagonal")

        def f(u: np.ndarray) -> complex:
            return _sl2_chart_value(h, a, u[0], u[1])

        dim = 2
    else:
        directions = _chart_directions(pt)
        if not directions:
            raise PreconditionError("critical point admits no moving directions")

        def f(u: np.ndarray) -> complex:
            return _expm_chart_value(h, pt, directions, u)

        dim = len(directions)

    hess = np.zeros((dim, dim), dtype=complex)
    base = np.zeros(dim)
    f0 = f(base)
    for i in range(dim):
        ei = np.zeros(dim)
        ei[i] = step
        hess[i, i] = (f(ei) - 2 * f0 + f(-ei)) / step**2
        for j in range(i + 1, dim):
            ej = np.zeros(dim)
            ej[j] = step
            value = (
                f(ei + ej) - f(ei - ej) - f(-ei + ej) + f(-ei - ej)
            ) / (4 * step**2)
            hess[i, j] = value
            hess[j, i] = value
    return hess


def hessian_determinant(
    h0: CartanDiagonal, h: CartanDiagonal, point: Sequence, step: float = 1e-4
) -> complex:
    return complex(np.linalg.det(hessian_matrix(h0, h, point, step)))


def hessian_nondegenerate(
    h0: CartanDiagonal,
    h: CartanDiagonal,
    point: Sequence,
    step: float = 1e-4,
    tol: float = 1e-6,
) -> bool:
    """True when the chart Hessian determinant clears the noise floor.

    The cutoff grows with step^2 because that is the truncation order of
    the central differences feeding the determinant.
    """
    threshold = max(tol, 100.0 * step * step)
    return abs(hessian_determinant(h0, h, point, step)) > threshold


def gradient_norm(
    h0: CartanDiagonal,
    h: CartanDiagonal,
    point: Sequence,
    step: float = 1e-5,
) -> float:
    """Max first-difference of the height in the chart directions at ``point``.

    Unlike the Hessian entry points this accepts non-critical diagonals, so
    tests can watch the gradient fail to vanish away from the critical set.
    """
    pt = tuple(Fraction(p) for p in point)
    if h0.n == 2:
        a = pt[0]
        if a == 0:
            raise PreconditionError("sl(2) chart needs a nonzero first entry")

        def f(u: np.ndarray) -> complex:
            return _sl2_chart_value(h, a, u[0], u[1])

        dim = 2
    else:
        directions = _chart_directions(pt)
        if not directions:
            raise PreconditionError("point admits no moving directions")

        def f(u: np.ndarray) -> complex:
            return _expm_chart_value(h, pt, directions, u)

        dim = len(directions)
    worst = 0.0
    for i in range(dim):
        ei = np.zeros(dim)
        ei[i] = step
        worst = max(worst, abs((f(ei) - f(-ei)) / (2 * step)))
    return worst


# ------------------------------------------------------------ random inputs


def random_sl_integer(n: int, rng: random.Random, length: int = 8) -> ExactMatrix:
    """Random integer matrix of determinant one, a product of shears."""
    if n < 2:
        raise StructureError("need n >= 2")
    result = ExactMatrix.identity(n)
    for _ in range(length):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        c = rng.choice((-2, -1, 1, 2))
        shear = [[1 if r == s else 0 for s in range(n)] for r in range(n)]
        shear[i][j] = c
        result = result * ExactMatrix(shear)
    return result


def conjugate_exact(g: ExactMatrix, a: ExactMatrix) -> ExactMatrix:
    return g * a * g.inverse()
