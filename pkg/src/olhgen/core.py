"""Domain types, level conventions, exact validators, and correlation metrics.

All design matrices store *doubled* levels: twice the true level, so that the
half-integer levels of even-run designs become exact integers. Every check in
this module (Latin hypercube membership, orthogonality) is exact int64
arithmetic; only the correlation report itself is floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    BudgetExceededError,
    DegenerateColumnError,
    InvalidArgumentError,
)

BRUTE_FORCE_MAX_N = 10


def levels_for(n: int) -> np.ndarray:
    """Doubled levels of an n-run Latin hypercube: -(n-1), -(n-3), ..., n-1.

    Odd integers when n is even, even integers (including 0) when n is odd.
    The list is sorted, has length n, steps by 2, and sums to zero.
    """
    if n < 1:
        raise InvalidArgumentError(f"run count must be >= 1, got {n}")
    return np.arange(-(n - 1), n, 2, dtype=np.int64)


@dataclass(frozen=True)
class Recipe:
    """Provenance node recording how a design was produced.

    ``kind`` is one of: seed, kronecker, prop1_pair, prop2, stack, theorem3,
    search. ``params`` holds the construction parameters, ``children`` the
    recipes of the ingredient designs (leaves are seed or search nodes).
    """

    kind: str
    params: dict = field(default_factory=dict)
    children: tuple["Recipe", ...] = ()

    def summary(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        if not self.children:
            return f"{self.kind}({inner})"
        kids = "; ".join(c.summary() for c in self.children)
        return f"{self.kind}({inner})[{kids}]"


def _as_int_matrix(entries, what: str) -> np.ndarray:
    arr = np.asarray(entries)
    if arr.ndim != 2 or arr.size == 0:
        raise InvalidArgumentError(f"{what} must be a nonempty 2-D matrix, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        rounded = np.rint(arr)
        if not np.array_equal(rounded, arr):
            raise InvalidArgumentError(f"{what} entries must be integers")
        arr = rounded
    arr = arr.astype(np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class DesignMatrix:
    """An n x m design stored as doubled integer levels, with lazy classification."""

    entries: np.ndarray
    recipe: Recipe | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_int_matrix(self.entries, "design"))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def m(self) -> int:
        return self.entries.shape[1]

    @cached_property
    def is_latin_hypercube(self) -> bool:
        target = levels_for(self.n)
        return all(np.array_equal(np.sort(self.entries[:, j]), target) for j in range(self.m))

    @cached_property
    def is_orthogonal(self) -> bool:
        g = self.entries.T @ self.entries
        off = g - np.diag(np.diag(g))
        return not off.any()

    @cached_property
    def column_level_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(np.sort(self.entries[:, j]).tolist()) for j in range(self.m))

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def take_columns(self, m: int) -> "DesignMatrix":
        if not 1 <= m <= self.m:
            raise InvalidArgumentError(f"cannot take {m} columns from an n x {self.m} design")
        return DesignMatrix(self.entries[:, :m], recipe=self.recipe)

    def halved(self) -> np.ndarray:
        """True (undoubled) levels as floats; exact because doubled levels are integers."""
        return self.entries / 2.0

    def with_recipe(self, recipe: Recipe) -> "DesignMatrix":
        return DesignMatrix(self.entries, recipe=recipe)

    def __eq__(self, other) -> bool:
        return isinstance(other, DesignMatrix) and np.array_equal(self.entries, other.entries)


@dataclass(frozen=True)
class SignMatrix:
    """A rectangular matrix of +-1 entries; ``column_orthogonal`` is checked exactly."""

    entries: np.ndarray

    def __post_init__(self):
        arr = _as_int_matrix(self.entries, "sign matrix")
        if not np.isin(arr, (-1, 1)).all():
            raise InvalidArgumentError("sign matrix entries must be exactly +-1")
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @cached_property
    def column_orthogonal(self) -> bool:
        g = self.entries.T @ self.entries
        return not (g - np.diag(np.diag(g))).any()

    def take_columns(self, m: int) -> "SignMatrix":
        if not 1 <= m <= self.cols:
            raise InvalidArgumentError(f"cannot take {m} columns from a {self.rows} x {self.cols} sign matrix")
        return SignMatrix(self.entries[:, :m])


@dataclass(frozen=True)
class CorrelationReport:
    """Pairwise column correlations plus the two scalar near-orthogonality measures."""

    rho: np.ndarray
    rho_max: float
    rho_sq: float

    def __str__(self) -> str:
        return f"rho_max={self.rho_max:.6g} rho_sq={self.rho_sq:.6g}"


def is_latin_hypercube(design: DesignMatrix) -> bool:
    """True iff every column is a permutation of levels_for(n)."""
    return design.is_latin_hypercube


def is_orthogonal(design: DesignMatrix) -> bool:
    """True iff all pairwise column inner products are exactly zero (vacuous for m = 1)."""
    return design.is_orthogonal


def correlation(design: DesignMatrix) -> CorrelationReport:
    """Pairwise correlations rho_ij = <d_i, d_j> / sqrt(<d_i,d_i><d_j,d_j>).

    Computed from doubled entries (the doubling cancels). rho_max is the
    largest |rho_ij| over i < j and rho_sq the average of rho_ij^2 over the
    m(m-1)/2 pairs; both are 0 for a single-column design.
    """
    x = design.entries
    gram = (x.T @ x).astype(np.float64)
    norms = np.sqrt(np.diag(gram))
    if (norms == 0).any():
        bad = int(np.flatnonzero(norms == 0)[0])
        raise DegenerateColumnError(f"column {bad} is constant; correlation undefined")
    rho = gram / np.outer(norms, norms)
    m = design.m
    if m == 1:
        return CorrelationReport(rho=rho, rho_max=0.0, rho_sq=0.0)
    iu = np.triu_indices(m, k=1)
    off = rho[iu]
    rho_max = float(np.max(np.abs(off)))
    rho_sq = float(np.sum(off * off) / (m * (m - 1) / 2))
    return CorrelationReport(rho=rho, rho_max=rho_max, rho_sq=rho_sq)


def olh_exists(n: int) -> bool:
    """Existence of an orthogonal Latin hypercube with at least two factors.

    True exactly when n >= 4 and n is odd or a multiple of 4; run sizes of the
    form 4k+2 (and 1, 2, 3) admit no such design.
    """
    return n >= 4 and n % 4 != 2


def brute_force_no_olh(n: int) -> bool:
    """Exhaustive oracle for the negative direction of the existence theorem.

    Fixes the first column to the canonical level order and tries every one of
    the n! permutations as a second column. Returns True iff none of them is
    orthogonal to the first. Independent of every construction in the package.
    """
    if n < 1:
        raise InvalidArgumentError(f"run count must be >= 1, got {n}")
    if n > BRUTE_FORCE_MAX_N:
        raise BudgetExceededError(
            f"n={n} needs {n}! = {math.factorial(n)} candidates; budget stops at n={BRUTE_FORCE_MAX_N}"
        )
    base = levels_for(n)
    perms = itertools.permutations(base.tolist())
    chunk_size = 200_000
    while True:
        chunk = list(itertools.islice(perms, chunk_size))
        if not chunk:
            return True
        products = np.asarray(chunk, dtype=np.int64) @ base
        if (products == 0).any():
            return False


@dataclass(frozen=True)
class WeightSet:
    """The four correlation-propagation weights for a Kronecker plan, kept as exact rationals."""

    w1: Fraction
    w2: Fraction
    w3: Fraction
    w4: Fraction
    n1: int
    n2: int
    m1: int
    m2: int


def prop4_weights(n1: int, n2: int, m1: int, m2: int) -> WeightSet:
    """Exact weights linking rho^2 / rho_max of ingredients B, C to the combined design.

    With n = n1*n2:
      w1 = (m2-1)(n2^2-1)^2 / [(m1*m2-1)(n^2-1)^2]
      w2 = n2^4 (m1-1)(n1^2-1)^2 / [(m1*m2-1)(n^2-1)^2]
      w3 = (n2^2-1)/(n^2-1)
      w4 = n2^2 (n1^2-1)/(n^2-1)
    w3 + w4 = 1 identically.
    """
    if n1 < 2 or n2 < 2:
        raise InvalidArgumentError("n1 and n2 must each be >= 2")
    if m1 < 1 or m2 < 1:
        raise InvalidArgumentError("m1 and m2 must each be >= 1")
    if m1 * m2 == 1:
        raise InvalidArgumentError("m1*m2 must exceed 1 (weight denominator vanishes)")
    n = n1 * n2
    denom = (m1 * m2 - 1) * (n * n - 1) ** 2
    w1 = Fraction((m2 - 1) * (n2 * n2 - 1) ** 2, denom)
    w2 = Fraction(n2**4 * (m1 - 1) * (n1 * n1 - 1) ** 2, denom)
    w3 = Fraction(n2 * n2 - 1, n * n - 1)
    w4 = Fraction(n2 * n2 * (n1 * n1 - 1), n * n - 1)
    return WeightSet(w1=w1, w2=w2, w3=w3, w4=w4, n1=n1, n2=n2, m1=m1, m2=m2)


def column_sum_of_squares(n: int) -> int:
    """Sum of squared doubled entries of any n-run Latin hypercube column: n(n^2-1)/3."""
    return n * (n * n - 1) // 3
