"""Column-addition search for small orthogonal and nearly orthogonal Latin hypercubes.

Columns are added one at a time to a design whose first column is pinned to the
canonical level order. A candidate column starts as a random permutation of the
levels and descends by pairwise switches: every one of the C(n,2) swaps is
scored and the best strict improvement is applied, until the candidate is
orthogonal to all existing columns (objective zero) or no switch improves. A
stuck candidate is exchanged for a fresh random column at most T1 times; the
whole sequential build restarts T2 times. Everything is exact int64 arithmetic.

The objective for a candidate c is sum_j <c, x_j>^2 over existing columns x_j.
A switch of entries p, q changes <c, x> by (c_q - c_p)(x_p - x_q), so a full
scan is O(n^2) with cached inner products instead of O(n^2 * n m).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DesignMatrix, Recipe, correlation, CorrelationReport, levels_for, olh_exists
from .errors import InvalidArgumentError, NoOlhExistsError

_SENTINEL = np.iinfo(np.int64).max


@dataclass(frozen=True)
class SearchConfig:
    """Budgets and seeding: T1 exchanges per column, T2 restarts of the whole build."""

    t1: int = 100
    t2: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.t1 < 1 or self.t2 < 1:
            raise InvalidArgumentError("T1 and T2 must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    design: DesignMatrix
    complete: bool
    restarts_used: int


def switch_delta(c: np.ndarray, x: np.ndarray, p: int, q: int) -> int:
    """Change in <c, x> when entries c_p and c_q are swapped: (c_q - c_p)(x_p - x_q)."""
    if p == q:
        raise InvalidArgumentError("switch positions must differ")
    return int((int(c[q]) - int(c[p])) * (int(x[p]) - int(x[q])))


def _descend(existing: np.ndarray, gaps: np.ndarray, c: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Best-improvement switch descent; returns (column, final objective, objective history)."""
    n = existing.shape[0]
    ip = existing.T @ c
    obj = int(ip @ ip)
    history = [obj]
    tri = np.triu(np.ones((n, n), dtype=bool), k=1)
    while obj > 0:
        r = existing @ ip
        cdiff = c[None, :] - c[:, None]          # c_q - c_p at [p, q]
        rdiff = r[:, None] - r[None, :]          # r_p - r_q at [p, q]
        delta = 2 * cdiff * rdiff + cdiff * cdiff * gaps
        delta = np.where(tri, delta, _SENTINEL)
        flat = int(np.argmin(delta))
        p, q = divmod(flat, n)
        best = int(delta[p, q])
        if best >= 0:
            break                                # local optimum
        ip = ip + (c[q] - c[p]) * (existing[p] - existing[q])
        c = c.copy()
        c[p], c[q] = c[q], c[p]
        obj += best
        history.append(obj)
    return c, obj, history


def add_column(existing: DesignMatrix | None, t1: int, rng: np.random.Generator, n: int | None = None):
    """One inner pass of the algorithm: try up to t1 random starts, return an
    orthogonal mate for the existing columns or None.

    With no existing columns the first random permutation is returned as is.
    """
    if existing is None or existing.m == 0:
        if n is None:
            raise InvalidArgumentError("run count required when no columns exist yet")
        return rng.permutation(levels_for(n))
    x = existing.entries
    gaps = _row_gap_matrix(x)
    for _ in range(t1):
        c = rng.permutation(levels_for(existing.n))
        c, obj, _ = _descend(x, gaps, c)
        if obj == 0:
            return c
    return None


def _row_gap_matrix(x: np.ndarray) -> np.ndarray:
    diff = x[:, None, :] - x[None, :, :]
    return np.einsum("pqj,pqj->pq", diff, diff)


def _build_once(n: int, m_target: int, t1: int, rng: np.random.Generator, exact: bool) -> tuple[np.ndarray, bool]:
    """Sequential build of one restart. With exact=False the best stuck column is kept."""
    cols = [levels_for(n)]
    while len(cols) < m_target:
        x = np.column_stack(cols)
        gaps = _row_gap_matrix(x)
        best_c, best_obj = None, None
        done = False
        for _ in range(t1):
            c = rng.permutation(levels_for(n))
            c, obj, _ = _descend(x, gaps, c)
            if obj == 0:
                cols.append(c)
                done = True
                break
            if best_obj is None or obj < best_obj:
                best_c, best_obj = c, obj
        if done:
            continue
        if exact:
            return np.column_stack(cols), False
        cols.append(best_c)
    return np.column_stack(cols), True


def search_olh(n: int, m_target: int, config: SearchConfig) -> SearchResult:
    """Search for an OLH(n, m_target); deterministic for a fixed config.

    Restart r draws from a generator seeded with config.seed + r, and the first
    restart (by index) that reaches m_target wins, so serial and parallel
    execution would select the same design. On failure the result carries the
    widest orthogonal prefix found and complete=False.
    """
    if n < 4:
        raise InvalidArgumentError(f"search needs n >= 4, got {n}")
    if not 1 <= m_target <= n - 1:
        raise InvalidArgumentError(f"m_target must be in [1, {n - 1}], got {m_target}")
    if m_target >= 2 and not olh_exists(n):
        raise NoOlhExistsError(f"no orthogonal Latin hypercube with n={n} (run size of form 4k+2)")
    best: np.ndarray | None = None
    best_restart = 0
    for restart in range(config.t2):
        rng = np.random.default_rng(config.seed + restart)
        entries, complete = _build_once(n, m_target, config.t1, rng, exact=True)
        if complete:
            return SearchResult(_as_search_design(entries, n, config), True, restart + 1)
        if best is None or entries.shape[1] > best.shape[1]:
            best, best_restart = entries, restart
    assert best is not None
    return SearchResult(_as_search_design(best, n, config), False, best_restart + 1)


def _as_search_design(entries: np.ndarray, n: int, config: SearchConfig) -> DesignMatrix:
    recipe = Recipe(
        "search",
        {"n": n, "m": entries.shape[1], "seed": config.seed, "t1": config.t1, "t2": config.t2},
    )
    dm = DesignMatrix(entries, recipe=recipe)
    assert dm.is_latin_hypercube
    return dm


def search_nolh(n: int, m_target: int, config: SearchConfig) -> tuple[DesignMatrix, CorrelationReport]:
    """Best-effort nearly orthogonal search: minimizes the sum of squared column
    inner products and always returns a Latin hypercube of the full width."""
    if n < 4:
        raise InvalidArgumentError(f"search needs n >= 4, got {n}")
    if not 1 <= m_target <= n:
        raise InvalidArgumentError(f"m_target must be in [1, {n}], got {m_target}")
    best_entries: np.ndarray | None = None
    best_score: int | None = None
    for restart in range(config.t2):
        rng = np.random.default_rng(config.seed + restart)
        entries, _ = _build_once(n, m_target, config.t1, rng, exact=False)
        gram = entries.T @ entries
        score = int((gram * gram).sum() - (np.diag(gram) ** 2).sum())
        if best_score is None or score < best_score:
            best_entries, best_score = entries, score
        if score == 0:
            break
    design = _as_search_design(best_entries, n, config)
    return design, correlation(design)
