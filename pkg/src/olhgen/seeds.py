"""Building-block matrices: symbolic fold matrices, Hadamard matrices, and the
embedded catalog of small verified orthogonal Latin hypercubes.

Hadamard orders are generated by Sylvester doubling, the quadratic-residue
construction over primes q = 3 (mod 4), and Kronecker products of supported
orders. That set covers every order the expansion recipes need (4, 8, 12, 16,
20, 24, 32, 48, ...); orders such as 28 are reported as unsupported rather
than guessed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cache, cached_property
from pathlib import Path

import numpy as np

from . import tables
from .core import DesignMatrix, Recipe, SignMatrix, levels_for
from .errors import (
    InvalidArgumentError,
    NotInCatalogError,
    UnsupportedOrderError,
)

FOLD_ORDERS = (2, 4, 8, 16)

#: Best factor counts found by the column-addition search, by run size.
#: The n=16 value comes from an externally published 16x12 design
#: (first 12 columns of TABLE1_B0), not from the search.
CATALOG_TARGETS = {4: 2, 5: 2, 7: 3, 8: 4, 9: 5, 11: 7, 12: 6, 13: 6, 15: 6, 16: 12, 17: 6, 19: 6, 20: 6, 21: 6}


@dataclass(frozen=True)
class SymbolicFoldMatrix:
    """An order x order/2 matrix over symbols x_1..x_{order/2}, stored as signed indices.

    Entry +k means +x_k and -k means -x_k. In every column each symbol occurs
    exactly once with each sign, the bottom half is the negated top half, and
    the columns are orthogonal identically in the symbols.
    """

    order: int
    entries: np.ndarray

    def substitute(self, values) -> np.ndarray:
        """Replace x_k by values[k-1]; signs carry over."""
        vals = np.asarray(values)
        if vals.shape != (self.order // 2,):
            raise InvalidArgumentError(
                f"order-{self.order} fold matrix needs {self.order // 2} values, got {vals.shape}"
            )
        return np.sign(self.entries) * vals[np.abs(self.entries) - 1]

    @cached_property
    def top_sign_pattern(self) -> SignMatrix:
        """Sign pattern of the top half (all symbols set to 1); column-orthogonal."""
        return SignMatrix(np.sign(self.entries[: self.order // 2]))


@cache
def table3_matrix(order: int) -> SymbolicFoldMatrix:
    """The published symbolic fold matrix of the given order (2, 4, 8 or 16)."""
    if order not in FOLD_ORDERS:
        raise UnsupportedOrderError(
            f"symbolic fold matrices exist only for orders {FOLD_ORDERS}, got {order}"
        )
    entries = np.array(tables.FOLD_MATRICES[order], dtype=np.int64)
    entries.setflags(write=False)
    return SymbolicFoldMatrix(order=order, entries=entries)


def instantiate_fold(matrix: SymbolicFoldMatrix, values) -> DesignMatrix:
    """Substitute doubled levels for the symbols, producing an orthogonal design.

    With values (1, 3, ..., order-1) the result is an orthogonal Latin
    hypercube of `order` runs and order/2 factors. With values
    n_a + (2i-1)*n2 it is the shifted-level ingredient of the Proposition 2
    construction.
    """
    vals = np.asarray(values, dtype=np.int64)
    if vals.ndim != 1 or vals.shape[0] != matrix.order // 2:
        raise InvalidArgumentError(
            f"need exactly {matrix.order // 2} values for order {matrix.order}, got {vals.shape}"
        )
    if (vals <= 0).any():
        raise InvalidArgumentError("substitution values must be positive")
    if len(set(vals.tolist())) != vals.shape[0]:
        raise InvalidArgumentError("substitution values must be distinct")
    return DesignMatrix(
        matrix.substitute(vals),
        recipe=Recipe("fold", {"order": matrix.order, "values": tuple(vals.tolist())}),
    )


def standard_fold_olh(order: int) -> DesignMatrix:
    """OLH(order, order/2) from the symbolic matrix with x_i = (2i-1)/2 (doubled: 2i-1)."""
    return instantiate_fold(table3_matrix(order), np.arange(1, order, 2, dtype=np.int64))


def fold_olh2(n1: int) -> DesignMatrix:
    """A two-column fold-over orthogonal Latin hypercube for any n1 = 4k.

    The top half C0 has first column (1, 3, ..., n1-1) in doubled units and a
    second column that swaps adjacent magnitudes with a sign flip,
    (x_{2i-1}, x_{2i}) -> (x_{2i}, -x_{2i-1}); the bottom half is -C0.
    """
    if n1 % 4 != 0 or n1 <= 0:
        raise InvalidArgumentError(f"fold_olh2 requires a positive multiple of 4, got {n1}")
    x = np.arange(1, n1, 2, dtype=np.int64)
    col2 = np.empty_like(x)
    col2[0::2] = x[1::2]
    col2[1::2] = -x[0::2]
    top = np.column_stack([x, col2])
    return DesignMatrix(
        np.vstack([top, -top]),
        recipe=Recipe("fold_olh2", {"n1": n1}),
    )


def _paley_core(q: int) -> np.ndarray:
    residues = {(i * i) % q for i in range(1, q)}
    chi = np.full(q, -1, dtype=np.int64)
    chi[0] = 0
    chi[sorted(residues)] = 1
    idx = np.arange(q)
    jacobsthal = chi[(idx[:, None] - idx[None, :]) % q]
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jacobsthal
    return np.eye(q + 1, dtype=np.int64) + s


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            return False
    return True


@cache
def _hadamard_entries(order: int) -> np.ndarray | None:
    if order == 1:
        h = np.array([[1]], dtype=np.int64)
    elif order == 2:
        h = np.array([[1, 1], [1, -1]], dtype=np.int64)
    elif order % 2 == 0 and _hadamard_entries(order // 2) is not None:
        half = _hadamard_entries(order // 2)
        h = np.block([[half, half], [half, -half]])
    elif order % 4 == 0 and _is_prime(order - 1) and (order - 1) % 4 == 3:
        h = _paley_core(order - 1)
    else:
        h = None
        if order % 4 == 0:
            for a in range(3, int(order**0.5) + 1):
                if order % a == 0:
                    left, right = _hadamard_entries(a), _hadamard_entries(order // a)
                    if left is not None and right is not None:
                        h = np.kron(left, right)
                        break
        if h is None:
            return None
    h.setflags(write=False)
    return h


def hadamard_supported(order: int) -> bool:
    return order >= 1 and _hadamard_entries(order) is not None


def hadamard(order: int) -> SignMatrix:
    """Hadamard matrix of the given order, exact: H^T H = order * I.

    Raises UnsupportedOrderError when the order is not reachable by Sylvester
    doubling, the prime quadratic-residue construction, or Kronecker products
    of reachable orders.
    """
    if order < 1:
        raise InvalidArgumentError(f"order must be >= 1, got {order}")
    entries = _hadamard_entries(order)
    if entries is None:
        raise UnsupportedOrderError(
            f"no Hadamard matrix of order {order} from this generator set "
            "(Sylvester doubling, quadratic residues over primes q = 3 mod 4, and their Kronecker products)"
        )
    return SignMatrix(entries)


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    m: int
    matrix: DesignMatrix
    source: str


def _catalog_path() -> Path:
    return Path(__file__).parent / "data" / "catalog.json"


@cache
def _load_catalog() -> dict[int, CatalogEntry]:
    raw = json.loads(_catalog_path().read_text())
    catalog: dict[int, CatalogEntry] = {}
    for item in raw:
        n, m = item["n"], item["m"]
        dm = DesignMatrix(np.array(item["doubled"], dtype=np.int64), recipe=Recipe("seed", {"n": n, "m": m}))
        if dm.n != n or dm.m != m:
            raise InvalidArgumentError(f"catalog entry ({n},{m}) has shape {dm.entries.shape}")
        if not dm.is_latin_hypercube:
            raise InvalidArgumentError(f"catalog entry ({n},{m}) is not a Latin hypercube")
        if not dm.is_orthogonal:
            raise InvalidArgumentError(f"catalog entry ({n},{m}) is not orthogonal")
        if CATALOG_TARGETS.get(n) != m:
            raise InvalidArgumentError(f"catalog entry ({n},{m}) disagrees with the target table")
        catalog[n] = CatalogEntry(n=n, m=m, matrix=dm, source=item["source"])
    return catalog


def catalog_run_sizes() -> tuple[int, ...]:
    return tuple(sorted(_load_catalog()))


def seed_olh(n: int) -> CatalogEntry:
    """A verified orthogonal Latin hypercube from the embedded catalog.

    Every entry is re-validated at load time: Latin hypercube property,
    exact orthogonality, and agreement of (n, m) with the target table.
    """
    catalog = _load_catalog()
    if n not in catalog:
        raise NotInCatalogError(f"no catalog design for n={n}; known run sizes: {sorted(catalog)}")
    return catalog[n]


def cache_dir() -> Path:
    env = os.environ.get("OLHGEN_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "olhgen"


def cache_design(design: DesignMatrix, seed: int) -> Path:
    """Persist a user-discovered design as olh_{n}x{m}_{seed}.json in the cache directory."""
    path = cache_dir()
    path.mkdir(parents=True, exist_ok=True)
    target = path / f"olh_{design.n}x{design.m}_{seed}.json"
    payload = {
        "n": design.n,
        "m": design.m,
        "doubled": design.entries.tolist(),
        "source": "search",
    }
    target.write_text(json.dumps(payload))
    return target


def load_cached(n: int, m: int, seed: int) -> DesignMatrix | None:
    target = cache_dir() / f"olh_{n}x{m}_{seed}.json"
    if not target.exists():
        return None
    item = json.loads(target.read_text())
    return DesignMatrix(np.array(item["doubled"], dtype=np.int64))


def full_table1() -> DesignMatrix:
    """The complete 16x16 published Latin hypercube (only columns 1-12 are mutually orthogonal)."""
    return DesignMatrix(np.array(tables.TABLE1_B0, dtype=np.int64), recipe=Recipe("seed", {"name": "table1"}))


def nearly_orthogonal_16x15() -> DesignMatrix:
    """The published 16x15 nearly orthogonal Latin hypercube."""
    return DesignMatrix(np.array(tables.TABLE5_B0, dtype=np.int64), recipe=Recipe("seed", {"name": "table5"}))


def _check_levels_sanity():
    # cheap import-time guard: the embedded 16-run tables must use doubled levels +-1..+-15
    for tbl in (tables.TABLE1_B0, tables.TABLE5_B0):
        arr = np.abs(np.array(tbl))
        assert arr.min() == 1 and arr.max() == 15


_check_levels_sanity()
