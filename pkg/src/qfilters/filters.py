"""Systems of commuting filters that equipartition a finite state space.

A filter over d = n**k dimensions splits the d basis states of a context
into n equal slices and assigns each slice a distinct real eigenvalue.
A system of k such filters resolves the context completely when it
satisfies three properties, checked combinatorially on the slice data:

  F1  every filter is an equi-n-partition (n blocks of d/n states each);
  F2  picking one block per filter always intersects to a single state;
  F3  those singleton intersections jointly cover all d states.

The partition is the source of truth; the dense operator of a filter is
derived on demand from the context basis. Binary filters (n = 2) carry
eigenvalues 1 and 0, so the operator is a projector and the eigenvalue-0
block describes the orthogonal complement. For n > 2 the eigenvalues are
runs of distinct primes, making every eigenvalue in a system unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import DEFAULT_TOL, as_operator, dagger, eigenvalue_of, is_unitary
from .states import Context, standard_context, transform_context

MAX_DIM = 4096


class NotAnEigenvectorError(ValueError):
    """Raised when a separation test receives a non-eigenstate."""


def first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


@dataclass(frozen=True)
class Filter:
    """An equi-partition of context basis states with one eigenvalue per block."""

    context: Context
    blocks: tuple[tuple[int, ...], ...]
    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(i) for i in b)) for b in self.blocks)
        eigs = tuple(float(e) for e in self.eigenvalues)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "eigenvalues", eigs)
        if len(blocks) != len(eigs):
            raise ValueError("one eigenvalue per block required")
        if len(set(eigs)) != len(eigs):
            raise ValueError("eigenvalues must be distinct")
        d = self.context.dim
        seen: set[int] = set()
        for b in blocks:
            if seen & set(b):
                raise ValueError("blocks must be disjoint")
            seen |= set(b)
        if seen != set(range(d)):
            raise ValueError("blocks must cover all basis indices")
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise ValueError(f"blocks must have equal size, got sizes {sorted(sizes)}")

    @property
    def d(self) -> int:
        return self.context.dim

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def pattern(self) -> tuple[float, ...]:
        """Eigenvalue at each basis index (the diagonal in the filter's context)."""
        out = [0.0] * self.d
        for block, eig in zip(self.blocks, self.eigenvalues):
            for i in block:
                out[i] = eig
        return tuple(out)

    @property
    def operator(self) -> np.ndarray:
        b = self.context.basis
        return b @ np.diag(np.array(self.pattern, dtype=complex)) @ dagger(b)

    def block_of(self, index: int) -> int:
        for j, block in enumerate(self.blocks):
            if index in block:
                return j
        raise ValueError(f"index {index} not covered")

    def eigenvalue_for_index(self, index: int) -> float:
        return self.eigenvalues[self.block_of(index)]

    def unordered_partition(self) -> frozenset[frozenset[int]]:
        """The slice structure with eigenvalue labels forgotten; a binary
        filter and its complement collapse to the same object."""
        return frozenset(frozenset(b) for b in self.blocks)


@dataclass(frozen=True)
class FilterSystem:
    k: int
    n: int
    context: Context
    filters: tuple[Filter, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(self.filters))
        if len(self.filters) != self.k:
            raise ValueError(f"expected {self.k} filters, got {len(self.filters)}")
        if self.context.dim != self.d:
            raise ValueError(f"context dimension {self.context.dim} != n**k = {self.d}")
        for f in self.filters:
            if f.n != self.n:
                raise ValueError("every filter must have arity n")
            if f.context is not self.context and not f.context.same_basis(self.context):
                raise ValueError("all filters must share the system context")

    @property
    def d(self) -> int:
        return self.n**self.k


def _digit(index: int, pos: int, k: int, n: int) -> int:
    """pos-th base-n digit of index, most significant first."""
    return (index // n ** (k - 1 - pos)) % n


def canonical_system(k: int, n: int) -> FilterSystem:
    """The diagonal filter system over d = n**k: filter i slices indices by
    their i-th base-n digit.

    For n = 2 the digit-0 block gets eigenvalue 1 and the digit-1 block
    eigenvalue 0, giving the familiar projector rows diag(1,1,1,1,0,0,0,0),
    diag(1,1,0,0,1,1,0,0), diag(1,0,1,0,1,0,1,0) at k = 3. For n > 2
    filter i receives the i-th run of n consecutive primes as eigenvalues,
    so eigenvalues are distinct across the whole system.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 2:
        raise ValueError("n must be at least 2")
    d = n**k
    if d > MAX_DIM:
        raise ValueError(f"dimension {d} exceeds supported budget {MAX_DIM}")
    ctx = standard_context(d)
    if n == 2:
        eig_runs = [[1.0, 0.0]] * k
    else:
        primes = first_primes(k * n)
        eig_runs = [[float(p) for p in primes[i * n : (i + 1) * n]] for i in range(k)]
    filts = []
    for i in range(k):
        blocks = tuple(
            tuple(idx for idx in range(d) if _digit(idx, i, k, n) == j) for j in range(n)
        )
        filts.append(Filter(ctx, blocks, tuple(eig_runs[i])))
    return FilterSystem(k, n, ctx, tuple(filts))


def permute_columns(system: FilterSystem, perm: Sequence[int]) -> FilterSystem:
    """Rearrange every filter's diagonal pattern by a column permutation.

    ``perm[j]`` names the old column placed at position j, so the new
    pattern is ``old_pattern[perm[j]]`` at index j.
    """
    d = system.d
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(d)):
        raise ValueError(f"perm must be a bijection on 0..{d - 1}")
    filts = []
    for f in system.filters:
        new_blocks = tuple(
            tuple(j for j in range(d) if perm[j] in set(block)) for block in f.blocks
        )
        filts.append(Filter(f.context, new_blocks, f.eigenvalues))
    return FilterSystem(system.k, system.n, system.context, tuple(filts))


@dataclass(frozen=True)
class PropertyReport:
    f1: bool
    f2: bool
    f3: bool
    witnesses: tuple[dict, ...]

    @property
    def all_ok(self) -> bool:
        return self.f1 and self.f2 and self.f3


def verify_properties(system: FilterSystem) -> PropertyReport:
    """Check F1, F2, F3 by direct enumeration over the slice data."""
    d = system.d
    n = system.n
    witnesses: list[dict] = []

    f1 = True
    want = d // n
    for fi, f in enumerate(system.filters):
        sizes = [len(b) for b in f.blocks]
        covered = sorted(i for b in f.blocks for i in b)
        if sizes != [want] * n or covered != list(range(d)):
            f1 = False
            witnesses.append({"property": "F1", "filter": fi, "sizes": sizes})

    f2 = True
    f3 = True
    singletons: set[int] = set()
    for choice in itertools.product(range(n), repeat=system.k):
        inter = set(system.filters[0].blocks[choice[0]])
        for fi in range(1, system.k):
            inter &= set(system.filters[fi].blocks[choice[fi]])
        if len(inter) != 1:
            f2 = False
            witnesses.append(
                {"property": "F2", "choice": list(choice), "intersection": sorted(inter)}
            )
        singletons |= inter
    if singletons != set(range(d)):
        f3 = False
        witnesses.append(
            {"property": "F3", "missing": sorted(set(range(d)) - singletons)}
        )
    return PropertyReport(f1, f2, f3, tuple(witnesses))


def separates(f: Filter, u: np.ndarray, v: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True when u and v are eigenstates of the filter with different
    eigenvalues; non-eigenstate input raises NotAnEigenvectorError."""
    op = f.operator
    eu = eigenvalue_of(op, u, tol)
    ev = eigenvalue_of(op, v, tol)
    if eu is None or ev is None:
        which = "first" if eu is None else "second"
        raise NotAnEigenvectorError(f"{which} state is not an eigenvector of the filter")
    return abs(eu - ev) > tol


def transform_system(system: FilterSystem, u: np.ndarray, tol: float = DEFAULT_TOL) -> FilterSystem:
    """Conjugate every filter by a unitary (operator u @ F @ u†), carrying
    the slice structure onto the transported context basis."""
    u = as_operator(u)
    if not is_unitary(u, tol):
        raise ValueError("transform_system requires a unitary matrix")
    ctx = transform_context(system.context, u, tol)
    filts = tuple(Filter(ctx, f.blocks, f.eigenvalues) for f in system.filters)
    return FilterSystem(system.k, system.n, ctx, filts)


def systems_equivalent(a: FilterSystem, b: FilterSystem) -> bool:
    """Strict equality as unordered collections of slice structures.

    Eigenvalue labels are forgotten, so a binary filter and its
    complement count as the same object. Both systems must live on the
    same context.
    """
    if a.d != b.d:
        raise ValueError("systems have different dimensions")
    if not a.context.same_basis(b.context):
        raise ValueError("systems are diagonal in different contexts")
    pa = sorted(sorted(map(sorted, p)) for p in (f.unordered_partition() for f in a.filters))
    pb = sorted(sorted(map(sorted, p)) for p in (f.unordered_partition() for f in b.filters))
    return pa == pb


def relabeling_equivalent(a: FilterSystem, b: FilterSystem, max_dim: int = 8) -> bool:
    """Equivalence up to a bijective relabeling of the basis states.

    Exhaustive search over index bijections; restricted to small d.
    """
    if a.d != b.d:
        raise ValueError("systems have different dimensions")
    if a.d > max_dim:
        raise ValueError(f"relabeling search limited to dimension {max_dim}")
    target = sorted(
        sorted(map(sorted, f.unordered_partition())) for f in b.filters
    )
    for sig in itertools.permutations(range(a.d)):
        mapped = sorted(
            sorted(sorted(sig[i] for i in block) for block in f.unordered_partition())
            for f in a.filters
        )
        if mapped == target:
            return True
    return False


@dataclass(frozen=True)
class K2ClaimReport:
    """Outcome of checking whether every column permutation of the k=2,
    n=2 system reproduces the original system."""

    strict_holds: bool
    strict_counterexample: tuple[int, ...] | None
    relaxed_holds: bool


def check_k2_permutation_claim() -> K2ClaimReport:
    base = canonical_system(2, 2)
    strict = True
    counterexample = None
    relaxed = True
    for perm in itertools.permutations(range(4)):
        permuted = permute_columns(base, perm)
        if not systems_equivalent(base, permuted):
            if strict:
                counterexample = perm
            strict = False
            if not relabeling_equivalent(base, permuted):
                relaxed = False
    return K2ClaimReport(strict, counterexample, relaxed)


def system_rows(system: FilterSystem) -> list[list[float]]:
    """Row layout for serialization: binary systems list each projector row
    followed by its complement; n-ary systems list one eigenvalue-tag row
    per filter."""
    rows: list[list[float]] = []
    for f in system.filters:
        if system.n == 2:
            pattern = f.pattern
            rows.append([1.0 if x == 1.0 else 0.0 for x in pattern])
            rows.append([0.0 if x == 1.0 else 1.0 for x in pattern])
        else:
            rows.append(list(f.pattern))
    return rows


def system_to_json(system: FilterSystem) -> dict:
    return {
        "k": system.k,
        "n": system.n,
        "d": system.d,
        "rows": system_rows(system),
    }
