"""Aggregated invariant suite behind ``qfilters verify-all``.

Each check returns a status of ``ok``, ``warning``, or ``failure``.
Warnings are reserved for the two documented defects in the transcribed
reference data: the D1 decision partition (two labels duplicated, two
missing) and the claim that every column permutation of the k=2 binary
system reproduces it (false strictly, true up to relabeling of states).
Anything else that diverges is a failure.

All randomness is seeded, so output is deterministic for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfuncs import (
    all_functions,
    decision_partition_diff,
    decision_predicate,
    is_constant,
    one_bit_functions,
)
from .filters import (
    canonical_system,
    check_k2_permutation_claim,
    permute_columns,
    transform_system,
    verify_properties,
)
from .linalg import (
    DEFAULT_TOL,
    is_hermitian,
    is_normalized,
    is_projector,
    is_unitary,
    kron,
    max_abs,
)
from .oracles import (
    bitflip_oracle,
    decide,
    deutsch_decide,
    deutsch_filter_setup,
    generalized_deutsch_setup,
    parity_classical,
    parity_pairwise_quantum,
    parity_separability,
    product_oracle,
    vf_encode,
)
from .states import H, X, identity, sigma
from .tables import TABLE_NAMES, golden_diff

AXIOM_CONFIGS = ((1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3))
DOCUMENTED_D1_DUPLICATED = ("f32", "f33")
DOCUMENTED_D1_MISSING = ("f22", "f23")


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # ok | warning | failure
    detail: str


def _dft(n: int) -> np.ndarray:
    a = np.arange(n)
    return np.exp(2j * np.pi * np.outer(a, a) / n) / np.sqrt(n)


def _shift(n: int) -> np.ndarray:
    return np.roll(identity(n), 1, axis=0)


def random_layer_unitary(k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Product of a few layers, each a Kronecker product of local gates.

    For n = 2 the local gates are Hadamard, the flip, a random phase, and
    the identity; for larger n the discrete Fourier matrix, the cyclic
    shift, and random diagonal phases play the same roles.
    """
    def local() -> np.ndarray:
        pick = rng.integers(4)
        if n == 2:
            if pick == 0:
                return H
            if pick == 1:
                return X
            if pick == 2:
                return np.diag([1.0, np.exp(1j * rng.uniform(0, 2 * np.pi))])
            return identity(2)
        if pick == 0:
            return _dft(n)
        if pick == 1:
            return _shift(n)
        if pick == 2:
            return np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, size=n)))
        return identity(n)

    u = identity(n**k)
    for _ in range(int(rng.integers(1, 4))):
        layer = local()
        for _ in range(k - 1):
            layer = kron(layer, local())
        u = layer @ u
    return u


def check_filter_axioms(tol: float = DEFAULT_TOL) -> Check:
    for k, n in AXIOM_CONFIGS:
        report = verify_properties(canonical_system(k, n))
        if not report.all_ok:
            return Check(
                "filter-axioms",
                "failure",
                f"(k={k}, n={n}) violates {[w['property'] for w in report.witnesses]}",
            )
    return Check("filter-axioms", "ok", f"F1-F3 hold for {len(AXIOM_CONFIGS)} configurations")


def check_permutation_invariance(seed: int, rounds: int = 200) -> Check:
    rng = np.random.default_rng(seed)
    total = 0
    for k, n in AXIOM_CONFIGS:
        base = canonical_system(k, n)
        for _ in range(rounds):
            perm = rng.permutation(base.d)
            if not verify_properties(permute_columns(base, perm)).all_ok:
                return Check(
                    "permutation-invariance",
                    "failure",
                    f"(k={k}, n={n}) perm {perm.tolist()} breaks F1-F3",
                )
            total += 1
    return Check("permutation-invariance", "ok", f"{total} random column permutations preserve F1-F3")


def check_transport_invariance(seed: int, rounds: int = 50, tol: float = DEFAULT_TOL) -> Check:
    rng = np.random.default_rng(seed)
    total = 0
    for k, n in AXIOM_CONFIGS:
        base = canonical_system(k, n)
        for _ in range(rounds):
            u = random_layer_unitary(k, n, rng)
            moved = transform_system(base, u, tol)
            ops = [f.operator for f in moved.filters]
            for a in range(len(ops)):
                for b in range(a + 1, len(ops)):
                    if max_abs(ops[a] @ ops[b] - ops[b] @ ops[a]) > tol:
                        return Check(
                            "transport-invariance",
                            "failure",
                            f"(k={k}, n={n}) filters {a},{b} stop commuting",
                        )
            for fi, f in enumerate(moved.filters):
                op = f.operator
                for block, eig in zip(f.blocks, f.eigenvalues):
                    for idx in block:
                        v = moved.context.vector(idx)
                        if max_abs(op @ v - eig * v) > tol:
                            return Check(
                                "transport-invariance",
                                "failure",
                                f"(k={k}, n={n}) filter {fi} loses eigenvalue {eig} at {idx}",
                            )
            total += 1
    return Check(
        "transport-invariance",
        "ok",
        f"{total} random unitaries preserve commutation and spectra",
    )


def check_deutsch(tol: float = DEFAULT_TOL) -> Check:
    setup = deutsch_filter_setup(tol)
    for f in one_bit_functions():
        out = deutsch_decide(f, setup, tol)
        if out.constant_by_state != is_constant(f) or out.constant_by_filter != is_constant(f):
            return Check("deutsch", "failure", f"verdict wrong for {f.name}")
    return Check("deutsch", "ok", "4/4 functions identified by state and by filter")


def check_generalized_deutsch(tol: float = DEFAULT_TOL) -> Check:
    setup = generalized_deutsch_setup(tol)
    for problem in ("D1", "D2", "D3", "D4"):
        for i in range(4):
            for j in range(4):
                out = decide(problem, i, j, setup, tol)
                if out.verdict != decision_predicate(problem, i, j):
                    return Check(
                        "generalized-deutsch",
                        "failure",
                        f"{problem} disagrees with the classical predicate at f{i}{j}",
                    )
    return Check("generalized-deutsch", "ok", "64/64 decisions match the classical predicates")


def check_parity(max_k: int = 3) -> Check:
    for k in range(1, max_k + 1):
        for f in all_functions(k):
            classical = parity_classical(f)
            quantum = parity_pairwise_quantum(f)
            if classical.sign != quantum.sign:
                return Check("parity", "failure", f"signs disagree for k={k} id={f.id}")
            if classical.queries != 1 << k or quantum.oracle_invocations != 1 << (k - 1):
                return Check("parity", "failure", f"wrong counters for k={k} id={f.id}")
    return Check("parity", "ok", "pairwise quantum matches classical with half the queries, k <= 3")


def check_separability() -> Check:
    want = {1: True, 2: False, 3: False}
    for k, possible in want.items():
        report = parity_separability(k)
        if report.single_filter_possible != possible:
            return Check("separability", "failure", f"k={k} verdict {report.single_filter_possible}")
    return Check("separability", "ok", "single-filter separation possible only at k=1")


def check_tables() -> Check:
    dirty = [name for name in TABLE_NAMES if golden_diff(name)]
    if dirty:
        return Check("tables", "failure", f"golden diffs in: {', '.join(dirty)}")
    return Check("tables", "ok", "all 8 golden transcriptions reproduced byte for byte")


def check_decision_partitions() -> Check:
    d1 = decision_partition_diff("D1")
    if (
        d1.duplicated != DOCUMENTED_D1_DUPLICATED
        or d1.missing != DOCUMENTED_D1_MISSING
        or d1.block_mismatches
    ):
        return Check(
            "decision-partitions",
            "failure",
            f"D1 diff beyond the documented defect: {d1}",
        )
    for problem in ("D2", "D3", "D4"):
        if not decision_partition_diff(problem).clean:
            return Check("decision-partitions", "failure", f"{problem} transcription diverges")
    return Check(
        "decision-partitions",
        "warning",
        "D1 transcription has the documented defect (f32, f33 duplicated; f22, f23 missing); "
        "D2-D4 clean",
    )


def check_k2_claim() -> Check:
    report = check_k2_permutation_claim()
    if report.strict_holds:
        return Check("k2-permutation-claim", "ok", "every column permutation reproduces the system")
    if not report.relaxed_holds:
        return Check(
            "k2-permutation-claim",
            "failure",
            "a permutation breaks even relabeling equivalence",
        )
    perm = report.strict_counterexample
    return Check(
        "k2-permutation-claim",
        "warning",
        f"strict reading fails (counterexample columns {list(perm)}); "
        "equivalence up to state relabeling holds for all 24 permutations",
    )


def check_hygiene(tol: float = DEFAULT_TOL, norm_tol: float = 1e-12) -> Check:
    unitaries: list[np.ndarray] = [H, X, sigma(0.4, 1.1), sigma(np.pi / 2, 0.0)]
    hermitians: list[np.ndarray] = [H, X, sigma(0.4, 1.1)]
    projectors: list[np.ndarray] = []
    states: list[np.ndarray] = []

    for k, n in AXIOM_CONFIGS:
        system = canonical_system(k, n)
        hermitians.append(system.context.operator)
        for f in system.filters:
            (projectors if n == 2 else hermitians).append(f.operator)

    ds = deutsch_filter_setup(tol)
    unitaries.append(ds.u)
    projectors.extend([ds.f_d1.operator, ds.f_d2.operator])
    states.extend(ds.psi)

    gs = generalized_deutsch_setup(tol)
    unitaries.append(gs.u)
    projectors.extend(f.operator for f in gs.filters.values())
    states.extend(gs.phi)

    for f in one_bit_functions():
        unitaries.append(bitflip_oracle(f))
        v, encoded = vf_encode(f)
        unitaries.append(v)
        states.append(encoded)
        out = deutsch_decide(f, ds, tol)
        states.extend([out.final_state, out.after_oracle])
    for i in range(4):
        for j in range(4):
            unitaries.append(product_oracle(i, j))

    for m in unitaries:
        if not is_unitary(m, tol):
            return Check("hygiene", "failure", "a unitary fails its role predicate")
    for m in hermitians:
        if not is_hermitian(m, tol):
            return Check("hygiene", "failure", "a hermitian operator fails its role predicate")
    for m in projectors:
        if not is_projector(m, tol):
            return Check("hygiene", "failure", "a projector fails its role predicate")
    for v in states:
        if not is_normalized(v, norm_tol):
            return Check("hygiene", "failure", "a state strays from unit norm")
    counts = f"{len(unitaries)} unitaries, {len(hermitians)} hermitians, {len(projectors)} projectors, {len(states)} states"
    return Check("hygiene", "ok", f"role predicates and unit norms hold ({counts})")


def run_all(seed: int = 0, tol: float = DEFAULT_TOL) -> list[Check]:
    return [
        check_filter_axioms(tol),
        check_permutation_invariance(seed),
        check_transport_invariance(seed + 1, tol=tol),
        check_deutsch(tol),
        check_generalized_deutsch(tol),
        check_parity(),
        check_separability(),
        check_tables(),
        check_decision_partitions(),
        check_k2_claim(),
        check_hygiene(tol),
    ]
