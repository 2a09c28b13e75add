"""Oracle unitaries and the decision pipelines built on them.

Three pipelines live here. The two-qubit identification pipeline runs
(H(x)H) U_f (H(x)H) (X(x)X) on |00> and reads constancy of a one-bit
function either from the final basis state or from a single transported
filter applied before the final Hadamards. The generalized pipeline
decides per-argument constancy of sum functions f_i(x) + f_j(y) with one
filter invocation on the phase pattern. The parity pipeline contrasts the
classical full-table scan with the pairwise quantum strategy (one
identification run per one-bit restriction) and diagnoses, with exact
integer arithmetic, why no single filter can separate the parity classes
beyond one bit.

The phase-oracle ancilla is always the last (least significant) qubit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .boolfuncs import (
    BooleanFunction,
    DECISION_PROBLEMS,
    is_constant,
    parity,
    sum_function,
)
from .filters import (
    Filter,
    NotAnEigenvectorError,
    canonical_system,
    separates,
    transform_system,
)
from .linalg import (
    DEFAULT_TOL,
    dagger,
    eigenvalue_of,
    equal_up_to_global_phase,
    kron,
)
from .states import H, X, basis_state, identity, standard_context, transform_context


class InternalCheckError(RuntimeError):
    """A construction failed its built-in cross-check."""


@dataclass(frozen=True)
class PhasePattern:
    """Signs (-1)**f(x) over the basis labels of the data register."""

    k: int
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != 1 << self.k:
            raise ValueError(f"expected {1 << self.k} signs")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")

    def as_state(self) -> np.ndarray:
        v = np.array(self.signs, dtype=complex)
        return v / np.linalg.norm(v)

    def text(self) -> str:
        return " ".join("+" if s == 1 else "-" for s in self.signs)


def bitflip_oracle(f: BooleanFunction) -> np.ndarray:
    """Permutation unitary |x>|y> -> |x>|y xor f(x)> with a one-qubit
    ancilla appended after the k data qubits."""
    dim = 1 << (f.k + 1)
    u = np.zeros((dim, dim), dtype=complex)
    for x in range(1 << f.k):
        for y in (0, 1):
            u[(x << 1) | (y ^ f.value(x)), (x << 1) | y] = 1.0
    return u


def phase_pattern(f: BooleanFunction, tol: float = DEFAULT_TOL) -> PhasePattern:
    """Phase-oracle signs, computed two ways and cross-checked.

    Route one reads (-1)**f(x) off the truth table. Route two builds the
    bit-flip oracle, conjugates the ancilla with Hadamards, and reads the
    diagonal phase on |x>|1>. A mismatch means the oracle construction is
    broken and raises InternalCheckError.
    """
    direct = tuple(1 - 2 * f.value(x) for x in range(1 << f.k))

    m = kron(identity(1 << f.k), H) @ bitflip_oracle(f) @ kron(identity(1 << f.k), H)
    for x in range(1 << f.k):
        idx = (x << 1) | 1
        col = m[:, idx]
        sign = col[idx].real
        residual = col.copy()
        residual[idx] -= sign
        if np.max(np.abs(residual)) > tol or abs(abs(sign) - 1.0) > tol:
            raise InternalCheckError(f"phase oracle is not diagonal on |{x}>|1>")
        if round(sign) != direct[x]:
            raise InternalCheckError(
                f"phase routes disagree at x={x}: table {direct[x]}, oracle {sign}"
            )
    return PhasePattern(f.k, direct)


def product_oracle(i: int, j: int) -> np.ndarray:
    """Tensor product of the two one-bit bit-flip oracles; acts on
    (x, ancilla, y, ancilla)."""
    return kron(
        bitflip_oracle(BooleanFunction.from_id(1, i)),
        bitflip_oracle(BooleanFunction.from_id(1, j)),
    )


def sum_phase_pattern(i: int, j: int) -> PhasePattern:
    """Phase pattern of f_i(x) + f_j(y): the entry-wise product of the two
    one-bit patterns, cross-checked against the sum function's own
    pattern."""
    pi = phase_pattern(BooleanFunction.from_id(1, i))
    pj = phase_pattern(BooleanFunction.from_id(1, j))
    signs = tuple(si * sj for si in pi.signs for sj in pj.signs)
    via_table = phase_pattern(sum_function(i, j))
    if signs != via_table.signs:
        raise InternalCheckError(f"sum pattern mismatch for ({i},{j})")
    return PhasePattern(2, signs)


def multi_sum_phase_pattern(ids: tuple[int, ...]) -> PhasePattern:
    """Extension point: phase pattern of a sum of one-bit functions over
    any number of arguments."""
    signs: tuple[int, ...] = (1,)
    for fid in ids:
        p = phase_pattern(BooleanFunction.from_id(1, fid))
        signs = tuple(a * b for a in signs for b in p.signs)
    return PhasePattern(len(ids), signs)


# Two-qubit identification pipeline.

def deutsch_oracle_state(f: BooleanFunction) -> np.ndarray:
    """State after U_f (H(x)H) (X(x)X) |00>; lands on the +-psi1 / +-psi2
    ray according to constancy."""
    if f.k != 1:
        raise ValueError("the identification pipeline takes one-bit functions")
    hh = kron(H, H)
    xx = kron(X, X)
    prepared = hh @ (xx @ basis_state(2, (0, 0)))
    return bitflip_oracle(f) @ prepared


def deutsch_run(f: BooleanFunction) -> np.ndarray:
    """Full pipeline (H(x)H) U_f (H(x)H) (X(x)X) |00>: ends on |11> for
    constant f and on |01> otherwise, up to a global sign."""
    return kron(H, H) @ deutsch_oracle_state(f)


def identification_basis() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The orthonormal basis (psi1, psi2, psi3, psi4) the pipeline
    distinguishes: Hadamard images of |11>, |01>, |00>, |10>."""
    hh = kron(H, H)
    return (
        hh @ basis_state(2, (1, 1)),
        hh @ basis_state(2, (0, 1)),
        hh @ basis_state(2, (0, 0)),
        hh @ basis_state(2, (1, 0)),
    )


def induced_state_partition(
    f: Filter, states: tuple[np.ndarray, ...], tol: float = DEFAULT_TOL
) -> tuple[tuple[int, ...], ...]:
    """Group state positions by their eigenvalue under the filter."""
    groups: dict[float, list[int]] = {}
    for pos, s in enumerate(states):
        lam = eigenvalue_of(f.operator, s, tol)
        if lam is None:
            raise NotAnEigenvectorError(f"state {pos} is not an eigenvector")
        groups.setdefault(round(lam.real, 6), []).append(pos)
    return tuple(tuple(groups[key]) for key in sorted(groups, reverse=True))


@dataclass(frozen=True)
class DeutschSetup:
    """Basis change and transported filters for constancy readout before
    the final Hadamards."""

    u: np.ndarray
    f_d1: Filter
    f_d2: Filter
    psi: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def deutsch_filter_setup(tol: float = DEFAULT_TOL) -> DeutschSetup:
    """Transport diag(1,1,0,0) and diag(1,0,1,0) by the basis change onto
    (psi4, psi2, psi3, psi1) and verify the stated separations."""
    psi = identification_basis()
    u = np.column_stack([psi[3], psi[1], psi[2], psi[0]])
    system = transform_system(canonical_system(2, 2), u, tol)
    f_d1, f_d2 = system.filters
    if not separates(f_d1, psi[0], psi[1], tol):
        raise InternalCheckError("first filter fails to separate psi1 from psi2")
    if not separates(f_d2, psi[0], psi[2], tol):
        raise InternalCheckError("second filter fails to separate psi1 from psi3")
    if induced_state_partition(f_d1, psi, tol) != ((1, 3), (0, 2)):
        raise InternalCheckError("first filter induces the wrong partition")
    if induced_state_partition(f_d2, psi, tol) != ((2, 3), (0, 1)):
        raise InternalCheckError("second filter induces the wrong partition")
    return DeutschSetup(u, f_d1, f_d2, psi)


@dataclass(frozen=True)
class DeutschOutcome:
    final_state: np.ndarray
    after_oracle: np.ndarray
    constant_by_state: bool
    constant_by_filter: bool
    eigenvalue: float


def deutsch_decide(
    f: BooleanFunction, setup: DeutschSetup | None = None, tol: float = DEFAULT_TOL
) -> DeutschOutcome:
    """Run the pipeline and read constancy both from the final basis state
    and from one invocation of the transported filter (eigenvalue 0 on
    the constant ray)."""
    setup = setup or deutsch_filter_setup(tol)
    after = deutsch_oracle_state(f)
    final = kron(H, H) @ after
    by_state = equal_up_to_global_phase(final, basis_state(2, (1, 1)), tol)
    lam = eigenvalue_of(setup.f_d1.operator, after, tol)
    if lam is None:
        raise InternalCheckError("pipeline state is not an eigenvector of the filter")
    by_filter = abs(lam.real) <= tol
    if by_state != by_filter or by_state != is_constant(f):
        raise InternalCheckError(f"verdicts disagree for {f.name}")
    return DeutschOutcome(final, after, by_state, by_filter, float(lam.real))


def vf_encode(f: BooleanFunction) -> tuple[np.ndarray, np.ndarray]:
    """Unitary V with V|00> = |f(0) f(1)> and that encoded state.

    Completed as X**f(0) (x) X**f(1), the unique tensor-product
    permutation completion; it is self-inverse.
    """
    if f.k != 1:
        raise ValueError("the encoding takes one-bit functions")
    v = kron(X if f.value(0) else identity(2), X if f.value(1) else identity(2))
    return v, v @ basis_state(2, (0, 0))


def vf_constancy_filter() -> Filter:
    """Filter separating the encodings of constant functions (indices 0
    and 3) from the rest; its eigenspaces contain the two Bell-state
    planes (1,0,0,+-1) and (0,1,+-1,0)."""
    return Filter(standard_context(4), ((0, 3), (1, 2)), (1.0, 0.0))


def bell_states() -> tuple[np.ndarray, ...]:
    s = 1 / np.sqrt(2)
    return (
        np.array([s, 0, 0, s], dtype=complex),
        np.array([s, 0, 0, -s], dtype=complex),
        np.array([0, s, s, 0], dtype=complex),
        np.array([0, s, -s, 0], dtype=complex),
    )


# Generalized pipeline for sums of one-bit functions.

_DECISION_DIAGS = {
    "D1": (1.0, 0.0, 1.0, 0.0),
    "D2": (1.0, 1.0, 0.0, 0.0),
    "D3": (0.0, 1.0, 1.0, 0.0),
    "D4": (1.0, 0.0, 0.0, 1.0),
}
_DECISION_CLASSES = {
    "D1": ((0, 2), (1, 3)),
    "D2": ((0, 1), (2, 3)),
    "D3": ((1, 2), (0, 3)),
    "D4": ((0, 3), (1, 2)),
}


@dataclass(frozen=True)
class GeneralizedSetup:
    """Basis change onto the four sign patterns and one transported filter
    per decision problem."""

    u: np.ndarray
    filters: dict[str, Filter]
    phi: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def pattern_basis() -> tuple[np.ndarray, ...]:
    """The four orthogonal +-1 patterns (phi1..phi4) the sum oracles can
    produce, as unnormalized vectors: all-plus, sign on x, sign on y,
    sign on x+y."""
    plus = np.array([1, 1])
    minus = np.array([1, -1])
    pairs = ((plus, plus), (minus, plus), (plus, minus), (minus, minus))
    return tuple(np.kron(a, b).astype(complex) for a, b in pairs)


def generalized_deutsch_setup(tol: float = DEFAULT_TOL) -> GeneralizedSetup:
    """Build the symmetric self-inverse basis change whose columns are the
    normalized patterns, transport each decision filter through its
    inverse, and verify the four separation statements."""
    raw = pattern_basis()
    u = 0.5 * np.column_stack(raw)
    ctx = transform_context(standard_context(4), dagger(u), tol)
    phi = tuple(v / 2.0 for v in raw)
    filts: dict[str, Filter] = {}
    for problem in DECISION_PROBLEMS:
        diag = _DECISION_DIAGS[problem]
        blocks = (
            tuple(i for i in range(4) if diag[i] == 1.0),
            tuple(i for i in range(4) if diag[i] == 0.0),
        )
        filt = Filter(ctx, blocks, (1.0, 0.0))
        ones, zeros = _DECISION_CLASSES[problem]
        for pos in ones:
            lam = eigenvalue_of(filt.operator, phi[pos], tol)
            if lam is None or abs(lam.real - 1.0) > tol:
                raise InternalCheckError(f"{problem}: pattern {pos + 1} not at eigenvalue 1")
        for pos in zeros:
            lam = eigenvalue_of(filt.operator, phi[pos], tol)
            if lam is None or abs(lam.real) > tol:
                raise InternalCheckError(f"{problem}: pattern {pos + 1} not at eigenvalue 0")
        filts[problem] = filt
    return GeneralizedSetup(u, filts, phi)


@dataclass(frozen=True)
class DecisionOutcome:
    problem: str
    i: int
    j: int
    eigenvalue: float
    verdict: bool


def decide(
    problem: str,
    i: int,
    j: int,
    setup: GeneralizedSetup | None = None,
    tol: float = DEFAULT_TOL,
) -> DecisionOutcome:
    """Decide one problem on f_i(x) + f_j(y) with a single filter
    invocation on the normalized phase pattern; verdict is eigenvalue 1."""
    if problem not in DECISION_PROBLEMS:
        raise ValueError(f"unknown decision problem {problem!r}")
    setup = setup or generalized_deutsch_setup(tol)
    state = sum_phase_pattern(i, j).as_state()
    lam = eigenvalue_of(setup.filters[problem].operator, state, tol)
    if lam is None:
        raise InternalCheckError(f"pattern for ({i},{j}) is not an eigenvector")
    if abs(lam.imag) > tol:
        raise InternalCheckError("filter eigenvalue is not real")
    return DecisionOutcome(problem, i, j, float(lam.real), abs(lam.real - 1.0) <= tol)


# Parity pipeline.

@dataclass(frozen=True)
class ParityResult:
    sign: str
    queries: int


def parity_classical(f: BooleanFunction) -> ParityResult:
    """Full-table scan; exactly 2**k value queries."""
    queries = 0
    ones = 0
    for x in range(1 << f.k):
        ones += f.value(x)
        queries += 1
    return ParityResult("+" if ones % 2 == 0 else "-", queries)


@dataclass(frozen=True)
class PairwiseParityResult:
    sign: str
    oracle_invocations: int


def parity_pairwise_quantum(f: BooleanFunction) -> PairwiseParityResult:
    """Parity via one identification run per one-bit restriction.

    Each of the 2**(k-1) prefixes of the leading arguments fixes a
    one-bit restriction whose constancy (read from a single oracle
    invocation) is its parity; the XOR of the oddness bits is the parity
    of f. Halves the classical query count.
    """
    if f.k < 1:
        raise ValueError("parity needs at least one argument bit")
    ket11 = basis_state(2, (1, 1))
    ket01 = basis_state(2, (0, 1))
    odd = 0
    invocations = 0
    for prefix in range(1 << (f.k - 1)):
        outcome = deutsch_run(f.restrict_last(prefix))
        invocations += 1
        if equal_up_to_global_phase(outcome, ket11):
            pass
        elif equal_up_to_global_phase(outcome, ket01):
            odd ^= 1
        else:
            raise InternalCheckError("identification run ended off the outcome basis")
    return PairwiseParityResult("+" if odd == 0 else "-", invocations)


def _exact_rank(rows: list[tuple[int, ...]]) -> int:
    """Rank by Gaussian elimination over exact rationals."""
    if not rows:
        return 0
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(len(mat[0])):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col] != 0:
                factor = mat[r][col] / prow[col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat[0]):
            break
    return rank


@dataclass(frozen=True)
class SeparabilityReport:
    k: int
    even_span_dim: int
    odd_span_dim: int
    single_filter_possible: bool


def parity_separability(k: int) -> SeparabilityReport:
    """Span analysis of the parity classes at the phase-pattern level.

    Collects the sign patterns of all 2**(2**k) functions, splits them by
    parity, and computes each class's span dimension with exact rational
    elimination. A single projective filter can separate the classes by
    eigenvalue only when the two spans are mutually orthogonal, which the
    report checks with exact integer dot products.
    """
    if k > 3:
        raise ValueError("separability analysis limited to k <= 3")
    size = 1 << k
    even: list[tuple[int, ...]] = []
    odd: list[tuple[int, ...]] = []
    for fid in range(1 << size):
        f = BooleanFunction.from_id(k, fid)
        signs = tuple(1 - 2 * v for v in f.table)
        (even if parity(f) == "+" else odd).append(signs)
    even_dim = _exact_rank(even)
    odd_dim = _exact_rank(odd)
    cross = np.array(even, dtype=np.int64) @ np.array(odd, dtype=np.int64).T
    orthogonal = bool(np.all(cross == 0))
    return SeparabilityReport(k, even_dim, odd_dim, orthogonal)


# Born-rule sampling for exploratory non-eigenstate inputs.

def sample_eigenvalue(
    f: Filter, state: np.ndarray, rng: np.random.Generator
) -> tuple[float, np.ndarray]:
    """Sample a projective outcome: block probabilities are the squared
    projection norms; returns the observed eigenvalue and the collapsed
    state."""
    coeffs = dagger(f.context.basis) @ np.asarray(state, dtype=complex)
    probs = np.array([sum(abs(coeffs[i]) ** 2 for i in block) for block in f.blocks])
    total = probs.sum()
    if total <= 0:
        raise ValueError("cannot sample from a zero state")
    choice = int(rng.choice(len(f.blocks), p=probs / total))
    projected = np.zeros_like(coeffs)
    for i in f.blocks[choice]:
        projected[i] = coeffs[i]
    post = f.context.basis @ projected
    return f.eigenvalues[choice], post / np.linalg.norm(post)
