"""Truth tables, parity, constancy, and the partitions they induce.

A k-bit function is a truth table of length 2**k indexed by the
big-endian argument label. Its id is the integer whose binary expansion
is the table, so at k = 2 the table 0001 is f1 and 0010 is f2. The
bundled parity tables (table4, table5) enumerate functions in a
different, weight-ordered row sequence; :func:`enumeration_by_weight`
reproduces that sequence, and row labels there generally differ from
function ids.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

ONE_BIT_CONSTANT_IDS = frozenset({0, 3})
DECISION_PROBLEMS = ("D1", "D2", "D3", "D4")


@dataclass(frozen=True)
class BooleanFunction:
    k: int
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.k:
            raise ValueError(f"table must have {1 << self.k} entries, got {len(table)}")
        if any(v not in (0, 1) for v in table):
            raise ValueError("table entries must be 0 or 1")

    @classmethod
    def from_id(cls, k: int, fid: int) -> "BooleanFunction":
        size = 1 << k
        if not 0 <= fid < (1 << size):
            raise ValueError(f"id {fid} out of range for {k} bits")
        return cls(k, tuple((fid >> (size - 1 - i)) & 1 for i in range(size)))

    @classmethod
    def from_string(cls, text: str, k: int | None = None) -> "BooleanFunction":
        """Parse a binary table like "0001" or a hex table like "0x1"
        (hex needs k to fix the width)."""
        text = text.strip()
        if text.lower().startswith("0x"):
            if k is None:
                raise ValueError("hex truth tables need an explicit bit count")
            return cls.from_id(k, int(text, 16))
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a binary truth table: {text!r}")
        size = len(text)
        if size & (size - 1) or size < 2:
            raise ValueError(f"table length must be a power of two >= 2, got {size}")
        arity = size.bit_length() - 1
        if k is not None and k != arity:
            raise ValueError(f"table {text!r} has arity {arity}, expected {k}")
        return cls(arity, tuple(int(c) for c in text))

    @property
    def id(self) -> int:
        out = 0
        for v in self.table:
            out = (out << 1) | v
        return out

    @property
    def name(self) -> str:
        return f"f{self.id}"

    def value(self, index: int) -> int:
        return self.table[index]

    def ones(self) -> int:
        return sum(self.table)

    def restrict_last(self, prefix: int) -> "BooleanFunction":
        """One-bit restriction fixing the first k-1 arguments to prefix."""
        if self.k < 1:
            raise ValueError("cannot restrict a 0-ary function")
        return BooleanFunction(1, (self.table[prefix << 1], self.table[(prefix << 1) | 1]))


def one_bit_functions() -> tuple[BooleanFunction, ...]:
    return tuple(BooleanFunction.from_id(1, i) for i in range(4))


def all_functions(k: int) -> tuple[BooleanFunction, ...]:
    if k > 4:
        raise ValueError("enumeration limited to k <= 4")
    return tuple(BooleanFunction.from_id(k, i) for i in range(1 << (1 << k)))


def enumeration_by_weight(k: int) -> tuple[BooleanFunction, ...]:
    """Functions ordered by weight, then lexicographically by the
    positions of their 1-values counted from the last argument.

    This is the row order of the bundled parity tables; position m in
    this sequence is the row label "fm" there.
    """
    size = 1 << k
    out = []
    for weight in range(size + 1):
        for positions in itertools.combinations(range(size), weight):
            table = [0] * size
            for p in positions:
                table[size - 1 - p] = 1
            out.append(BooleanFunction(k, tuple(table)))
    return tuple(out)


def parity(f: BooleanFunction) -> str:
    """"+" when the number of 1-values is even, "-" when odd."""
    return "+" if f.ones() % 2 == 0 else "-"


def is_constant(f: BooleanFunction) -> bool:
    return len(set(f.table)) == 1


def constant_in_argument(i: int, j: int, which: str) -> bool:
    """Per-argument constancy of the sum function built from one-bit
    functions i and j."""
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise ValueError("one-bit function ids must be in 0..3")
    if which == "first":
        return i in ONE_BIT_CONSTANT_IDS
    if which == "second":
        return j in ONE_BIT_CONSTANT_IDS
    raise ValueError(f"which must be 'first' or 'second', got {which!r}")


def sum_function(i: int, j: int) -> BooleanFunction:
    """The two-bit function f(x, y) = f_i(x) + f_j(y) mod 2."""
    fi = BooleanFunction.from_id(1, i)
    fj = BooleanFunction.from_id(1, j)
    table = tuple((fi.value(x) + fj.value(y)) % 2 for x in range(2) for y in range(2))
    return BooleanFunction(2, table)


def sum_label(i: int, j: int) -> str:
    return f"f{i}{j}"


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering a ground set; blocks and elements are kept
    sorted for deterministic serialization."""

    blocks: tuple[tuple, ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for b in blocks:
            bs = set(b)
            if len(bs) != len(b):
                raise ValueError("block contains repeated elements")
            if seen & bs:
                raise ValueError("blocks must be disjoint")
            seen |= bs

    @classmethod
    def over(cls, ground: Iterable, blocks: Sequence[Iterable]) -> "Partition":
        p = cls(tuple(tuple(b) for b in blocks))
        covered = {x for b in p.blocks for x in b}
        if covered != set(ground):
            raise ValueError("blocks must cover the ground set exactly")
        return p

    @property
    def ground(self) -> frozenset:
        return frozenset(x for b in self.blocks for x in b)


def deutsch_partition() -> Partition:
    """One-bit function ids split by constancy, constant block first."""
    return Partition.over(range(4), [(0, 3), (1, 2)])


def parity_partition(k: int) -> Partition:
    """All k-bit function ids split by parity sign, "+" block first."""
    if k > 4:
        raise ValueError("parity partition limited to k <= 4")
    even = []
    odd = []
    for f in all_functions(k):
        (even if parity(f) == "+" else odd).append(f.id)
    return Partition.over(range(1 << (1 << k)), [even, odd])


def _predicate(problem: str, i: int, j: int) -> bool:
    ci = constant_in_argument(i, j, "first")
    cj = constant_in_argument(i, j, "second")
    if problem == "D1":
        return ci
    if problem == "D2":
        return cj
    if problem == "D3":
        return ci != cj
    if problem == "D4":
        return ci == cj
    raise ValueError(f"unknown decision problem {problem!r}")


def decision_predicate(problem: str, i: int, j: int) -> bool:
    """Classical truth value of a decision problem on the sum function
    built from one-bit functions i and j."""
    return _predicate(problem, i, j)


def decision_partition(problem: str) -> Partition:
    """The 16 sum functions (as (i, j) pairs) split by a decision
    predicate, true block first. Derived from the predicates, never
    transcribed."""
    pairs = [(i, j) for i in range(4) for j in range(4)]
    true_block = [p for p in pairs if _predicate(problem, *p)]
    false_block = [p for p in pairs if not _predicate(problem, *p)]
    return Partition.over(pairs, [true_block, false_block])


def _printed_decision_partitions() -> dict[str, list[list[str]]]:
    text = resources.files("qfilters").joinpath("golden/decision_partitions.json").read_text()
    return json.loads(text)


@dataclass(frozen=True)
class DecisionDiff:
    """Comparison of a derived decision partition against the printed
    transcription of the same partition."""

    problem: str
    duplicated: tuple[str, ...]
    missing: tuple[str, ...]
    block_mismatches: tuple[dict, ...]

    @property
    def clean(self) -> bool:
        return not (self.duplicated or self.missing or self.block_mismatches)


def decision_partition_diff(problem: str) -> DecisionDiff:
    """Diff the predicate-derived partition against the printed lists.

    Discrepancies are reported, never silently corrected: elements
    appearing in more than one printed block come back as ``duplicated``,
    ground elements absent from the transcription as ``missing``, and any
    further block-level disagreement as ``block_mismatches``.
    """
    derived = decision_partition(problem)
    printed = _printed_decision_partitions()[problem]
    printed_sets = [set(block) for block in printed]

    counts: dict[str, int] = {}
    for block in printed_sets:
        for label in block:
            counts[label] = counts.get(label, 0) + 1
    duplicated = tuple(sorted(lbl for lbl, c in counts.items() if c > 1))

    ground_labels = {sum_label(i, j) for (i, j) in derived.ground}
    printed_union = set().union(*printed_sets)
    missing = tuple(sorted(ground_labels - printed_union))

    mismatches = []
    accounted = set(duplicated) | set(missing)
    for bi, (dblock, pblock) in enumerate(zip(derived.blocks, printed_sets)):
        dlabels = {sum_label(i, j) for (i, j) in dblock}
        extra = pblock - dlabels - accounted
        absent = dlabels - pblock - accounted
        if extra or absent:
            mismatches.append(
                {"block": bi, "extra": sorted(extra), "absent": sorted(absent)}
            )
    return DecisionDiff(problem, duplicated, missing, tuple(mismatches))
