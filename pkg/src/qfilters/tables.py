"""Regeneration of the reference tables and diffs against golden copies.

Every table is rebuilt from first principles (truth-table enumeration,
oracle pipelines, filter constructions); nothing is emitted from stored
constants. The golden files under ``qfilters/golden`` are hand
transcriptions of the same tables, so an empty diff certifies the
reproduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .boolfuncs import enumeration_by_weight, one_bit_functions, parity
from .filters import FilterSystem, canonical_system, permute_columns
from .linalg import max_abs
from .oracles import InternalCheckError, deutsch_oracle_state, phase_pattern, sum_phase_pattern

TABLE_NAMES = ("table1", "table2", "table3", "table4", "table5", "table6", "eq1", "eq2")


@dataclass(frozen=True)
class Table:
    name: str
    lines: tuple[str, ...]

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def to_json(self) -> dict:
        return {"name": self.name, "lines": list(self.lines)}


def _sign(value: int) -> str:
    return "+" if value == 0 else "-"


def _one_bit_table() -> Table:
    lines = tuple(f"{f.name} {f.value(0)} {f.value(1)}" for f in one_bit_functions())
    return Table("table1", lines)


def _evolution_table() -> Table:
    """Terms of U_f (H(x)H) (X(x)X) |00>, one row per one-bit function.

    The prepared state is (|00> - |01> - |10> + |11>)/2, so each term is
    sign * |x>|y xor f(x)> with the fixed sign sequence (+,-,-,+). The
    assembled vector is cross-checked against the pipeline state.
    """
    term_order = ((0, 0, "+"), (0, 1, "-"), (1, 0, "-"), (1, 1, "+"))
    lines = ["scale 1/2"]
    for f in one_bit_functions():
        terms = []
        vec = np.zeros(4, dtype=complex)
        for x, y, sign in term_order:
            out = (x << 1) | (y ^ f.value(x))
            terms.append(f"{sign}|{x}{y ^ f.value(x)}>")
            vec[out] += 0.5 if sign == "+" else -0.5
        if max_abs(vec - deutsch_oracle_state(f)) > 1e-12:
            raise InternalCheckError(f"term expansion disagrees with the pipeline for {f.name}")
        lines.append(f"{f.name} " + " ".join(terms))
    return Table("table2", tuple(lines))


def _one_bit_phase_table() -> Table:
    lines = tuple(
        f"{f.name} {phase_pattern(f).text()}" for f in one_bit_functions()
    )
    return Table("table3", lines)


def _parity_listing_table() -> Table:
    rows = []
    for label, f in enumerate(enumeration_by_weight(2)):
        values = " ".join(str(v) for v in f.table)
        rows.append(f"{parity(f)} f{label} {values}")
    return Table("table4", tuple(rows))


def _two_bit_phase_table() -> Table:
    rows = []
    for label, f in enumerate(enumeration_by_weight(2)):
        rows.append(f"{parity(f)} f{label} {phase_pattern(f).text()}")
    return Table("table5", tuple(rows))


def _sum_phase_table() -> Table:
    rows = []
    for i in range(4):
        for j in range(4):
            rows.append(f"f{i}{j} {sum_phase_pattern(i, j).text()}")
    return Table("table6", tuple(rows))


def _binary_rows(system: FilterSystem) -> list[str]:
    rows = []
    for f in system.filters:
        pattern = "".join("1" if x == 1.0 else "0" for x in f.pattern)
        complement = "".join("0" if c == "1" else "1" for c in pattern)
        rows.extend([pattern, complement])
    return rows


def _canonical_matrix() -> Table:
    return Table("eq1", tuple(_binary_rows(canonical_system(3, 2))))


def _permuted_matrices() -> Table:
    """The two permuted systems shown alongside the canonical one: cyclic
    column shifts by one and by two."""
    base = canonical_system(3, 2)
    lines: list[str] = []
    for shift in (1, 2):
        perm = [(j + shift) % base.d for j in range(base.d)]
        lines.extend(_binary_rows(permute_columns(base, perm)))
        lines.append("")
    return Table("eq2", tuple(lines[:-1]))


_BUILDERS = {
    "table1": _one_bit_table,
    "table2": _evolution_table,
    "table3": _one_bit_phase_table,
    "table4": _parity_listing_table,
    "table5": _two_bit_phase_table,
    "table6": _sum_phase_table,
    "eq1": _canonical_matrix,
    "eq2": _permuted_matrices,
}


def emit_table(name: str) -> Table:
    if name not in _BUILDERS:
        raise ValueError(f"unknown table {name!r}; known: {', '.join(TABLE_NAMES)}")
    return _BUILDERS[name]()


def golden_text(name: str) -> str:
    if name not in _BUILDERS:
        raise ValueError(f"unknown table {name!r}")
    return resources.files("qfilters").joinpath(f"golden/{name}.txt").read_text()


@dataclass(frozen=True)
class LineDiff:
    line: int
    golden: str | None
    emitted: str | None


def golden_diff(name: str) -> tuple[LineDiff, ...]:
    """Line-by-line comparison of the regenerated table against its golden
    transcription; empty means byte-for-byte agreement."""
    emitted = emit_table(name).lines
    golden = tuple(golden_text(name).splitlines())
    diffs = []
    for idx in range(max(len(emitted), len(golden))):
        g = golden[idx] if idx < len(golden) else None
        e = emitted[idx] if idx < len(emitted) else None
        if g != e:
            diffs.append(LineDiff(idx + 1, g, e))
    return tuple(diffs)
