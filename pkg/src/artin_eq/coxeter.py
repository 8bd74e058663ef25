"""
Coxeter diagrams for the irreducible finite-type families.

Generators are numbered 1..n. The conventions fix concrete words for the
Coxeter element and the Garside element downstream:

- A_n: a path 1 - 2 - ... - n, every label 3.
- B_n: a path with labels 3 except m(n-1, n) = 4.
- D_n: a path 1 - ... - (n-2), then the fork (n-2, n-1) and (n-2, n).
- I2(m): two vertices joined by an edge labelled m.

Known small-rank coincidences (I2(3) ~ A_2, I2(4) ~ B_2, D_3 ~ A_3) are
not modelled; specs are compared by name only.
"""

from __future__ import annotations

import dataclasses
import math
import re
from collections import deque
from typing import Iterable, Sequence

INF = math.inf

FAMILIES = ("A", "B", "D", "I2")
SPORADIC = ("E6", "E7", "E8", "F4", "H3", "H4")

_MIN_PARAM = {"A": 1, "B": 2, "D": 4, "I2": 3}


class SpecError(ValueError):
    """Malformed or out-of-range group specification."""


class RangeError(SpecError):
    """The family parameter lies outside the allowed range."""


class DiagramError(ValueError):
    """The diagram does not satisfy a precondition (tree, connected, ...)."""


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    family: str
    param: int | None = None

    def __post_init__(self):
        if self.family in SPORADIC:
            if self.param is not None:
                raise RangeError(f"sporadic type {self.family} takes no parameter")
            return
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if not isinstance(self.param, int) or self.param < _MIN_PARAM[self.family]:
            raise RangeError(
                f"{self.family} requires parameter >= {_MIN_PARAM[self.family]}, got {self.param}"
            )

    @property
    def is_sporadic(self) -> bool:
        return self.family in SPORADIC

    @property
    def rank(self) -> int:
        if self.family == "I2":
            return 2
        if self.is_sporadic:
            return int(self.family[1])
        return self.param

    def render(self) -> str:
        if self.family == "I2":
            return f"I2({self.param})"
        if self.is_sporadic:
            return self.family
        return f"{self.family}{self.param}"

    def __str__(self) -> str:
        return self.render()


_SPEC_RE = re.compile(r"^\s*(?:([ABD])\s*(\d+)|I2\s*\(\s*(\d+)\s*\))\s*$", re.IGNORECASE)
_BRAID_RE = re.compile(r"^\s*braid\s*:\s*(\d+)\s*$", re.IGNORECASE)


def parse_group_spec(text: str) -> FamilySpec:
    """Parse ``A3``, ``b 4``, ``I2(7)`` and the like (case-insensitive)."""
    if not text or not text.strip():
        raise SpecError("empty group specification")
    match = _SPEC_RE.match(text)
    if match is None:
        raise SpecError(f"cannot parse group specification {text!r}")
    family, param, dihedral = match.groups()
    if dihedral is not None:
        return FamilySpec("I2", int(dihedral))
    return FamilySpec(family.upper(), int(param))


def parse_group_arg(text: str) -> tuple[FamilySpec, str]:
    """Like :func:`parse_group_spec`, also accepting ``braid:K`` for A_{K-1}.

    Returns the FamilySpec and a display label carrying both names for braid aliases.
    """
    match = _BRAID_RE.match(text or "")
    if match is not None:
        strands = int(match.group(1))
        if strands < 2:
            raise RangeError(f"braid groups need at least 2 strands, got {strands}")
        spec = FamilySpec("A", strands - 1)
        return spec, f"{spec.render()} (braid group on {strands} strands)"
    spec = parse_group_spec(text)
    return spec, spec.render()


@dataclasses.dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric Coxeter matrix; ``entries[i][j]`` is m_{i+1, j+1}, ``INF`` for infinity."""

    entries: tuple[tuple[float, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]]) -> "CoxeterMatrix":
        return cls(tuple(tuple(int(x) if x != INF else INF for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> float:
        """Entry m_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if self.m(i, j) >= 3
        ]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if j != i and self.m(i, j) >= 3]


def _path_matrix(n: int, labels: dict[tuple[int, int], int]) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), m in labels.items():
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = m
    return CoxeterMatrix.from_rows(rows)


# Sporadic diagrams in Bourbaki numbering; labels other than 3 are explicit.
_SPORADIC_EDGES = {
    "E6": {(1, 3): 3, (3, 4): 3, (4, 5): 3, (5, 6): 3, (2, 4): 3},
    "E7": {(1, 3): 3, (3, 4): 3, (4, 5): 3, (5, 6): 3, (6, 7): 3, (2, 4): 3},
    "E8": {(1, 3): 3, (3, 4): 3, (4, 5): 3, (5, 6): 3, (6, 7): 3, (7, 8): 3, (2, 4): 3},
    "F4": {(1, 2): 3, (2, 3): 4, (3, 4): 3},
    "H3": {(1, 2): 5, (2, 3): 3},
    "H4": {(1, 2): 5, (2, 3): 3, (3, 4): 3},
}


def build_diagram(spec: FamilySpec) -> CoxeterMatrix:
    n = spec.rank
    if spec.is_sporadic:
        return _path_matrix(n, _SPORADIC_EDGES[spec.family])
    if spec.family == "I2":
        return _path_matrix(2, {(1, 2): spec.param})
    labels = {(i, i + 1): 3 for i in range(1, n)}
    if spec.family == "B":
        labels[(n - 1, n)] = 4
    elif spec.family == "D":
        del labels[(n - 1, n)]
        labels[(n - 2, n)] = 3
    return _path_matrix(n, labels)


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]
    connected: bool
    tree: bool
    finite_entries: bool

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def irreducible(self) -> bool:
        return self.valid and self.connected

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "irreducible": self.irreducible,
            "connected": self.connected,
            "tree": self.tree,
            "finite_entries": self.finite_entries,
            "violations": list(self.violations),
        }


def validate(matrix: CoxeterMatrix) -> ValidationReport:
    """Collect every violated invariant; diagnostics are returned, never raised."""
    violations = []
    n = matrix.n
    if n == 0:
        violations.append("matrix is empty")
    for i, row in enumerate(matrix.entries, start=1):
        if len(row) != n:
            violations.append(f"row {i} has {len(row)} entries, expected {n}")
    if violations:
        return ValidationReport(tuple(violations), False, False, False)

    for i in range(1, n + 1):
        if matrix.m(i, i) != 1:
            violations.append(f"m[{i},{i}] = {matrix.m(i, i)}, expected 1")
        for j in range(i + 1, n + 1):
            if matrix.m(i, j) != matrix.m(j, i):
                violations.append(f"m[{i},{j}] != m[{j},{i}]")
            if matrix.m(i, j) < 2:
                violations.append(f"m[{i},{j}] = {matrix.m(i, j)}, expected >= 2")

    finite = all(x != INF for row in matrix.entries for x in row)
    seen = {1}
    queue = deque([1])
    while queue:
        i = queue.popleft()
        for j in matrix.neighbours(i):
            if j not in seen:
                seen.add(j)
                queue.append(j)
    connected = len(seen) == n
    tree = connected and len(matrix.edges()) == n - 1
    return ValidationReport(tuple(violations), connected, tree, finite)


@dataclasses.dataclass(frozen=True)
class Bipartition:
    J1: frozenset[int]
    J2: frozenset[int]


def bipartition(matrix: CoxeterMatrix) -> Bipartition:
    """2-colour the tree diagram, generator 1 going to J1."""
    report = validate(matrix)
    if not report.valid:
        raise DiagramError("invalid Coxeter matrix: " + "; ".join(report.violations))
    if not report.tree:
        raise DiagramError("bipartition needs a connected tree diagram")
    colour = {1: 0}
    queue = deque([1])
    while queue:
        i = queue.popleft()
        for j in matrix.neighbours(i):
            if j not in colour:
                colour[j] = 1 - colour[i]
                queue.append(j)
    return Bipartition(
        frozenset(i for i, c in colour.items() if c == 0),
        frozenset(i for i, c in colour.items() if c == 1),
    )


def read_matrix_text(text: str) -> CoxeterMatrix:
    """Parse the matrix file format: ``n`` then n rows of n entries (integers or ``inf``)."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise SpecError("empty matrix file")
    try:
        (n,) = (int(tok) for tok in lines[0])
    except ValueError:
        raise SpecError("first line must be a single integer n") from None
    if n < 1:
        raise SpecError(f"matrix size must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise SpecError(f"expected {n} rows, found {len(rows)}")
    parsed = []
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise SpecError(f"row {r} has {len(row)} entries, expected {n}")
        values = []
        for tok in row:
            if tok.lower() in ("inf", "infinity", "∞"):
                values.append(INF)
                continue
            try:
                value = int(tok)
            except ValueError:
                raise SpecError(f"row {r}: bad entry {tok!r}") from None
            if value < 1:
                raise SpecError(f"row {r}: entries must be positive, got {value}")
            values.append(value)
        parsed.append(values)
    return CoxeterMatrix.from_rows(parsed)


def identify_family(matrix: CoxeterMatrix) -> FamilySpec | None:
    """Return the family spec whose standard diagram equals ``matrix`` exactly, if any."""
    n = matrix.n
    candidates = []
    if n >= 1:
        candidates.append(FamilySpec("A", n))
    if n >= 2:
        candidates.append(FamilySpec("B", n))
    if n >= 4:
        candidates.append(FamilySpec("D", n))
    if n == 2 and matrix.m(1, 2) != INF and matrix.m(1, 2) >= 3:
        candidates.append(FamilySpec("I2", int(matrix.m(1, 2))))
    for name in SPORADIC:
        if int(name[1]) == n:
            candidates.append(FamilySpec(name))
    for spec in candidates:
        if build_diagram(spec) == matrix:
            return spec
    return None
