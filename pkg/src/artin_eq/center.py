"""
Coxeter element words, the fundamental element Δ and the center generator c_G.

With the bipartition J1 ⊔ J2 (each part listed in ascending order), put
J = J1·J2 and let h be the Coxeter number. Then

    Δ = J^(h/2)              if h is even,
    Δ = J^((h-1)/2) · J1     if h is odd,

and the center is generated by Δ for B_n, D_(even), I2(even) and by Δ²
for A_n, D_(odd), I2(odd).

A_1 is degenerate: its group is Z, generated by Δ = x_1, but we follow the
tabulated convention c = Δ² so that λ(c) = k² + k holds at k = 1.
"""

from __future__ import annotations

import dataclasses
import functools

from .coxeter import FamilySpec, bipartition, build_diagram
from .coxgroup import derive_coxeter_number
from .monoid import ArtinMonoid, Word, artin_monoid


class UnsupportedSpec(ValueError):
    """Raised for sporadic types, which have no tabulated center data."""


A1_CAVEAT = "A1 is Z; its full center is generated by x1 = Δ, the table row uses Δ² (λ = 2)"


def _require_family(spec: FamilySpec):
    if spec.is_sporadic:
        raise UnsupportedSpec(f"{spec} is sporadic; only A, B, D and I2 are supported here")


def monoid_for(spec: FamilySpec) -> ArtinMonoid:
    return artin_monoid(build_diagram(spec))


def coxeter_number(spec: FamilySpec) -> int:
    _require_family(spec)
    return derive_coxeter_number(build_diagram(spec))


def coxeter_words(spec: FamilySpec) -> tuple[Word, Word, Word]:
    """The words J1, J2 and J = J1·J2."""
    parts = bipartition(build_diagram(spec))
    j1, j2 = tuple(sorted(parts.J1)), tuple(sorted(parts.J2))
    return j1, j2, j1 + j2


def center_is_delta_squared(spec: FamilySpec) -> bool:
    _require_family(spec)
    if spec.family == "A":
        return True
    if spec.family == "B":
        return False
    return spec.param % 2 == 1


def fundamental_element(spec: FamilySpec) -> Word:
    _require_family(spec)
    j1, _, j = coxeter_words(spec)
    h = coxeter_number(spec)
    if h % 2 == 0:
        return j * (h // 2)
    return j * ((h - 1) // 2) + j1


def center_generator(spec: FamilySpec) -> tuple[Word, bool]:
    """(c_G as a positive word, whether c_G = Δ²)."""
    delta = fundamental_element(spec)
    squared = center_is_delta_squared(spec)
    return (delta * 2 if squared else delta), squared


def table_center_length(spec: FamilySpec) -> int:
    """Closed-form λ(c_G) per family."""
    _require_family(spec)
    k = spec.param
    if spec.family == "A":
        return k * k + k
    if spec.family == "B":
        return k * k
    if spec.family == "D":
        if k % 2:
            q = (k - 1) // 2
            return 8 * q * q + 4 * q
        q = k // 2
        return 4 * q * q - 2 * q
    if k % 2:
        return 2 * k
    return k


def table_coxeter_number(spec: FamilySpec) -> int:
    _require_family(spec)
    k = spec.param
    return {"A": k + 1, "B": 2 * k, "D": 2 * k - 2, "I2": k}[spec.family]


@dataclasses.dataclass(frozen=True)
class CenterData:
    spec: FamilySpec
    h: int
    J1word: Word
    J2word: Word
    Jword: Word
    delta: Word
    cG: Word
    cGIsDeltaSquared: bool

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def generator_label(self) -> str:
        return "Δ²" if self.cGIsDeltaSquared else "Δ"

    @property
    def note(self) -> str | None:
        return A1_CAVEAT if self.spec == FamilySpec("A", 1) else None


@functools.lru_cache(maxsize=None)
def center_data(spec: FamilySpec) -> CenterData:
    j1, j2, j = coxeter_words(spec)
    cg, squared = center_generator(spec)
    return CenterData(
        spec=spec,
        h=coxeter_number(spec),
        J1word=j1,
        J2word=j2,
        Jword=j,
        delta=fundamental_element(spec),
        cG=cg,
        cGIsDeltaSquared=squared,
    )


def check_central(spec: FamilySpec, word) -> bool:
    """Whether x_i·w = w·x_i in the monoid for every generator x_i."""
    monoid = monoid_for(spec)
    word = tuple(word)
    return all(monoid.equal((i,) + word, word + (i,)) for i in range(1, monoid.n + 1))


@dataclasses.dataclass(frozen=True)
class DeltaReport:
    spec: FamilySpec
    delta_squared_is_J_power: bool
    center_generator_central: bool
    delta_case_ok: bool | None    # None when c_G = Δ², where the clause does not apply
    h: int

    @property
    def ok(self) -> bool:
        return self.delta_squared_is_J_power and self.center_generator_central and self.delta_case_ok is not False

    def as_dict(self) -> dict:
        return {
            "group": self.spec.render(),
            "h": self.h,
            "delta_squared_equals_J_h": self.delta_squared_is_J_power,
            "center_generator_central": self.center_generator_central,
            "delta_equals_J_half_h": self.delta_case_ok,
            "ok": self.ok,
        }


def verify_delta_identities(spec: FamilySpec) -> DeltaReport:
    """Check Δ² = J^h, centrality of c_G, and Δ = J^(h/2) with h even when c_G = Δ."""
    data = center_data(spec)
    monoid = monoid_for(spec)
    squared = monoid.equal(data.delta * 2, data.Jword * data.h)
    central = check_central(spec, data.cG)
    if data.cGIsDeltaSquared:
        case = None
    else:
        case = data.h % 2 == 0 and monoid.equal(data.delta, data.Jword * (data.h // 2))
    return DeltaReport(spec, squared, central, case, data.h)
