"""
Prenex first-order sentences in the language of groups and what they separate.

Atoms are equations between products of variables; :meth:`Eq.relator`
rewrites ``u = v`` into the product form ``x1^e1 ⋯ xn^en = 1`` with every
exponent ±1. Two sentence families matter here:

- ``phi(k)``: ∀x.∃y.∀z.(¬(xy = yx) ∨ (x = y^k)): central elements have k-th roots,
- ``psi(n)``: ∃x.((x^n = 1) ∧ (x^1 ≠ 1) ∧ ⋯ ∧ (x^(n-1) ≠ 1)): an element of order n.

In ``phi`` the commutation test is on y: a non-central x is satisfied by any y
not commuting with it, a central x needs y with y^k = x. The form with the
test on the universally quantified z (``phi_literal``) is satisfied at z = 1
only by x = y^k, so it says that *every* element is a k-th power.

On an Artin group of finite type the center is infinite cyclic, generated by
c_G, so phi(k) holds exactly when c_G has a k-th root: if y^k = c_G then
(y^m)^k = c_G^m for every integer m.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Union

from .config import CapExceeded, default_caps
from .coxeter import FamilySpec
from .coxgroup import GroupTable
from .roots import NO, UNDECIDED, YES, has_kth_root, max_root_exponent, root_spectrum

FORALL, EXISTS = "forall", "exists"

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


@dataclasses.dataclass(frozen=True)
class Product:
    """A product of variables, each to the power ±1; empty means 1."""

    letters: tuple[tuple[str, int], ...] = ()

    def expand(self) -> tuple[tuple[str, int], ...]:
        return self.letters

    def render(self, unicode: bool = True) -> str:
        if not self.letters:
            return "1"
        inv = "⁻¹" if unicode else "^-1"
        return "".join(v if e == 1 else v + inv for v, e in self.letters)


@dataclasses.dataclass(frozen=True)
class Power:
    """``var`` raised to a non-zero integer power; always printed with its exponent."""

    var: str
    exponent: int

    def expand(self) -> tuple[tuple[str, int], ...]:
        sign = 1 if self.exponent > 0 else -1
        return ((self.var, sign),) * abs(self.exponent)

    def render(self, unicode: bool = True) -> str:
        if unicode:
            return self.var + str(self.exponent).translate(_SUPERSCRIPT)
        return f"{self.var}^{self.exponent}"


Term = Union[Product, Power]
ONE = Product()


def _invert(letters):
    return tuple((v, -e) for v, e in reversed(letters))


@dataclasses.dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term = ONE

    def relator(self) -> tuple[tuple[str, int], ...]:
        """The atomic form: lhs·rhs⁻¹ = 1 as a sequence of (variable, ±1)."""
        return self.lhs.expand() + _invert(self.rhs.expand())

    def variables(self) -> set[str]:
        return {v for v, _ in self.relator()}


@dataclasses.dataclass(frozen=True)
class Neq:
    """A negated atom written with ≠."""

    atom: Eq

    def variables(self):
        return self.atom.variables()


@dataclasses.dataclass(frozen=True)
class Not:
    child: "Formula"

    def variables(self):
        return self.child.variables()


@dataclasses.dataclass(frozen=True)
class And:
    children: tuple["Formula", ...]

    def variables(self):
        return set().union(*(c.variables() for c in self.children))


@dataclasses.dataclass(frozen=True)
class Or:
    children: tuple["Formula", ...]

    def variables(self):
        return set().union(*(c.variables() for c in self.children))


Formula = Union[Eq, Neq, Not, And, Or]


def _render(f: Formula, unicode: bool) -> str:
    if isinstance(f, Eq):
        return f"({f.lhs.render(unicode)} = {f.rhs.render(unicode)})"
    if isinstance(f, Neq):
        ne = "≠" if unicode else "!="
        return f"({f.atom.lhs.render(unicode)} {ne} {f.atom.rhs.render(unicode)})"
    if isinstance(f, Not):
        inner = _render(f.child, unicode)
        if not inner.startswith("("):
            inner = f"({inner})"
        return ("¬" if unicode else "~") + inner
    joiner = {And: (" ∧ ", " & "), Or: (" ∨ ", " | ")}[type(f)][0 if unicode else 1]
    parts = [_render(c, unicode) for c in f.children]
    return joiner.join(parts) if len(parts) != 1 else parts[0]


def _is_compound(f: Formula) -> bool:
    return isinstance(f, (And, Or)) and len(f.children) > 1


@dataclasses.dataclass(frozen=True)
class Sentence:
    prefix: tuple[tuple[str, str], ...]
    matrix: Formula
    name: str = ""

    def __post_init__(self):
        bound = [v for _, v in self.prefix]
        if len(set(bound)) != len(bound):
            raise ValueError("a variable is quantified twice")
        free = self.matrix.variables() - set(bound)
        if free:
            raise ValueError(f"free variables in sentence: {sorted(free)}")

    def render(self, unicode: bool = True) -> str:
        marks = {FORALL: "∀", EXISTS: "∃"} if unicode else {FORALL: "A", EXISTS: "E"}
        head = "".join(f"{marks[q]}{v}." for q, v in self.prefix)
        body = _render(self.matrix, unicode)
        if _is_compound(self.matrix):
            body = f"({body})"
        return head + body

    def __str__(self) -> str:
        return self.render()


def _commutes(a: str, b: str) -> Eq:
    return Eq(Product(((a, 1), (b, 1))), Product(((b, 1), (a, 1))))


def _root_sentence(k: int, witness: str, name: str) -> Sentence:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    root = Eq(Product((("x", 1),)), Power("y", k))
    matrix = Or((Not(_commutes("x", witness)), root))
    return Sentence(((FORALL, "x"), (EXISTS, "y"), (FORALL, "z")), matrix, name)


def phi(k: int) -> Sentence:
    """Every central element is a k-th power (prefix ∀∃∀, z vacuous)."""
    return _root_sentence(k, "y", f"Phi_{k}")


def phi_literal(k: int) -> Sentence:
    """∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y^k)); equivalent to every element being a k-th power."""
    return _root_sentence(k, "z", f"PhiLiteral_{k}")


def psi(n: int) -> Sentence:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    parts = [Eq(Power("x", n))] + [Neq(Eq(Power("x", k))) for k in range(1, n)]
    matrix = And(tuple(parts)) if len(parts) > 1 else parts[0]
    return Sentence(((EXISTS, "x"),), matrix, f"Psi_{n}")


def is_kahr(s: Sentence) -> bool:
    return tuple(q for q, _ in s.prefix) == (FORALL, EXISTS, FORALL)


# -- finite models ---------------------------------------------------------------


def _holds(f: Formula, env: dict[str, int], table: GroupTable) -> bool:
    if isinstance(f, Eq):
        inverses = table.inverses
        x = 0
        for v, e in f.relator():
            g = env[v]
            x = table.products[x][g if e > 0 else inverses[g]]
        return x == 0
    if isinstance(f, Neq):
        return not _holds(f.atom, env, table)
    if isinstance(f, Not):
        return not _holds(f.child, env, table)
    if isinstance(f, And):
        return all(_holds(c, env, table) for c in f.children)
    return any(_holds(c, env, table) for c in f.children)


def eval_on_finite_group(s: Sentence, table: GroupTable, cap: int | None = None) -> bool:
    """Truth value of ``s`` in the finite group by exhaustive quantifier expansion."""
    cap = default_caps().assign if cap is None else cap
    if table.order ** len(s.prefix) > cap:
        raise CapExceeded(
            f"{table.order}^{len(s.prefix)} assignments exceed the cap of {cap}"
        )
    env: dict[str, int] = {}

    def expand(depth: int) -> bool:
        if depth == len(s.prefix):
            return _holds(s.matrix, env, table)
        quantifier, var = s.prefix[depth]
        test = all if quantifier == FORALL else any

        def branch(g):
            env[var] = g
            return expand(depth + 1)

        return test(branch(g) for g in range(table.order))

    return expand(0)


# -- Artin groups ------------------------------------------------------------------

PHI_REDUCTION = (
    "the center is infinite cyclic generated by c_G; a k-th root y of c_G gives "
    "(y^m)^k = c_G^m for all integers m, so phi(k) holds iff c_G has a k-th root"
)


def holds_phi(spec: FamilySpec, k: int) -> bool:
    answer = has_kth_root(spec, k)
    if answer.decision == UNDECIDED:
        raise CapExceeded(f"cannot decide whether c_G of {spec} has a {k}-th root within the search cap")
    return answer.decision == YES


SAME, DISTINGUISHED, UNKNOWN = "SameSpec", "Distinguished", "Unknown"


@dataclasses.dataclass(frozen=True)
class EquivalenceVerdict:
    kind: str
    left: str
    right: str
    sentence: Sentence | None = None
    holdsIn: str | None = None          # "left" or "right"
    basis: str | None = None            # "formula" or "search"
    exponents: tuple[int, int] | None = None

    def as_dict(self, unicode: bool = True) -> dict:
        out = {"kind": self.kind, "groups": [self.left, self.right]}
        if self.sentence is not None:
            out["sentence"] = self.sentence.render(unicode)
            out["sentenceName"] = self.sentence.name
        if self.holdsIn is not None:
            out["holdsIn"] = self.holdsIn
        out["basis"] = self.basis
        if self.exponents is not None:
            out["exponents"] = list(self.exponents)
        return out

    def to_json(self, unicode: bool = True) -> str:
        return json.dumps(self.as_dict(unicode), ensure_ascii=False)


def distinguish(s1: FamilySpec, s2: FamilySpec) -> EquivalenceVerdict:
    left, right = s1.render(), s2.render()
    if s1 == s2:
        return EquivalenceVerdict(SAME, left, right)
    k1, k2 = max_root_exponent(s1), max_root_exponent(s2)
    if k1 != k2:
        k = max(k1, k2)
        return EquivalenceVerdict(
            DISTINGUISHED, left, right, phi(k), "left" if k1 > k2 else "right", "formula", (k1, k2)
        )
    spec1, spec2 = root_spectrum(s1, k1), root_spectrum(s2, k2)
    separating = sorted(spec1.members ^ spec2.members)
    if not separating:
        return EquivalenceVerdict(UNKNOWN, left, right, basis="search", exponents=(k1, k2))
    k = separating[0]
    side = "left" if k in spec1.members else "right"
    return EquivalenceVerdict(DISTINGUISHED, left, right, phi(k), side, "search", (k1, k2))
