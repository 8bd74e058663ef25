"""
Positive words, the Artin monoid and the Artin group of a finite-type diagram.

Two independent equality deciders live here:

- :meth:`ArtinMonoid.equal_bfs` explores the whole (finite) class of a word
  under the defining relations. Exponential, capped, but obviously correct.
- :meth:`ArtinMonoid.normal_form` computes the left-greedy Garside form
  Δ^p s_1 ... s_r, where each s_i is a simple element stored as an element of
  the Coxeter group, and adjacent factors satisfy L(s_{i+1}) ⊆ R(s_i).

Group elements are Δ^z times a positive normal form with no Δ factors. Moving
Δ across a letter uses the diagram permutation τ with x_i Δ = Δ x_{τ(i)}.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import deque
from typing import Iterable, Sequence

from .config import CapExceeded, default_caps
from .coxeter import INF, CoxeterMatrix
from .coxgroup import CoxElement, CoxeterGroup, coxeter_group

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Whitespace-separated 1-based generator indices; the empty string is the identity."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    if any(x < 1 for x in letters):
        raise ValueError(f"generator indices are 1-based, got {text!r}")
    return letters


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def lambda_length(word: Sequence[int]) -> int:
    """Image under the homomorphism sending every generator to 1."""
    return len(word)


def support(word: Iterable[int]) -> frozenset[int]:
    return frozenset(word)


def alternating(a: int, b: int, m: int) -> Word:
    """The alternating product ⟨a, b⟩^m of length m starting with a."""
    return tuple(a if j % 2 == 0 else b for j in range(m))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    delta_power: int
    factors: tuple[CoxElement, ...]


@dataclasses.dataclass(frozen=True)
class GroupElement:
    """Δ^delta_exponent · s_1 ⋯ s_r with left-weighted, non-trivial, non-Δ factors."""

    delta_exponent: int
    factors: tuple[CoxElement, ...]


class ArtinMonoid:
    def __init__(self, matrix: CoxeterMatrix, group: CoxeterGroup | None = None):
        self.matrix = matrix
        self.group = group if group is not None else coxeter_group(matrix)
        self.n = matrix.n
        # Defining relations ⟨i,j⟩^m = ⟨j,i⟩^m keyed by their first two letters.
        self._relations: dict[tuple[int, int], tuple[Word, Word]] = {}
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                m = matrix.m(i, j)
                if i != j and m != INF:
                    self._relations[(i, j)] = (alternating(i, j, int(m)), alternating(j, i, int(m)))

    # -- Coxeter-side helpers ---------------------------------------------------

    @functools.cached_property
    def delta(self) -> CoxElement:
        return self.group.longest

    @functools.cached_property
    def delta_word(self) -> Word:
        return self.group.reduced_word(self.delta)

    @functools.cached_property
    def delta_length(self) -> int:
        return len(self.delta_word)

    def simple_word(self, s: CoxElement) -> Word:
        return self.group.reduced_word(s)

    def is_left_weighted(self, a: CoxElement, b: CoxElement) -> bool:
        return self.group.left_descents(b) <= self.group.right_descents(a)

    def _check_letters(self, word: Sequence[int]):
        for x in word:
            if not 1 <= x <= self.n:
                raise IndexError(f"generator index {x} out of range 1..{self.n}")

    # -- BFS decider ------------------------------------------------------------

    def neighbours(self, word: Word) -> Iterable[Word]:
        """Words obtained by one application of a defining relation."""
        for p in range(len(word) - 1):
            rel = self._relations.get((word[p], word[p + 1]))
            if rel is None:
                continue
            lhs, rhs = rel
            if word[p:p + len(lhs)] == lhs:
                yield word[:p] + rhs + word[p + len(lhs):]

    def equivalence_class(self, word: Sequence[int], cap: int | None = None) -> set[Word]:
        word = tuple(word)
        cap = default_caps().bfs if cap is None else cap
        if len(word) > cap:
            raise CapExceeded(f"BFS decider limited to λ <= {cap}, got {len(word)}")
        self._check_letters(word)
        seen = {word}
        queue = deque([word])
        while queue:
            for v in self.neighbours(queue.popleft()):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen

    def equal_bfs(self, w1: Sequence[int], w2: Sequence[int], cap: int | None = None) -> bool:
        w1, w2 = tuple(w1), tuple(w2)
        if len(w1) != len(w2):
            return False
        cap = default_caps().bfs if cap is None else cap
        if len(w1) > cap:
            raise CapExceeded(f"BFS decider limited to λ <= {cap}, got {len(w1)}")
        self._check_letters(w1)
        self._check_letters(w2)
        if w1 == w2:
            return True
        seen = {w1}
        queue = deque([w1])
        while queue:
            for v in self.neighbours(queue.popleft()):
                if v == w2:
                    return True
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return False

    # -- Garside normal form -----------------------------------------------------

    def _push(self, factors: list, s: CoxElement):
        """Right-multiply a left-weighted factor list by a simple element, restoring the form."""
        G = self.group
        factors.append(s)
        j = len(factors) - 2
        while j >= 0:
            w, z = factors[j], factors[j + 1]
            changed = False
            while True:
                moving = G.left_descents(z) - G.right_descents(w)
                if not moving:
                    break
                t = G.gen(min(moving))
                w, z = G.mul(w, t), G.mul(t, z)
                changed = True
            if not changed:
                break
            factors[j], factors[j + 1] = w, z
            j -= 1
        e = G.identity()
        while factors and factors[-1] == e:
            factors.pop()

    def _split_delta(self, factors: list) -> tuple[int, tuple[CoxElement, ...]]:
        p = 0
        while p < len(factors) and factors[p] == self.delta:
            p += 1
        return p, tuple(factors[p:])

    def normal_form(self, word: Sequence[int]) -> NormalForm:
        self._check_letters(word)
        factors: list = []
        for x in word:
            self._push(factors, self.group.gen(x))
        return NormalForm(*self._split_delta(factors))

    def word_of(self, nf: NormalForm) -> Word:
        out = self.delta_word * nf.delta_power
        for s in nf.factors:
            out += self.simple_word(s)
        return out

    def equal(self, w1: Sequence[int], w2: Sequence[int]) -> bool:
        if len(w1) != len(w2):
            return False
        return self.normal_form(w1) == self.normal_form(w2)

    def render(self, nf: NormalForm) -> str:
        body = " ; ".join(format_word(self.simple_word(s)) for s in nf.factors)
        return f"D^{nf.delta_power} | {body}".rstrip()

    # -- Δ-conjugation -----------------------------------------------------------

    @functools.cached_property
    def tau(self) -> tuple[int, ...]:
        """σ with x_i Δ = Δ x_σ(i); ``tau[i-1]`` is σ(i)."""
        sigma = []
        for i in range(1, self.n + 1):
            target = self.normal_form((i,) + self.delta_word)
            for j in range(1, self.n + 1):
                if self.normal_form(self.delta_word + (j,)) == target:
                    sigma.append(j)
                    break
            else:
                raise AssertionError(f"no generator x_j with x_{i}Δ = Δx_j")
        return tuple(sigma)

    def tau_power(self, k: int) -> tuple[int, ...]:
        sigma = list(range(1, self.n + 1))
        step = self.tau if k >= 0 else tuple(self.tau.index(i) + 1 for i in range(1, self.n + 1))
        for _ in range(abs(k)):
            sigma = [step[x - 1] for x in sigma]
        return tuple(sigma)

    # -- group elements ------------------------------------------------------------

    def element(self, word: Sequence[int] = (), delta_exponent: int = 0) -> GroupElement:
        """The group element Δ^delta_exponent · word for a positive word."""
        nf = self.normal_form(word)
        return GroupElement(delta_exponent + nf.delta_power, nf.factors)

    def identity_element(self) -> GroupElement:
        return GroupElement(0, ())

    def delta_element(self, k: int = 1) -> GroupElement:
        return GroupElement(k, ())

    def positive_word(self, g: GroupElement) -> Word:
        if g.delta_exponent < 0:
            raise ValueError("element is not positive")
        return self.word_of(NormalForm(g.delta_exponent, g.factors))

    def mul(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        # Δ^a P · Δ^b Q = Δ^(a+b) τ^b(P) Q
        sigma = self.tau_power(g2.delta_exponent)
        letters = []
        for s in g1.factors:
            letters.extend(sigma[x - 1] for x in self.simple_word(s))
        factors: list = []
        for x in letters:
            self._push(factors, self.group.gen(x))
        for s in g2.factors:
            # each factor of Q enters whole; _push restores left-weightedness
            self._push(factors, s)
        p, rest = self._split_delta(factors)
        return GroupElement(g1.delta_exponent + g2.delta_exponent + p, rest)

    def right_complement(self, s: CoxElement) -> CoxElement:
        """The simple c with s·c = Δ."""
        return self.group.mul(self.group.inv(s), self.delta)

    def inv(self, g: GroupElement) -> GroupElement:
        # s^-1 = c Δ^-1 where s c = Δ
        result = self.identity_element()
        for s in reversed(g.factors):
            c = GroupElement(0, (self.right_complement(s),))
            result = self.mul(self.mul(result, c), self.delta_element(-1))
        return self.mul(result, self.delta_element(-g.delta_exponent))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        if k < 0:
            return self.power(self.inv(g), -k)
        result = self.identity_element()
        for _ in range(k):
            result = self.mul(result, g)
        return result


@functools.lru_cache(maxsize=None)
def artin_monoid(matrix: CoxeterMatrix) -> ArtinMonoid:
    return ArtinMonoid(matrix)


# -- functional surface --------------------------------------------------------


def equal_positive_bfs(matrix: CoxeterMatrix, w1, w2, cap: int | None = None) -> bool:
    return artin_monoid(matrix).equal_bfs(w1, w2, cap)


def normal_form(matrix: CoxeterMatrix, w) -> NormalForm:
    return artin_monoid(matrix).normal_form(w)


def equal_positive(matrix: CoxeterMatrix, w1, w2) -> bool:
    return artin_monoid(matrix).equal(w1, w2)


def tau(matrix: CoxeterMatrix) -> tuple[int, ...]:
    return artin_monoid(matrix).tau


def group_mul(matrix: CoxeterMatrix, g1: GroupElement, g2: GroupElement) -> GroupElement:
    return artin_monoid(matrix).mul(g1, g2)


def group_inv(matrix: CoxeterMatrix, g: GroupElement) -> GroupElement:
    return artin_monoid(matrix).inv(g)


def group_eq(g1: GroupElement, g2: GroupElement) -> bool:
    return g1 == g2
