"""
Exact arithmetic in the finite Coxeter group attached to a diagram.

Each family has a faithful model with hashable element values:

- A_n: permutations of n+1 letters,
- B_n: signed permutations of n letters,
- D_n: signed permutations with an even number of sign changes,
- I2(m): dihedral pairs ``(kind, k)``, kind 0 a rotation, 1 a reflection.

For A, B and D an element ``w`` is a tuple with ``w[i] = ±(j+1)`` when w sends
the basis vector e_i to ±e_j. The simple roots are e_i - e_{i+1} plus e_n (B)
or e_{n-1} + e_n (D); a generator is a right descent of w exactly when w maps
its simple root to a negative root, which makes descent sets O(1).

Any other finite diagram falls back on the geometric (Tits) representation
with floating point entries rounded for hashing.
"""

from __future__ import annotations

import dataclasses
import functools
import json
from collections import deque
from typing import Hashable, Iterable, Sequence

import numpy as np

from .coxeter import INF, CoxeterMatrix, FamilySpec, bipartition, build_diagram, identify_family, validate

CoxElement = Hashable

DEFAULT_GROUP_CAP = 10**5


class UnsupportedDiagram(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    """Enumeration would exceed the configured element cap."""


class CoxeterGroup:
    """Common interface; subclasses supply the model."""

    matrix: CoxeterMatrix

    @property
    def rank(self) -> int:
        return self.matrix.n

    # -- model hooks -------------------------------------------------------

    def identity(self) -> CoxElement:
        raise NotImplementedError

    def gen(self, i: int) -> CoxElement:
        raise NotImplementedError

    def mul(self, a: CoxElement, b: CoxElement) -> CoxElement:
        raise NotImplementedError

    def inv(self, a: CoxElement) -> CoxElement:
        raise NotImplementedError

    def is_right_descent(self, w: CoxElement, i: int) -> bool:
        raise NotImplementedError

    def is_left_descent(self, w: CoxElement, i: int) -> bool:
        return self.is_right_descent(self.inv(w), i)

    # -- derived operations ------------------------------------------------

    def product(self, word: Iterable[int]) -> CoxElement:
        w = self.identity()
        for i in word:
            if not 1 <= i <= self.rank:
                raise IndexError(f"generator index {i} out of range 1..{self.rank}")
            w = self.mul(w, self.gen(i))
        return w

    def right_descents(self, w: CoxElement) -> frozenset[int]:
        return frozenset(i for i in range(1, self.rank + 1) if self.is_right_descent(w, i))

    def left_descents(self, w: CoxElement) -> frozenset[int]:
        return frozenset(i for i in range(1, self.rank + 1) if self.is_left_descent(w, i))

    def descents(self, w: CoxElement, side: str = "right") -> frozenset[int]:
        if side == "left":
            return self.left_descents(w)
        if side == "right":
            return self.right_descents(w)
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def reduced_word(self, w: CoxElement) -> tuple[int, ...]:
        """Reduced word by stripping the smallest right descent until the identity remains."""
        letters = []
        e = self.identity()
        while w != e:
            for i in range(1, self.rank + 1):
                if self.is_right_descent(w, i):
                    letters.append(i)
                    w = self.mul(w, self.gen(i))
                    break
            else:  # pragma: no cover - a non-identity element always has a descent
                raise AssertionError("no descent found for a non-identity element")
        return tuple(reversed(letters))

    def length(self, w: CoxElement) -> int:
        return len(self.reduced_word(w))

    @functools.cached_property
    def longest(self) -> CoxElement:
        """The unique element whose right descent set is everything."""
        w = self.identity()
        while True:
            for i in range(1, self.rank + 1):
                if not self.is_right_descent(w, i):
                    w = self.mul(w, self.gen(i))
                    break
            else:
                return w

    def order(self, w: CoxElement) -> int:
        e = self.identity()
        x, k = w, 1
        while x != e:
            x = self.mul(x, w)
            k += 1
        return k

    def coxeter_element_word(self) -> tuple[int, ...]:
        parts = bipartition(self.matrix)
        return tuple(sorted(parts.J1)) + tuple(sorted(parts.J2))

    def coxeter_number(self) -> int:
        return self.order(self.product(self.coxeter_element_word()))

    def enumerate(self, cap: int = DEFAULT_GROUP_CAP) -> "GroupTable":
        return enumerate_elements(self, cap)


class SignedPermutationGroup(CoxeterGroup):
    """Shared machinery for A, B and D; ``roots[i]`` lists the (index, coefficient) pairs of α_i."""

    def __init__(self, matrix: CoxeterMatrix, degree: int, gens: Sequence[tuple[int, ...]], roots):
        self.matrix = matrix
        self.degree = degree
        self._gens = [tuple(g) for g in gens]
        self._roots = roots

    def identity(self):
        return tuple(range(1, self.degree + 1))

    def gen(self, i):
        return self._gens[i - 1]

    def mul(self, a, b):
        # (a*b)(e_i) = a(b(e_i))
        return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)

    def inv(self, a):
        out = [0] * self.degree
        for i, x in enumerate(a, start=1):
            if x > 0:
                out[x - 1] = i
            else:
                out[-x - 1] = -i
        return tuple(out)

    def _maps_negative(self, w, root) -> bool:
        image = []
        for idx, coef in root:
            x = w[idx]
            image.append((abs(x) - 1, coef if x > 0 else -coef))
        # A root is positive iff its lowest-index nonzero coordinate is positive.
        image.sort()
        return image[0][1] < 0

    def is_right_descent(self, w, i):
        return self._maps_negative(w, self._roots[i - 1])

    def is_left_descent(self, w, i):
        return self._maps_negative(self.inv(w), self._roots[i - 1])


def _swap(degree: int, i: int) -> tuple[int, ...]:
    """Transposition of positions i and i+1 (0-based i)."""
    w = list(range(1, degree + 1))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def symmetric_model(matrix: CoxeterMatrix, n: int) -> SignedPermutationGroup:
    gens = [_swap(n + 1, i) for i in range(n)]
    roots = [((i, 1), (i + 1, -1)) for i in range(n)]
    return SignedPermutationGroup(matrix, n + 1, gens, roots)


def hyperoctahedral_model(matrix: CoxeterMatrix, n: int) -> SignedPermutationGroup:
    gens = [_swap(n, i) for i in range(n - 1)]
    last = list(range(1, n + 1))
    last[n - 1] = -n
    gens.append(tuple(last))
    roots = [((i, 1), (i + 1, -1)) for i in range(n - 1)] + [((n - 1, 1),)]
    return SignedPermutationGroup(matrix, n, gens, roots)


def even_signed_model(matrix: CoxeterMatrix, n: int) -> SignedPermutationGroup:
    gens = [_swap(n, i) for i in range(n - 1)]
    last = list(range(1, n + 1))
    last[n - 2], last[n - 1] = -n, -(n - 1)
    gens.append(tuple(last))
    roots = [((i, 1), (i + 1, -1)) for i in range(n - 1)] + [((n - 2, 1), (n - 1, 1))]
    return SignedPermutationGroup(matrix, n, gens, roots)


class DihedralGroup(CoxeterGroup):
    """Dihedral group of order 2m: rotations ``(0, k)`` and reflections ``(1, k)``.

    With reflections t_k, rotations r_k and indices mod m:
    r_a r_b = r_{a+b}, r_a t_b = t_{a+b}, t_a r_b = t_{a-b}, t_a t_b = r_{a-b}.
    Generator 1 is t_0 and generator 2 is t_1, so x_1 x_2 = r_{-1} has order m.
    """

    def __init__(self, matrix: CoxeterMatrix, m: int):
        self.matrix = matrix
        self.m = m
        # Every element is an alternating word starting with 1 or 2, of length <= m.
        self._info: dict[tuple[int, int], tuple[frozenset[int], frozenset[int]]] = {}
        for start, other in ((1, 2), (2, 1)):
            for length in range(m + 1):
                word = [start if j % 2 == 0 else other for j in range(length)]
                w = self.product(word)
                if length == 0:
                    left = right = frozenset()
                elif length == m:
                    left = right = frozenset({1, 2})
                else:
                    left, right = frozenset({word[0]}), frozenset({word[-1]})
                self._info.setdefault(w, (left, right))

    def identity(self):
        return (0, 0)

    def gen(self, i):
        return (1, 0) if i == 1 else (1, 1)

    def mul(self, a, b):
        ka, x = a
        kb, y = b
        m = self.m
        if ka == 0:
            return (kb, (x + y) % m)
        if kb == 0:
            return (1, (x - y) % m)
        return (0, (x - y) % m)

    def inv(self, a):
        kind, x = a
        return a if kind == 1 else (0, (-x) % self.m)

    def is_right_descent(self, w, i):
        return i in self._info[w][1]

    def is_left_descent(self, w, i):
        return i in self._info[w][0]


class GeometricElement:
    """Matrix in the geometric representation, compared through a rounded key."""

    __slots__ = ("mat", "key")

    def __init__(self, mat):
        self.mat = mat
        self.key = tuple((np.round(mat, 6) + 0.0).ravel().tolist())

    def __eq__(self, other):
        return isinstance(other, GeometricElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GeometricElement({self.key})"


class GeometricGroup(CoxeterGroup):
    """Tits representation for arbitrary finite diagrams (sporadic types and the like)."""

    def __init__(self, matrix: CoxeterMatrix):
        report = validate(matrix)
        if not report.valid:
            raise UnsupportedDiagram("invalid Coxeter matrix: " + "; ".join(report.violations))
        if not report.finite_entries:
            raise UnsupportedDiagram("infinite labels give an infinite Coxeter group")
        self.matrix = matrix
        n = matrix.n
        form = np.array(
            [[-np.cos(np.pi / matrix.m(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
        )
        self._n = n
        self._gens = []
        for i in range(n):
            s = np.eye(n)
            # s_i(v) = v - 2 B(α_i, v) α_i, acting on coordinates in the simple-root basis.
            s[i, :] -= 2 * form[i, :]
            self._gens.append(GeometricElement(s))

    def identity(self):
        return GeometricElement(np.eye(self._n))

    def gen(self, i):
        return self._gens[i - 1]

    def mul(self, a, b):
        return GeometricElement(a.mat @ b.mat)

    def inv(self, a):
        return GeometricElement(np.linalg.inv(a.mat))

    def is_right_descent(self, w, i):
        return bool(np.any(w.mat[:, i - 1] < -1e-6))


@functools.lru_cache(maxsize=None)
def group_for_spec(spec: FamilySpec) -> CoxeterGroup:
    matrix = build_diagram(spec)
    if spec.family == "A":
        return symmetric_model(matrix, spec.param)
    if spec.family == "B":
        return hyperoctahedral_model(matrix, spec.param)
    if spec.family == "D":
        return even_signed_model(matrix, spec.param)
    if spec.family == "I2":
        return DihedralGroup(matrix, spec.param)
    return GeometricGroup(matrix)


@functools.lru_cache(maxsize=None)
def coxeter_group(matrix: CoxeterMatrix) -> CoxeterGroup:
    """Faithful model for ``matrix``; family diagrams get their combinatorial model."""
    spec = identify_family(matrix)
    if spec is not None:
        return group_for_spec(spec)
    return GeometricGroup(matrix)


# -- functional surface --------------------------------------------------------


def cox_product(matrix: CoxeterMatrix, word: Iterable[int]) -> CoxElement:
    return coxeter_group(matrix).product(word)


def cox_length(matrix: CoxeterMatrix, e: CoxElement) -> int:
    return coxeter_group(matrix).length(e)


def descents(matrix: CoxeterMatrix, e: CoxElement, side: str = "right") -> frozenset[int]:
    return coxeter_group(matrix).descents(e, side)


def element_order(matrix: CoxeterMatrix, e: CoxElement) -> int:
    return coxeter_group(matrix).order(e)


def derive_coxeter_number(matrix: CoxeterMatrix) -> int:
    """Order of the Coxeter element J1·J2 (bipartition order)."""
    return coxeter_group(matrix).coxeter_number()


def enumerate_group(matrix: CoxeterMatrix, cap: int = DEFAULT_GROUP_CAP) -> "GroupTable":
    return coxeter_group(matrix).enumerate(cap)


# -- group tables --------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class GroupTable:
    """Multiplication table of a finite group; index 0 is the identity."""

    order: int
    elements: tuple
    products: tuple[tuple[int, ...], ...]

    @functools.cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.products)

    def mul(self, a: int, b: int) -> int:
        return self.products[a][b]

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.products[x][a]
            k += 1
        return k

    def to_json(self) -> str:
        flat = [x for row in self.products for x in row]
        return json.dumps({"order": self.order, "products": flat})

    @classmethod
    def from_json(cls, text: str) -> "GroupTable":
        data = json.loads(text)
        order = int(data["order"])
        flat = data["products"]
        if len(flat) != order * order:
            raise ValueError(f"expected {order * order} products, got {len(flat)}")
        rows = tuple(tuple(flat[r * order:(r + 1) * order]) for r in range(order))
        return cls(order, tuple(range(order)), rows)

    @classmethod
    def trivial(cls) -> "GroupTable":
        return cls(1, (0,), ((0,),))


def enumerate_elements(group: CoxeterGroup, cap: int = DEFAULT_GROUP_CAP) -> GroupTable:
    """Close the generators under right multiplication, then tabulate all products."""
    e = group.identity()
    index = {e: 0}
    elements = [e]
    # right[x][i] = index of elements[x] * s_i
    right: list[list[int]] = []
    gens = [group.gen(i) for i in range(1, group.rank + 1)]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = []
        for g in gens:
            y = group.mul(elements[x], g)
            if y not in index:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group has more than {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(index[y])
            row.append(index[y])
        right.append(row)
    # Each element is reached by a BFS-tree word; products follow that word through `right`.
    words: list[tuple[int, ...]] = [()] * len(elements)
    seen = [False] * len(elements)
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for i, y in enumerate(right[x]):
            if not seen[y]:
                seen[y] = True
                words[y] = words[x] + (i,)
                queue.append(y)
    products = []
    for a in range(len(elements)):
        row = []
        for b in range(len(elements)):
            x = a
            for i in words[b]:
                x = right[x][i]
            row.append(x)
        products.append(tuple(row))
    return GroupTable(len(elements), tuple(elements), tuple(products))
