"""
k-th roots of the center generator c_G.

Deciding whether c_G has a k-th root reduces to a finite search. A root in the
group forces one in the positive monoid; a positive root x has
λ(x) = λ(c_G)/k, and every generator appears in c_G, hence in x. So:

- k must divide λ(c_G),
- L = λ(c_G)/k must be at least the rank,
- and otherwise it is enough to try the positive words of length L with full
  support, one per equality class.
"""

from __future__ import annotations

import dataclasses
import itertools
import json

from .center import center_data, center_generator, monoid_for, _require_family
from .config import CapExceeded, default_caps
from .coxeter import FamilySpec
from .monoid import Word

YES, NO, UNDECIDED = "yes", "no", "undecided-by-cap"


def max_root_exponent(spec: FamilySpec) -> int:
    """Largest k for which c_G has a k-th root."""
    _require_family(spec)
    n = spec.param
    if spec.family == "A":
        return n + 1
    if spec.family == "B":
        return n
    if spec.family == "D":
        return n - 1 if n % 2 == 0 else 2 * n - 2
    return n // 2 if n % 2 == 0 else n


def explicit_root(spec: FamilySpec) -> tuple[Word, int]:
    """(J, e) with J^e = c_G, e being the maximal exponent."""
    return center_data(spec).Jword, max_root_exponent(spec)


@dataclasses.dataclass(frozen=True)
class RootAnswer:
    spec: FamilySpec
    k: int
    decision: str
    method: str
    witness: Word | None = None

    def as_dict(self) -> dict:
        out = {"group": self.spec.render(), "k": self.k, "decision": self.decision, "method": self.method}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _full_support_words(n: int, length: int):
    everything = set(range(1, n + 1))
    for word in itertools.product(range(1, n + 1), repeat=length):
        if set(word) == everything:
            yield word


def _screen(spec: FamilySpec, k: int, cap: int) -> RootAnswer | None:
    """Answer k without searching when possible; None means a search is needed."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _require_family(spec)
    cg, _ = center_generator(spec)
    if k == 1:
        return RootAnswer(spec, k, YES, "formula", cg)
    if len(cg) % k:
        return RootAnswer(spec, k, NO, "divisibility")
    length = len(cg) // k
    if length < spec.rank:
        return RootAnswer(spec, k, NO, "support-prune")
    if length > cap:
        return RootAnswer(spec, k, UNDECIDED, "search")
    return None


def has_kth_root(spec: FamilySpec, k: int, search_cap: int | None = None) -> RootAnswer:
    cap = default_caps().search if search_cap is None else search_cap
    screened = _screen(spec, k, cap)
    if screened is not None:
        return screened
    cg, _ = center_generator(spec)
    length = len(cg) // k
    n = spec.rank

    monoid = monoid_for(spec)
    target = monoid.normal_form(cg)
    tried = set()
    # Lexicographic order, so the first word of each class is its least representative.
    for word in _full_support_words(n, length):
        nf = monoid.normal_form(word)
        if nf in tried:
            continue
        tried.add(nf)
        if monoid.normal_form(word * k) == target:
            return RootAnswer(spec, k, YES, "search", word)
    return RootAnswer(spec, k, NO, "search")


@dataclasses.dataclass(frozen=True)
class RootSpectrum:
    spec: FamilySpec
    members: frozenset[int]
    searchBound: int
    answers: tuple[RootAnswer, ...] = ()

    @property
    def max(self) -> int:
        return max(self.members)

    def as_dict(self) -> dict:
        return {
            "group": self.spec.render(),
            "members": sorted(self.members),
            "max": self.max,
            "searchBound": self.searchBound,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def root_spectrum(spec: FamilySpec, kmax: int | None = None, search_cap: int | None = None) -> RootSpectrum:
    """{k <= kmax : c_G has a k-th root}; kmax defaults to the closed-form maximum."""
    bound = max_root_exponent(spec) if kmax is None else kmax
    cap = default_caps().search if search_cap is None else search_cap
    # fail before any search if some k is out of reach
    undecided = [k for k in range(1, bound + 1) if (a := _screen(spec, k, cap)) and a.decision == UNDECIDED]
    if undecided:
        raise CapExceeded(f"root search for {spec} exceeds the cap at k = {undecided}")
    answers = tuple(has_kth_root(spec, k, cap) for k in range(1, bound + 1))
    members = frozenset(a.k for a in answers if a.decision == YES)
    for k in members:
        for d in range(1, k):
            if k % d == 0 and d not in members:
                raise AssertionError(f"spectrum of {spec} is not divisor-closed: {k} in, {d} out")
    return RootSpectrum(spec, members, bound, answers)
