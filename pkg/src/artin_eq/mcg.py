"""Mapping class groups of closed surfaces, reduced to their maximal finite cyclic order."""

from __future__ import annotations

from .theory import DISTINGUISHED, SAME, EquivalenceVerdict, psi


class GenusError(ValueError):
    pass


def _check(g: int):
    if not isinstance(g, int) or g < 2:
        raise GenusError(f"genus must be an integer >= 2, got {g!r}")


def max_cyclic_order(g: int) -> int:
    """Largest order of a finite cyclic subgroup of Mod(S_g); attained for every g >= 2."""
    _check(g)
    return 4 * g + 2


def distinguish_mcg(g: int, h: int) -> EquivalenceVerdict:
    _check(g)
    _check(h)
    left, right = f"Mod(S_{g})", f"Mod(S_{h})"
    if g == h:
        return EquivalenceVerdict(SAME, left, right)
    n = max_cyclic_order(max(g, h))
    return EquivalenceVerdict(
        DISTINGUISHED, left, right, psi(n), "left" if g > h else "right", "formula",
        (max_cyclic_order(g), max_cyclic_order(h)),
    )
