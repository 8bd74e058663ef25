import itertools
import json

import pytest

from artin_eq.config import CapExceeded
from artin_eq.coxeter import FamilySpec, build_diagram
from artin_eq.coxgroup import GroupTable, enumerate_group
from artin_eq.roots import max_root_exponent
from artin_eq.theory import (
    DISTINGUISHED,
    EXISTS,
    FORALL,
    SAME,
    UNKNOWN,
    And,
    Eq,
    Neq,
    Not,
    Or,
    Power,
    Product,
    Sentence,
    distinguish,
    eval_on_finite_group,
    holds_phi,
    is_kahr,
    phi,
    phi_literal,
    psi,
)


def table_of(family, param=None):
    return enumerate_group(build_diagram(FamilySpec(family, param)))


def central_roots_oracle(table: GroupTable, k: int) -> bool:
    """Every central element is a k-th power, by direct search."""
    n = table.order
    center = [a for a in range(n) if all(table.mul(a, b) == table.mul(b, a) for b in range(n))]

    def power(y):
        x = 0
        for _ in range(k):
            x = table.mul(x, y)
        return x

    powers = {power(y) for y in range(n)}
    return all(c in powers for c in center)


def all_powers_oracle(table: GroupTable, k: int) -> bool:
    n = table.order
    powers = set()
    for y in range(n):
        x = 0
        for _ in range(k):
            x = table.mul(x, y)
        powers.add(x)
    return len(powers) == n


# -- construction and printing -----------------------------------------------------


def test_phi_rendering():
    assert phi(2).render() == "∀x.∃y.∀z.(¬(xy = yx) ∨ (x = y²))"
    assert phi(2).render(unicode=False) == "Ax.Ey.Az.(~(xy = yx) | (x = y^2))"
    assert phi(12).render() == "∀x.∃y.∀z.(¬(xy = yx) ∨ (x = y¹²))"
    assert phi_literal(2).render() == "∀x.∃y.∀z.(¬(xz = zx) ∨ (x = y²))"
    assert phi(3).name == "Phi_3"


def test_psi_rendering():
    assert psi(3).render() == "∃x.((x³ = 1) ∧ (x¹ ≠ 1) ∧ (x² ≠ 1))"
    assert psi(3).render(unicode=False) == "Ex.((x^3 = 1) & (x^1 != 1) & (x^2 != 1))"
    assert psi(1).render() == "∃x.(x¹ = 1)"
    assert psi(14).name == "Psi_14"


def test_atoms_are_signed_products():
    atom = Eq(Product((("x", 1), ("y", 1))), Product((("y", 1), ("x", 1))))
    assert atom.relator() == (("x", 1), ("y", 1), ("x", -1), ("y", -1))
    assert Eq(Product((("x", 1),)), Power("y", 3)).relator() == (("x", 1),) + (("y", -1),) * 3
    assert Eq(Power("x", -2)).relator() == (("x", -1), ("x", -1))


def test_sentence_validation():
    with pytest.raises(ValueError):
        Sentence(((FORALL, "x"),), Eq(Power("y", 2)))
    with pytest.raises(ValueError):
        Sentence(((FORALL, "x"), (EXISTS, "x")), Eq(Power("x", 2)))
    with pytest.raises(ValueError):
        phi(0)
    with pytest.raises(ValueError):
        psi(0)


def test_is_kahr():
    assert is_kahr(phi(5))
    assert is_kahr(phi_literal(5))
    assert not is_kahr(psi(4))
    assert not is_kahr(Sentence(((FORALL, "x"), (FORALL, "y")), Eq(Power("x", 1), Power("y", 1))))


# -- finite models -----------------------------------------------------------------


def test_psi_on_s3():
    s3 = table_of("A", 2)
    assert s3.order == 6
    assert eval_on_finite_group(psi(3), s3)
    assert eval_on_finite_group(psi(2), s3)
    assert not eval_on_finite_group(psi(4), s3)
    assert not eval_on_finite_group(psi(6), s3)


def test_psi_on_trivial_group():
    trivial = GroupTable.trivial()
    assert eval_on_finite_group(psi(1), trivial)
    assert not eval_on_finite_group(psi(2), trivial)
    assert eval_on_finite_group(phi(7), trivial)


@pytest.mark.parametrize("m", range(3, 9))
def test_psi_on_dihedral(m):
    table = table_of("I2", m)
    assert table.order == 2 * m
    orders = {table.element_order(a) for a in range(table.order)}
    for k in range(1, 17):
        expected = k == 1 or k == 2 or m % k == 0
        assert (k in orders) == expected
        assert eval_on_finite_group(psi(k), table) == expected


@pytest.mark.parametrize("family, param", [("A", 2), ("B", 2), ("A", 3), ("I2", 6), ("B", 3), ("I2", 5)])
def test_phi_against_brute_force(family, param):
    table = table_of(family, param)
    for k in range(1, 5):
        assert eval_on_finite_group(phi(k), table) == central_roots_oracle(table, k)
        assert eval_on_finite_group(phi_literal(k), table) == all_powers_oracle(table, k)


def test_phi_and_literal_differ():
    # the dihedral group of order 8: the central rotation is a square, not every element is
    table = table_of("B", 2)
    assert eval_on_finite_group(phi(2), table)
    assert not eval_on_finite_group(phi_literal(2), table)
    assert not eval_on_finite_group(phi(4), table)


def test_phi_one_holds_everywhere():
    for family, param in [("A", 2), ("B", 2), ("I2", 7)]:
        assert eval_on_finite_group(phi(1), table_of(family, param))
        assert eval_on_finite_group(phi_literal(1), table_of(family, param))


def test_eval_cap():
    table = table_of("B", 3)
    with pytest.raises(CapExceeded):
        eval_on_finite_group(phi(2), table, cap=1000)


def test_connectives():
    s3 = table_of("A", 2)
    s = Sentence(((EXISTS, "x"),), And((Not(Eq(Power("x", 1))), Or((Eq(Power("x", 2)), Neq(Eq(Power("x", 3))))))))
    assert eval_on_finite_group(s, s3)
    s = Sentence(((FORALL, "x"),), Eq(Power("x", 6)))
    assert eval_on_finite_group(s, s3)


# -- Artin groups ------------------------------------------------------------------


def test_holds_phi_examples():
    assert holds_phi(FamilySpec("A", 3), 4)
    assert not holds_phi(FamilySpec("A", 2), 4)
    for spec in (FamilySpec("A", 1), FamilySpec("B", 5), FamilySpec("D", 7), FamilySpec("I2", 11)):
        assert holds_phi(spec, 1)
    with pytest.raises(CapExceeded):
        holds_phi(FamilySpec("D", 5), 2)


def test_distinguish_examples():
    v = distinguish(FamilySpec("A", 2), FamilySpec("A", 3))
    assert (v.kind, v.sentence, v.holdsIn, v.basis, v.exponents) == (DISTINGUISHED, phi(4), "right", "formula", (3, 4))
    v = distinguish(FamilySpec("D", 4), FamilySpec("D", 5))
    assert (v.kind, v.sentence, v.holdsIn, v.exponents) == (DISTINGUISHED, phi(8), "right", (3, 8))
    assert distinguish(FamilySpec("A", 2), FamilySpec("A", 2)).kind == SAME
    v = distinguish(FamilySpec("I2", 3), FamilySpec("I2", 6))
    assert (v.kind, v.sentence, v.holdsIn, v.basis) == (DISTINGUISHED, phi(2), "left", "search")


def test_distinguish_unknown():
    # A2 and I2(3) share a Coxeter matrix, hence the same spectrum
    v = distinguish(FamilySpec("I2", 3), FamilySpec("A", 2))
    assert v.kind == UNKNOWN and v.sentence is None and v.basis == "search"
    assert distinguish(FamilySpec("I2", 4), FamilySpec("B", 2)).kind == UNKNOWN


def test_verdict_json():
    d = json.loads(distinguish(FamilySpec("A", 2), FamilySpec("A", 3)).to_json())
    assert d == {
        "kind": "Distinguished",
        "groups": ["A2", "A3"],
        "sentence": "∀x.∃y.∀z.(¬(xy = yx) ∨ (x = y⁴))",
        "sentenceName": "Phi_4",
        "holdsIn": "right",
        "basis": "formula",
        "exponents": [3, 4],
    }
    d = distinguish(FamilySpec("A", 2), FamilySpec("A", 3)).as_dict(unicode=False)
    assert d["sentence"].startswith("Ax.Ey.Az.")


WITHIN_FAMILY = (
    [FamilySpec("A", k) for k in range(1, 7)],
    [FamilySpec("B", k) for k in range(2, 7)],
    [FamilySpec("D", k) for k in range(4, 7)],
    [FamilySpec("I2", m) for m in range(3, 13, 2)],
    [FamilySpec("I2", m) for m in range(4, 13, 2)],
)


@pytest.mark.parametrize("family", WITHIN_FAMILY, ids=lambda f: f[0].family + ("odd" if f[0].param % 2 else "even"))
def test_within_family_pairs_distinguished(family):
    for s1, s2 in itertools.combinations(family, 2):
        v = distinguish(s1, s2)
        assert v.kind == DISTINGUISHED and v.basis == "formula" and is_kahr(v.sentence)
        bigger = "left" if max_root_exponent(s1) > max_root_exponent(s2) else "right"
        assert v.holdsIn == bigger
        holds_left = holds_phi(s1, int(v.sentence.name.split("_")[1]))
        assert holds_left == (v.holdsIn == "left")


def test_even_dihedral_against_larger():
    """I2(n) with n even against any I2(m), m > n."""
    for n in range(4, 13, 2):
        for m in range(n + 1, 13):
            v = distinguish(FamilySpec("I2", n), FamilySpec("I2", m))
            assert v.kind == DISTINGUISHED and is_kahr(v.sentence)


def test_symmetry():
    specs = [FamilySpec("A", 2), FamilySpec("A", 3), FamilySpec("B", 3), FamilySpec("D", 4), FamilySpec("I2", 3), FamilySpec("I2", 6)]
    flip = {"left": "right", "right": "left", None: None}
    for s1, s2 in itertools.permutations(specs, 2):
        v, w = distinguish(s1, s2), distinguish(s2, s1)
        assert v.kind == w.kind and v.sentence == w.sentence and v.holdsIn == flip[w.holdsIn]


def test_infinitude_witness():
    specs = [FamilySpec("A", k) for k in range(1, 7)]
    verdicts = [distinguish(a, b) for a, b in itertools.combinations(specs, 2)]
    assert len(verdicts) == 15
    assert all(v.kind == DISTINGUISHED for v in verdicts)
