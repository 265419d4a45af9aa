import random

import pytest

from qact.decomp import (
    InvalidMultiplicities,
    MultiplicityVector,
    dim_fixed_subvariety,
    factor_dimensions,
    is_trivial_decomposition,
    multiplicities_from_quotient_genera,
)
from qact.groups import Subgroup, named_subgroups
from qact.reptheory import quaternion_group
from qact.actions import family_representative


def _subs(n):
    return named_subgroups(quaternion_group(n))


def test_factor_dimensions_thm8_1():
    mv = MultiplicityVector(4, (1, 0, 0, 0), (1, 1, 1))
    t = factor_dimensions(mv)
    assert t.dim_AG == 1
    assert t.dim_prym_N == (0, 0, 0)
    assert t.dim_prym_A_over_AZ == 4
    assert dict(t.dim_prym_H) == {2: 1}
    assert t.total == 7


def test_factor_dimensions_thm8_3():
    mv = MultiplicityVector(4, (0, 0, 0, 1), (2, 1, 2))
    t = factor_dimensions(mv)
    assert t.dim_prym_A_over_AZ == 8
    assert dict(t.dim_prym_H) == {2: 1}
    assert t.dim_prym_N == (0, 0, 1)
    assert t.total == 0 + 0 + 0 + 1 + 8 + 2 * 1


def test_all_zero_vector():
    mv = MultiplicityVector(4, (0, 0, 0, 0), (0, 0, 0))
    t = factor_dimensions(mv)
    assert t.total == 0 and t.nontrivial_factor_count() == 0


def test_n3_table():
    mv = MultiplicityVector(3, (1, 0, 0, 0), (1,))
    t = factor_dimensions(mv)
    assert t.dim_prym_A_over_AZ == 2
    assert t.dim_prym_H == ()
    assert t.total == 3


def test_galois_constraint_enforced():
    with pytest.raises(InvalidMultiplicities):
        factor_dimensions(MultiplicityVector(4, (0, 0, 0, 0), (1, 0, 2)))
    mv = MultiplicityVector.from_orbit_values(5, (0, 0, 0, 0), [3, 1, 2])
    assert mv.b == (3, 1, 3, 2, 3, 1, 3)


def test_dimension_conservation_random():
    rng = random.Random(42)
    for n in (3, 4, 5, 6):
        for _ in range(200):
            mv = MultiplicityVector.random_valid(n, rng)
            t = factor_dimensions(mv)
            weighted = (
                t.dim_AG
                + sum(t.dim_prym_N)
                + t.dim_prym_A_over_AZ
                + 2 * sum(d for _, d in t.dim_prym_H)
            )
            assert weighted == t.total == mv.total_dimension()


def test_dim_fixed_subvariety_examples():
    n = 4
    subs = _subs(n)
    G = quaternion_group(n)
    mv = MultiplicityVector(4, (0, 1, 0, 0), (2, 0, 2))  # the (0;4,4,4,4) family
    whole = Subgroup(G, tuple(range(G.order)), "G")
    triv = Subgroup(G, (0,), "1")
    assert dim_fixed_subvariety(mv, triv) == mv.total_dimension()
    assert dim_fixed_subvariety(mv, whole) == mv.a[0]
    assert dim_fixed_subvariety(mv, subs["Z"]) == 1
    assert dim_fixed_subvariety(mv, subs["N1"]) == 1


def test_dim_fixed_subvariety_unlabeled_subgroup():
    n = 4
    G = quaternion_group(n)
    mv = MultiplicityVector(4, (1, 0, 0, 0), (1, 1, 1))
    conj = Subgroup.generated(G, [G.conjugate(G.generators[1], G.generators[0])])
    named = _subs(n)["H2"]
    assert dim_fixed_subvariety(mv, conj) == dim_fixed_subvariety(mv, named)


def test_triviality_flags_agree_on_random_vectors():
    rng = random.Random(7)
    for n in (3, 4, 5):
        for _ in range(1000):
            mv = MultiplicityVector.random_valid(n, rng, max_mult=3)
            rep = is_trivial_decomposition(mv)
            assert rep.agree, (mv, rep.flags())


def test_triviality_specific_cases():
    # a = 0, b supported on the odd orbit only: trivial
    mv = MultiplicityVector.from_orbit_values(4, (0, 0, 0, 0), [2, 0])
    rep = is_trivial_decomposition(mv)
    assert rep.agree and all(rep.flags())
    # a1 = 1: nontrivial
    mv = MultiplicityVector(4, (1, 0, 0, 0), (0, 0, 0))
    rep = is_trivial_decomposition(mv)
    assert rep.agree and not any(rep.flags())
    # n = 3 genus-four case: a = 0, b = 2
    mv = MultiplicityVector(3, (0, 0, 0, 0), (2,))
    rep = is_trivial_decomposition(mv)
    assert rep.agree and all(rep.flags())


def test_multiplicities_from_family_representatives():
    expected = {
        ("F0", 4): ((1, 0, 0, 0), (1, 1, 1)),
        ("F1", 4): ((0, 1, 0, 0), (2, 0, 2)),
        ("F2", 4): ((0, 0, 0, 1), (2, 1, 2)),
        ("C2", 4): ((0, 0, 0, 0), (2, 1, 2)),
        ("C3", 4): ((0, 0, 0, 0), (2, 0, 2)),
        ("F0", 3): ((1, 0, 0, 0), (1,)),
        ("F1", 3): ((0, 1, 0, 0), (2,)),
        ("C2", 3): ((0, 0, 0, 0), (2,)),
    }
    for (fam, n), (a, b) in expected.items():
        mv = multiplicities_from_quotient_genera(family_representative(n, fam))
        assert (mv.a, mv.b) == (a, b), (fam, n, mv)


def test_c42_dimension_claims():
    mv = multiplicities_from_quotient_genera(family_representative(4, "C2"))
    subs = _subs(4)
    assert dim_fixed_subvariety(mv, subs["H2"]) == 1
    t = factor_dimensions(mv)
    assert t.dim_prym_A_over_AZ == 8


def test_solver_flags_underdetermined_and_inconsistent_systems():
    from fractions import Fraction

    from qact.decomp import UnderdeterminedSystem, _solve_exact

    one, zero = Fraction(1), Fraction(0)
    with pytest.raises(UnderdeterminedSystem):
        _solve_exact([[one, one]], [one], 2)
    with pytest.raises(RuntimeError):
        _solve_exact([[one, zero], [one, zero]], [one, Fraction(2)], 2)


def test_isogeny_bookkeeping_K_vs_H_chains():
    """dim Prym(A_(K_j)/A_(K_(j+1))) = 2 dim Prym(A_(H_j)/A_(H_(j+1)))
    = 2 dim Prym(A_(Ht_j)/A_(Ht_(j+1))), via fixed-subvariety differences."""
    rng = random.Random(3)
    for n in (4, 5, 6):
        subs = _subs(n)
        for _ in range(50):
            mv = MultiplicityVector.random_valid(n, rng)
            for j in range(2, n - 1):
                dk = dim_fixed_subvariety(mv, subs[f"K{j}"]) - dim_fixed_subvariety(
                    mv, subs[f"K{j + 1}"]
                )
                dh = dim_fixed_subvariety(mv, subs[f"H{j}"]) - dim_fixed_subvariety(
                    mv, subs[f"H{j + 1}"]
                )
                dht = dim_fixed_subvariety(mv, subs[f"Ht{j}"]) - dim_fixed_subvariety(
                    mv, subs[f"Ht{j + 1}"]
                )
                assert dk == 2 * dh == 2 * dht


def test_factor_table_oracle_against_inner_products():
    """Closed-form factor dimensions == inner-product oracle differences."""
    rng = random.Random(12)
    for n in (3, 4, 5):
        G = quaternion_group(n)
        subs = _subs(n)
        whole = Subgroup(G, tuple(range(G.order)), "G")
        triv = Subgroup(G, (0,), "1")
        for _ in range(60):
            mv = MultiplicityVector.random_valid(n, rng)
            t = factor_dimensions(mv)
            dims = {lbl: dim_fixed_subvariety(mv, K) for lbl, K in subs.items()}
            dims["G"] = dim_fixed_subvariety(mv, whole)
            dims["1"] = dim_fixed_subvariety(mv, triv)
            assert t.dim_AG == dims["G"]
            for i in (1, 2, 3):
                assert t.dim_prym_N[i - 1] == dims[f"N{i}"] - dims["G"]
            assert t.dim_prym_A_over_AZ == dims["1"] - dims["Z"]
            for j, d in t.dim_prym_H:
                assert d == dims[f"H{j}"] - dims[f"H{j + 1}"]
