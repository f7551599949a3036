from math import gcd

import pytest

from hgl.lietables import (
    CLASSICAL_FAMILIES,
    EXCEPTIONAL_FAMILIES,
    RestrictionViolation,
    alt_lemma_check,
    helper_bound_e_cubed,
    lie_datum,
    prime_powers_up_to,
    psl2_lemma_check,
    sporadic_check,
    sweep_ineq3,
)


def test_psu42_datum():
    datum = lie_datum("2A", 4, 2)
    assert datum.g_order == 2**6 * 3 * 9 * 15 == 25920
    assert datum.d == gcd(4, 3) == 1
    assert datum.epsilon == 2 and datum.graph == 1
    assert datum.out_order == 2
    assert datum.t_order == 25920


def test_psl27_datum():
    datum = lie_datum("A", 2, 7)
    assert datum.g_order == 7 * 48 == 336
    assert datum.d == 2
    assert datum.t_order == 168
    assert datum.out_order == 2


def test_suzuki_datum():
    datum = lie_datum("2B2", None, 8)
    assert datum.g_order == 64 * 65 * 7
    assert datum.d == 1 and datum.epsilon == 3 and datum.graph == 1


def test_psl24_is_order_60():
    assert lie_datum("A", 2, 4).t_order == 60


def test_table_orders_match_constructed_groups():
    from hgl.catalog import build_group

    assert lie_datum("A", 2, 7).t_order == build_group("PSL(2,7)").order() == 168
    assert lie_datum("A", 2, 4).t_order == build_group("PSL(2,4)").order() == 60
    assert lie_datum("2A", 4, 2).t_order == build_group("PSU(4,2)").order() == 25920


def test_restrictions():
    for family, n, q in [("A", 2, 2), ("A", 2, 3), ("2A", 3, 2), ("C", 2, 2)]:
        with pytest.raises(RestrictionViolation):
            lie_datum(family, n, q)
    with pytest.raises(RestrictionViolation):
        lie_datum("2B2", None, 4)  # q must be an odd power of 2
    with pytest.raises(RestrictionViolation):
        lie_datum("2G2", None, 9)
    with pytest.raises(ValueError):
        lie_datum("A", 2, 6)  # not a prime power


def test_psp_table_asymmetry_logged():
    # the order table allows (n,q) = (4,2); the automorphism table excludes
    # it.  The datum carries a note and the sweep skips it with a log entry.
    datum = lie_datum("C", 4, 2)
    assert datum.note
    report = sweep_ineq3(["C"], n_max=4, q_max=2)
    assert any(s["n"] == 4 and s["q"] == 2 for s in report["skipped"])


def test_d_values_match_gcds():
    for n in range(2, 9):
        for q in prime_powers_up_to(16):
            try:
                assert lie_datum("A", n, q).d == gcd(n, q - 1)
            except RestrictionViolation:
                pass
            if n >= 3:
                try:
                    assert lie_datum("2A", n, q).d == gcd(n, q + 1)
                except RestrictionViolation:
                    pass


def test_b_and_c_orders_agree():
    for n in (3, 4, 5, 6):
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert lie_datum("B", n, q).g_order == lie_datum("C", n, q).g_order


def test_omega5_canonicalised_to_psp4():
    assert lie_datum("B", 2, 3) == lie_datum("C", 2, 3)


def test_classical_sweep_passes():
    report = sweep_ineq3(CLASSICAL_FAMILIES, n_max=8, q_max=64)
    assert report["pass"]
    assert not report["failures"]
    assert len(report["rows"]) > 900


def test_exceptional_sweep_passes():
    report = sweep_ineq3(EXCEPTIONAL_FAMILIES, q_max=64)
    assert report["pass"]
    assert not report["failures"]


def test_e_cubed_bound():
    assert helper_bound_e_cubed(1024)["pass"]


def test_psl2_lemma():
    assert psl2_lemma_check(8)["pass"]
    assert psl2_lemma_check(7)["pass"]
    assert psl2_lemma_check(9)["redirect"] == "alternating"
    assert psl2_lemma_check(4)["redirect"] == "alternating"
    for q in prime_powers_up_to(1024):
        if q >= 4:
            assert psl2_lemma_check(q)["pass"], q
    with pytest.raises(ValueError):
        psl2_lemma_check(3)


def test_psl2_lemma_example_values():
    even = psl2_lemma_check(8)
    assert (even["lhs"], even["rhs"]) == (3 * 27, 216)
    odd = psl2_lemma_check(7)
    assert (odd["lhs"], odd["rhs"]) == (3 * 4**3, 216)


def test_alt_lemma():
    # 3^11 = 177147 < 60^3 = 216000 at the base case
    assert 3**11 == 177147 < 216000
    for n in range(5, 65):
        assert alt_lemma_check(n)
    with pytest.raises(ValueError):
        alt_lemma_check(4)


def test_sporadic_check():
    assert sporadic_check(1)["pass"]
    assert sporadic_check(2)["pass"]
    flagged = sporadic_check(3)
    assert not flagged["pass"] and flagged["flag"]
