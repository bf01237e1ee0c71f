from fractions import Fraction

import pulveriser as pv


def test_exactnum():
    assert pv.gcd(12, 18) == 6
    g, x, y = pv.extended_gcd(240, 46)
    assert g == 2 and 240 * x + 46 * y == 2
    assert pv.rational_make(6, -8) == Fraction(-3, 4)


def test_triples():
    assert pv.pothayanar_estimate(4, 3) == 5
    assert pv.pothayanar_estimate(3, 4) == Fraction(37, 8)
    assert pv.pothayanar_is_exact(8, 6)
    assert pv.katyayana_triple(3, 2) == (5, 12, 13)
    assert pv.enumerate_primitive_triples(5) == [(3, 4, 5)]


def test_prosody():
    assert pv.exp2(10) == 1024
    assert pv.exp(-2, 3) == -8
    assert pv.exp(2, 300) == 2**300  # arbitrary precision crosses the boundary
    assert pv.enumerate_prastara(2) == ["GG", "LG", "GL", "LL"]
    assert pv.index_to_pattern(4, 3) == "LLG"
    assert pv.pattern_to_index("LLG") == 4
    assert pv.matra_count(5) == 8
    assert pv.enumerate_matra(3) == ["LLL", "LG", "GL"]
    assert pv.meru_row(4) == [1, 4, 6, 4, 1]
    assert pv.points_share(2, 3) == Fraction(11, 16)


def test_roots():
    assert pv.aryabhata_sqrt(1521) == (39, 0)
    assert pv.aryabhata_sqrt(2000) == (44, 64)
    assert pv.aryabhata_sqrt(10**40 + 7)[0] == 10**20
    assert pv.heron_step(2, 1) == Fraction(3, 2)
    assert pv.bakhshali_step(2, Fraction(3, 2)) == Fraction(577, 408)
    steps = pv.iterate("heron", 2, 1, 3)
    assert steps[-1][1] == Fraction(577, 408)


def test_diophantine():
    sol = pv.kuttaka(17, 5, 1)
    assert sol["x"] == 3 and sol["y"] == -10
    x, y, states = pv.chakravala(61)
    assert (x, y) == (1766319049, 226153980)
    assert all(a * a - 61 * b * b == k for a, b, k, _ in states)


def test_comparative():
    assert pv.egyptian_decompose(Fraction(3, 7)) == [
        Fraction(1, 3), Fraction(1, 11), Fraction(1, 231)]
    assert pv.sieve(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert pv.euclid_new_prime([2, 3, 5, 7, 11, 13]) == (30031, 59)


def test_domain_errors_surface():
    import pytest

    with pytest.raises(pv.DomainError):
        pv.chakravala(4)
    with pytest.raises(pv.DomainError):
        pv.rational_make(1, 0)
