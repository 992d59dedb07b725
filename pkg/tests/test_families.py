"""Presentation builders, the family registry, and its validators."""

import pytest

from dehnlab.area import verify_certificate
from dehnlab.errors import ValidationError
from dehnlab.families import (REGISTRY, PolycyclicData, build_G1,
                              build_G1_redundant, build_G2, build_G3,
                              build_ZpZq, build_dihedral, build_example24,
                              ex24_witness, g3_certificate, g3_witness,
                              get_family, is_prime, primes_upto,
                              validate_family)
from dehnlab.presentation import presentation_to_text
from dehnlab.realization import coset_enumerate, is_null_homotopic
from dehnlab.words import parse_word, print_word


def test_prime_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_upto(1) == ()
    assert primes_upto(13) == (2, 3, 5, 7, 11, 13)


def test_cyclic_builders():
    assert presentation_to_text(build_G1(5)) == "gens: a\nrels: a^5\n"
    assert presentation_to_text(build_ZpZq(2, 3, "one-generator")) == \
        "gens: a\nrels: a^6\n"
    assert presentation_to_text(build_ZpZq(2, 3, "two-generator")) == \
        "gens: x y\nrels: x^2, y^3, x y x^-1 y^-1\n"
    with pytest.raises(ValueError, match="not prime"):
        build_G1(4)
    with pytest.raises(ValueError, match="must both be prime"):
        build_ZpZq(4, 3, "one-generator")
    with pytest.raises(ValueError, match="distinct"):
        build_ZpZq(3, 3, "one-generator")
    with pytest.raises(ValueError, match="unknown style"):
        build_ZpZq(2, 3, "matrix")


def test_redundant_generator_builder():
    assert presentation_to_text(build_G1_redundant(7, (2, 3))) == \
        "gens: a b1 b2\nrels: a^7, b1^7, b2^7, b1 a^-2, b2 a^-3\n"
    p = build_G1_redundant(5, (2,))
    assert p.generator_names == ("a", "b")
    assert coset_enumerate(p, 100).order == 5
    with pytest.raises(ValueError, match="at least one redundant exponent"):
        build_G1_redundant(7, ())
    with pytest.raises(ValueError, match="size bound 4"):
        build_G1_redundant(11, (2, 3, 4, 5))
    with pytest.raises(ValueError, match="out of range"):
        build_G1_redundant(7, (1,))
    with pytest.raises(ValueError, match="out of range"):
        build_G1_redundant(7, (7,))


def test_semidirect_builder():
    assert presentation_to_text(build_example24(5, 7)) == \
        "gens: a s\nrels: s^5, a^7, s^-1 a s a^-2\n"
    with pytest.raises(ValueError, match="must both be prime"):
        build_example24(4, 7)
    with pytest.raises(ValueError, match="need p >= 5"):
        build_example24(3, 5)
    with pytest.raises(ValueError, match="need p < k"):
        build_example24(7, 5)
    with pytest.raises(ValueError, match="divides 2\\^p - 1"):
        build_example24(5, 31)


def test_cyclic_extension_builder():
    assert presentation_to_text(build_G3(5)) == \
        "gens: a b\nrels: b a b^-1 a^-6, a^25, b^5\n"
    assert coset_enumerate(build_G3(2), 100).order == 8
    with pytest.raises(ValueError, match="not prime"):
        build_G3(6)


def test_dihedral_builders():
    assert presentation_to_text(build_dihedral(4, "standard")) == \
        "gens: s r\nrels: s^2, r^5, s r s r^-4\n"
    assert presentation_to_text(build_dihedral(2, "alt")) == \
        "gens: s t\nrels: s^2, t^2, s t s t s t\n"
    assert presentation_to_text(build_dihedral(3, "D4n")) == \
        "gens: s r t\nrels: s^2, r^3, t^2, s r s r, s t s^-1 t^-1, " \
        "r t r^-1 t^-1\n"
    assert coset_enumerate(build_dihedral(3, "D4n"), 100).order == 12
    with pytest.raises(ValueError, match="need n >= 2"):
        build_dihedral(1, "standard")
    with pytest.raises(ValueError, match="needs odd n"):
        build_dihedral(4, "D4n")
    with pytest.raises(ValueError, match="unknown style"):
        build_dihedral(3, "vertices")


def test_subset_generated_dihedral():
    p = build_dihedral(2, "Kgen", ("s", "r1"))
    assert presentation_to_text(p) == \
        "gens: s r1\nrels: s^2, r1^3, s r1 s r1, s^2, r1^3, s r1 s r1\n"
    assert coset_enumerate(p, 100).order == 6
    # reflection-only subsets work when two rotations compose to a unit
    q = build_dihedral(4, "Kgen", ("sr1", "r4"))
    assert coset_enumerate(q, 100).order == 10
    with pytest.raises(ValueError, match="needs a subset"):
        build_dihedral(2, "Kgen")
    with pytest.raises(ValueError, match="bad subset tag"):
        build_dihedral(2, "Kgen", ("s", "q3"))
    with pytest.raises(ValueError, match="duplicate subset tag"):
        build_dihedral(2, "Kgen", ("r1", "r1"))
    with pytest.raises(ValueError, match="identity rotation"):
        build_dihedral(2, "Kgen", ("s", "r3"))
    with pytest.raises(ValueError, match="use the tag 's'"):
        build_dihedral(2, "Kgen", ("sr3", "r1"))
    with pytest.raises(ValueError, match="empty subset"):
        build_dihedral(2, "Kgen", ())
    # case analysis rejections: generating sets outside the treated cases
    with pytest.raises(ValueError, match="gcd"):
        build_dihedral(3, "Kgen", ("s", "r2"))
    with pytest.raises(ValueError, match="without s needs sr"):
        build_dihedral(2, "Kgen", ("r1",))


def test_polycyclic_data_validation():
    d = PolycyclicData.abelian((2, 3))
    assert d.relative_orders == (2, 3)
    assert d.conj_rhs == ((0, 1, (1,)),)
    with pytest.raises(ValueError, match="length != 2"):
        PolycyclicData((2, 3), (None,), (None, None), ((0, 1, (1,)),))
    with pytest.raises(ValueError, match="come together"):
        PolycyclicData((2, 3), (2, None), (None, None), ((0, 1, (1,)),))
    with pytest.raises(ValueError, match="cover every pair"):
        PolycyclicData((2, 3), (None, None), (None, None), ())
    with pytest.raises(ValueError, match="duplicate conjugation pair"):
        PolycyclicData((2, 3), (None, None), (None, None),
                       ((0, 1, (1,)), (0, 1, (1,))))
    with pytest.raises(ValueError, match="out of range"):
        PolycyclicData((2, 3), (None, None), (None, None), ((0, 2, (1,)),))


def test_polycyclic_builder():
    assert presentation_to_text(build_G2(PolycyclicData.abelian((2, 3)))) == \
        "gens: x1 x2\nrels: x1^2, x2^3, x1^-1 x2 x1 x2^-1, x1 x2 x1^-1 x2^-1\n"
    assert coset_enumerate(build_G2(PolycyclicData.abelian((2, 3))), 100).order == 6


def test_commutator_witness_and_certificate():
    assert print_word(g3_witness(5, 2)) == \
        "a b^2 a b^-2 a^-1 b^2 a^-1 b^-2"
    for p, n in ((5, 1), (5, 2), (3, 2), (3, 3), (2, 4)):
        pres = build_G3(p)
        w = g3_witness(p, n)
        cert = g3_certificate(p, n)
        assert cert.claimed_area == 2 * ((p + 1) ** n - 1) // p
        assert verify_certificate(cert, w, pres)
    assert g3_certificate(5, 2).claimed_area == 14


def test_semidirect_witness():
    assert print_word(ex24_witness(2)) == "a s^-2 a s^2 a^-1 s^-2 a^-1 s^2"
    p = build_example24(5, 7)
    r = coset_enumerate(p, 1000)
    assert is_null_homotopic(parse_word("a", p.generator_names), r)
    assert is_null_homotopic(ex24_witness(3), r)


def test_registry_contents():
    assert sorted(REGISTRY) == ["D4N", "DIH", "DIHALT", "DIHK", "EX24", "G1",
                                "G1K", "G2", "G3", "ZPQ1", "ZPQ2"]
    assert {k: v.K_bound for k, v in REGISTRY.items()} == {
        "G1": 1, "G1K": 4, "ZPQ1": 1, "ZPQ2": 2, "EX24": 2, "G2": 4,
        "G3": 2, "DIH": 2, "DIHALT": 2, "DIHK": 4, "D4N": 3}
    assert get_family("G1") is REGISTRY["G1"]
    with pytest.raises(ValidationError, match="unknown family"):
        get_family("G99")


def test_relevance_bounds():
    assert REGISTRY["G1"].relevance_bound(10) == (2, 3, 5, 7)
    assert REGISTRY["G1"].relevance_bound(1) == ()
    assert REGISTRY["ZPQ1"].relevance_bound(10) == ((2, 3), (2, 5))
    assert REGISTRY["ZPQ2"].relevance_bound(10) == \
        ((2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7))
    assert REGISTRY["EX24"].relevance_bound(40)[0] == (5, 7)
    assert REGISTRY["G3"].relevance_bound(12) == (2, 3, 5, 7, 11)
    assert REGISTRY["DIH"].relevance_bound(4) == (2, 3, 4)
    assert REGISTRY["D4N"].relevance_bound(7) == (3, 5, 7)
    assert REGISTRY["DIHK"].relevance_bound(4) == \
        ((2, ("s", "r1")), (3, ("s", "r1")), (4, ("s", "r1")))


def test_every_family_validates_clean():
    for name in sorted(REGISTRY):
        results = validate_family(REGISTRY[name])
        assert results, name
        for label, check, ok, detail in results:
            assert ok, (name, label, check, detail)


def test_validator_reports_failures():
    # a wrong expected order is reported, not raised
    spec = REGISTRY["G1"]
    broken = spec.__class__(**{**spec.__dict__, "expected_order": lambda p: p + 1})
    results = validate_family(broken, params=(5,))
    bad = [(c, d) for _, c, ok, d in results if not ok]
    assert bad == [("order", "order 5, expected 6")]
    # a failing build is reported under the offending parameter
    results = validate_family(spec, params=(4,))
    assert [(lbl, c, ok) for lbl, c, ok, _ in results] == [("4", "build", False)]


def test_extra_checks_present():
    names = {c for _, c, _, _ in validate_family(REGISTRY["EX24"], params=((5, 7),))}
    assert "a_is_trivial" in names
    names = {c for _, c, _, _ in validate_family(REGISTRY["G3"], params=(3,))}
    assert "conjugation_bab" in names
    names = {c for _, c, _, _ in
             validate_family(REGISTRY["DIHK"], params=((2, ("s", "r1")),))}
    assert any(c.startswith("reflection_conjugates_r") for c in names)
