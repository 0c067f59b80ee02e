import random
from fractions import Fraction

import pytest

from retractlab import (QQ, ZZ, GF, RingSignature, Endomorphism, IntMatrix,
                        identity, apply, analyze, classify, compute_y_variables,
                        quotient_mod_J, rationality_verdict, transcendence_degree,
                        jacobian_rank, NotIdempotentError)
from retractlab.engine import jacobian_rank_at_random_point, random_element


def e1():
    R = RingSignature(["x1", "x2"], 2, QQ)
    return Endomorphism(R, [R.variable(0) * R.variable(1), R.one()])


def test_compute_y_variables_e1():
    dec, ys = compute_y_variables(e1())
    assert dec.r == 1
    assert [y.kind for y in ys] == ["fixed", "killed"]
    assert ys[0].exponent == (1, 1)
    assert ys[1].exponent == (0, 1)
    assert ys[0].normalizer == 1 and ys[1].normalizer == 1


def test_compute_y_variables_scaled():
    R = RingSignature(["x1", "x2"], 2, QQ)
    phi = Endomorphism(R, [R.variable(0), R.constant(3)])
    dec, ys = compute_y_variables(phi)
    assert dec.r == 1
    assert ys[0].poly == R.variable(0)
    assert ys[1].normalizer == 3
    assert ys[1].poly == R.variable(1).scale(Fraction(1, 3))


def test_compute_y_variables_identity():
    R = RingSignature(["x1", "x2"], 2, QQ)
    dec, ys = compute_y_variables(identity(R))
    assert dec.r == 2 and all(y.kind == "fixed" for y in ys)
    assert [y.exponent for y in ys] == [(1, 0), (0, 1)]


def test_compute_y_variables_rejects_non_idempotent():
    R = RingSignature(["x1", "x2"], 2, QQ)
    with pytest.raises(NotIdempotentError):
        compute_y_variables(Endomorphism(R, [R.variable(1), R.variable(0)]))


def test_quotient_mod_j_e1():
    phi = e1()
    dec, ys = compute_y_variables(phi)
    R = phi.ring
    assert quotient_mod_J(R.variable(1), dec, ys).is_constant()
    assert quotient_mod_J(R.variable(1), dec, ys).constant_value() == 1
    q = quotient_mod_J(R.variable(0) * R.variable(1), dec, ys)
    assert str(q) == "y1"
    # an element already in the fixed sub-ring stays (in y-coordinates)
    y1sq = R.monomial((2, 2))
    q = quotient_mod_J(y1sq, dec, ys)
    assert q == q.ring.monomial((2,))


def test_transcendence_degree_examples():
    M = RingSignature(["x1", "x2"], 1, QQ)
    gens = [M.variable(0), M.variable(0) + M.monomial((-1, 0))]
    assert transcendence_degree(gens, M) == 1
    assert transcendence_degree([], M) == 0
    R3 = RingSignature(["x1", "x2", "x3"], 2, QQ)
    gens = [R3.variable(0), R3.variable(2) + R3.variable(1) - R3.one()]
    assert transcendence_degree(gens, R3) == 2


def test_transcendence_degree_char_p():
    R = RingSignature(["x1", "x2"], 1, GF(5))
    gens = [R.variable(0), R.variable(1)]
    assert transcendence_degree(gens, R, unit_rank=1) == (1, 2)
    L = RingSignature(["x1", "x2"], 2, GF(5))
    assert transcendence_degree([L.variable(0)], L, unit_rank=1) == 1


def test_jacobian_rank_probabilistic_cross_check():
    rng = random.Random(0)
    for seed in range(10):
        R = RingSignature(["x1", "x2", "x3"], 2, QQ)
        gens = [random_element(R, random.Random(seed)) for _ in range(2)]
        assert jacobian_rank_at_random_point(gens, R, rng) == \
            jacobian_rank(gens, R)


@pytest.mark.parametrize("n,d,r,t,domain,tag,params", [
    (2, 2, 1, 1, QQ, "PureLaurent", {"r": 1}),
    (3, 1, 1, 2, QQ, "UFDClassified", {"r": 1, "s": 1,
                                       "generatorsExplicit": False}),
    (3, 2, 0, 0, QQ, "CoefficientRing", {}),
    (3, 2, 2, 3, QQ, "WholeRing", {}),
    (3, 2, 1, 2, QQ, "LaurentTensorPoly", {"r": 1, "s": 1}),
    (4, 2, 1, 2, QQ, "UFDClassified", {"r": 1, "s": 1,
                                       "generatorsExplicit": False}),
    (5, 1, 1, 3, QQ, "BoundsOnly", {"lo": 1, "hi": 5}),
])
def test_classify(n, d, r, t, domain, tag, params):
    v = classify(n, d, r, t, domain)
    assert v.tag == tag and v.params == params


def test_classify_interval():
    v = classify(4, 1, 1, (1, 4), GF(5))
    assert v.tag == "BoundsOnly" and v.params == {"lo": 1, "hi": 4}
    # coinciding endpoints behave like the exact value
    assert classify(4, 2, 1, (2, 2), QQ).tag == "UFDClassified"
    with pytest.raises(ValueError):
        classify(3, 2, 1, 5, QQ)


@pytest.mark.parametrize("n,d,r,t,expected", [
    (3, 1, 1, 2, "Rational"),   # n <= 3
    (5, 1, 1, 1, "Rational"),   # trdeg 1
    (5, 1, 1, 3, "Unknown"),    # open question
    (5, 3, 2, 3, "Rational"),   # d >= n-2
    (5, 1, 0, 0, "Rational"),
    (5, 1, 1, 5, "Rational"),
])
def test_rationality(n, d, r, t, expected):
    assert rationality_verdict(n, d, r, t, QQ) == expected


def test_rationality_requires_field():
    with pytest.raises(ValueError):
        rationality_verdict(5, 1, 1, 3, ZZ)


def test_analyze_e1():
    rep = analyze(e1())
    assert rep.r == 1 and rep.trdeg == 1
    assert rep.classification.tag == "PureLaurent"
    assert rep.decomposition.Y == IntMatrix([[1, 0], [1, 1]])
    assert [str(g) for g in rep.generators] == ["x1*x2"]
    assert all(rep.certificates.values())


def test_analyze_e7():
    R = RingSignature(["x1", "x2", "x3"], 2, QQ)
    phi = Endomorphism(R, [R.variable(0), R.one(),
                           R.variable(2) + R.variable(1) - R.one()])
    rep = analyze(phi)
    assert rep.r == 1 and rep.trdeg == 2
    assert rep.classification.tag == "LaurentTensorPoly"
    assert rep.classification.params == {"r": 1, "s": 1}
    assert [str(g) for g in rep.generators] == ["x1", "x2 + x3 - 1"]


def test_analyze_identity_whole_ring():
    for d, n in [(2, 2), (1, 3)]:
        R = RingSignature(["x%d" % (i + 1) for i in range(n)], d, QQ)
        rep = analyze(identity(R))
        assert rep.classification.tag == "WholeRing"
        assert rep.trdeg == n


def test_analyze_rejects_non_idempotent_with_diff():
    R = RingSignature(["x1", "x2"], 2, QQ)
    swap = Endomorphism(R, [R.variable(1), R.variable(0)])
    with pytest.raises(NotIdempotentError) as exc:
        analyze(swap)
    assert "x1" in str(exc.value)


def test_analyze_over_zz():
    R = RingSignature(["x1", "x2"], 2, ZZ)
    phi = Endomorphism(R, [R.variable(0) * R.variable(1), R.one()])
    rep = analyze(phi)
    assert rep.classification.tag == "PureLaurent"
    assert rep.rationality == "NotApplicable"


def test_analyze_gf5_pure_laurent():
    R = RingSignature(["x1", "x2"], 2, GF(5))
    phi = Endomorphism(R, [R.variable(0) * R.variable(1), R.one()])
    rep = analyze(phi)
    assert rep.trdeg == 1
    assert rep.classification.tag == "PureLaurent"
    assert rep.rationality == "Rational"


def test_analyze_gf5_mixed_reports_bounds():
    R = RingSignature(["x1", "x2", "x3", "x4"], 1, GF(5))
    phi = Endomorphism(R, [R.variable(0), R.variable(1), R.variable(2),
                           R.zero()])
    rep = analyze(phi)
    assert rep.trdeg == (1, 4)
    assert rep.classification.tag == "BoundsOnly"


def test_analyze_degenerate_rings():
    # n = 0: only the identity endomorphism exists
    R0 = RingSignature([], 0, QQ)
    rep = analyze(Endomorphism(R0, []))
    assert rep.classification.tag == "CoefficientRing"
    # d = 0: no Laurent block
    P = RingSignature(["x1", "x2"], 0, QQ)
    phi = Endomorphism(P, [P.variable(0), P.zero()])
    rep = analyze(phi)
    assert rep.r == 0
    assert rep.classification.tag == "UFDClassified"
    assert rep.classification.params["s"] == 1


def test_ufd_case_generators_explicit():
    R = RingSignature(["x1", "x2", "x3"], 1, QQ)
    phi = Endomorphism(R, [R.variable(0), R.variable(1), R.variable(1)])
    rep = analyze(phi)
    assert rep.classification.tag == "UFDClassified"
    assert rep.classification.params["s"] == 1
    assert rep.classification.params["generatorsExplicit"] is True


def test_scalar_fixedness_and_injectivity_samples():
    phi = e1()
    rep = analyze(phi)
    R = phi.ring
    rng = random.Random(5)
    for _ in range(20):
        coeffs = [rng.randint(-3, 3) for _ in rep.decomposition.fixed_basis]
        b = tuple(sum(c * v[k] for c, v in zip(coeffs, rep.decomposition.fixed_basis))
                  for k in range(R.laurent))
        mono = R.monomial(b)
        assert apply(phi, mono) == mono
    for _ in range(20):
        b = random_element(R, rng)
        img = apply(phi, b)
        if not img.is_zero():
            q = quotient_mod_J(img, rep.decomposition, rep.y_variables)
            assert not q.is_zero()
