"""Smoke tests for the python bindings: every main operation round-trips."""

from fractions import Fraction

import zfr


def test_zeta_two_encloses_pi_squared_over_six():
    lo, hi = zfr.zeta("2")
    assert float(lo) <= 1.6449340668482264 <= float(hi)
    assert float(hi) - float(lo) < 1e-30


def test_hurwitz_half_shift_identity():
    (re_lo, re_hi), (im_lo, im_hi) = zfr.hurwitz_zeta("2", "0", "0.5")
    # zeta(2, 1/2) = pi^2/2
    assert float(re_lo) <= 4.934802200544679 <= float(re_hi)
    assert float(im_lo) <= 0.0 <= float(im_hi)


def test_cosine_poly_is_exact():
    b = zfr.cosine_poly("0.225", "0.9")
    assert Fraction(b["b0"]) == Fraction("10.01055")
    assert Fraction(b["b5"]) == Fraction("33.3275")
    assert Fraction(b["b5"]) / Fraction(b["b0"]) == Fraction(666550, 200211)


def test_kernel_constants_match_paper_digits():
    k = zfr.kernel_constants()
    lo, hi = k["theta"]
    assert lo.startswith("1.15221462997636304887")
    assert hi.startswith("1.15221462997636304887")
    lo, hi = k["w0"]
    assert lo.startswith("6.8260296844529545090")
    c4lo, c4hi = k["c4"]
    assert float(c4hi) <= 1.055656


def test_region_widths():
    lo, hi = zfr.region_width("smallt", 3, "10")
    assert 0.00888 <= float(lo) <= float(hi) <= 0.00890
    profile, lo, hi = zfr.best_width(3, "5")
    assert profile == "mccurley"
    profile, lo, hi = zfr.best_width(3, "e^3000")
    assert profile != "mccurley"


def test_mertens_E():
    lo, hi = zfr.mertens_E()
    assert abs(float(lo) + 1.3325822757332209) < 1e-9
    assert float(hi) - float(lo) < 1e-10


def test_corollary_sweep():
    all_hold, argmin_q, margin = zfr.corollary_sweep()
    assert all_hold
    assert argmin_q == 6
    assert 0 < float(margin) < 1e-3


def test_verify_small_suite():
    code, certs = zfr.verify(["lemma71"])
    assert code == 0
    assert all(c["status"] == "proved" for c in certs)
    assert any(c["id"] == "lemma71.cos2_theta" for c in certs)


def test_verify_perturbation_flips():
    code, certs = zfr.verify(["lemma71"], perturb={"0.16521": "0.17"})
    assert code == 1
    bad = [c for c in certs if c["status"] == "failed"]
    assert any(c["id"] == "lemma71.cos2_theta" for c in bad)
