import itertools

import pytest

from conftest import SCHEMES, random_signal
from tmft.complexity import cost_fast_tmft, cost_itmft, cost_spectral_convolution
from tmft.convolution import (
    convolve_direct,
    convolve_via_tmft,
    shift,
    shifted_spectrum,
    spectral_product,
)
from tmft.group import tau
from tmft.repmat import RingMatrix, e_matrix
from tmft.ring import make_ring
from tmft.transform import Signal, coefficient_matrix, coefficient_matrix_dense, dirac, indicator, tmft_fast

GF = make_ring("gf:8:11b")


def test_identity_element(ring, rng):
    f = random_signal(3, ring, rng)
    assert convolve_direct(f, dirac(3, ring))[0] == f


def test_indicators_convolve_to_indicator():
    for a, b in itertools.product(range(8), repeat=2):
        got = convolve_direct(indicator(3, a, GF), indicator(3, b, GF))[0]
        assert got == indicator(3, a ^ b, GF)


def test_direct_counts():
    r = s = dirac(3, GF)
    _, c = convolve_direct(r, s)
    assert c.multiplications == 64
    assert c.additions == 8 * 7


def test_commutative(ring, rng):
    for n in range(1, 5):
        r, s = random_signal(n, ring, rng), random_signal(n, ring, rng)
        assert convolve_direct(r, s)[0] == convolve_direct(s, r)[0]


@pytest.mark.parametrize("scheme", SCHEMES)
def test_spectral_matches_direct(ring, scheme, rng):
    for n in range(1, 7):
        for _ in range(5):
            r, s = random_signal(n, ring, rng), random_signal(n, ring, rng)
            assert convolve_via_tmft(r, s, scheme)[0] == convolve_direct(r, s)[0]


@pytest.mark.parametrize("spec", ["bitvec:1", "gf:1:3"])
def test_spectral_matches_direct_exhaustive(spec):
    ring = make_ring(spec)
    for n in (1, 2):
        signals = [Signal(n, ring, v) for v in itertools.product(ring.elements(), repeat=1 << n)]
        for r, s in itertools.product(signals, repeat=2):
            assert convolve_via_tmft(r, s)[0] == convolve_direct(r, s)[0]


def test_dirac_squared():
    d = dirac(4, GF)
    assert convolve_via_tmft(d, d)[0] == d


@pytest.mark.parametrize("n", range(1, 8))
def test_transform_stage_counts(n, rng):
    r, s = random_signal(n, GF, rng), random_signal(n, GF, rng)
    _, c = convolve_via_tmft(r, s)
    st = c.stages
    assert st["transforms"].additions == 2 * cost_fast_tmft(n) + cost_itmft(n)
    assert st["transforms"].additions == cost_spectral_convolution(n)
    assert st["transforms"].multiplications == 0
    # product stage: 1 + sum 3^k multiplications, sum (3^k - 2^k) additions
    assert st["product"].multiplications == 1 + sum(3**k for k in range(1, n + 1))
    assert st["product"].additions == sum(3**k - 2**k for k in range(1, n + 1))
    assert c.additions == st["transforms"].additions + st["product"].additions


def test_n3_transform_stage_is_99(rng):
    _, c = convolve_via_tmft(random_signal(3, GF, rng), random_signal(3, GF, rng))
    assert c.stages["transforms"].additions == 99


def test_spectral_product_identity(ring, scheme, rng):
    R, _ = tmft_fast(random_signal(4, ring, rng), scheme)
    D, _ = tmft_fast(dirac(4, ring), scheme)
    assert spectral_product(R, D)[0] == R


def test_spectral_product_dc(rng):
    r, s = random_signal(4, GF, rng), random_signal(4, GF, rng)
    P, _ = spectral_product(tmft_fast(r)[0], tmft_fast(s)[0])
    assert P.dc == GF.mul(tmft_fast(r)[0].dc, tmft_fast(s)[0].dc)
    assert P.dc == tmft_fast(convolve_direct(r, s)[0])[0].dc


def test_spectral_product_dense_oracle(rng):
    ring = make_ring("gf:2:7")
    for _ in range(20):
        R, _ = tmft_fast(random_signal(2, ring, rng))
        S, _ = tmft_fast(random_signal(2, ring, rng))
        P, _ = spectral_product(R, S)
        for k in (1, 2):
            assert coefficient_matrix(P, k) == coefficient_matrix(R, k) @ coefficient_matrix(S, k)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_matrix_level_convolution_identity(scheme, rng):
    for n in range(1, 5):
        r, s = random_signal(n, GF, rng), random_signal(n, GF, rng)
        conv = convolve_direct(r, s)[0]
        for k in range(1, n + 1):
            lhs = coefficient_matrix_dense(r, k, scheme) @ coefficient_matrix_dense(s, k, scheme)
            assert lhs == coefficient_matrix_dense(conv, k, scheme)


def test_associativity_via_spectra(ring, rng):
    for n in (2, 3, 4):
        r, s, t = (random_signal(n, ring, rng) for _ in range(3))
        left = convolve_via_tmft(convolve_via_tmft(r, s)[0], t)[0]
        right = convolve_via_tmft(r, convolve_via_tmft(s, t)[0])[0]
        assert left == right == convolve_direct(convolve_direct(r, s)[0], t)[0]


def test_shift_zero_and_dirac():
    f = dirac(3, GF)
    assert shift(f, 0) == f
    for a in range(8):
        assert shift(f, a) == indicator(3, a, GF)
    with pytest.raises(ValueError):
        shift(f, 8)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_shift_rule(ring, scheme, rng):
    for n in range(1, 7):
        for _ in range(5):
            f = random_signal(n, ring, rng)
            a = rng.randrange(1 << n)
            F, _ = tmft_fast(f, scheme)
            assert tmft_fast(shift(f, a), scheme)[0] == shifted_spectrum(F, a)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_shift_rule_dense(scheme, rng):
    for n in range(1, 5):
        f = random_signal(n, GF, rng)
        a = rng.randrange(1 << n)
        F, _ = tmft_fast(f, scheme)
        G, _ = tmft_fast(shift(f, a), scheme)
        for k in range(1, n + 1):
            E = RingMatrix.from_binary(GF, e_matrix(tau(n, k, a, scheme)))
            assert coefficient_matrix(G, k) == coefficient_matrix(F, k) @ E


@pytest.mark.parametrize("scheme", SCHEMES)
def test_shift_rule_under_periodicity(scheme, rng):
    # f(g + a) = f(g): the shifted spectrum equals both F and F_k E_{tau_k(a)}.
    n, a = 4, 0b0101
    base = {}
    vals = []
    for g in range(16):
        key = min(g, g ^ a)
        base.setdefault(key, GF.random_element(rng))
        vals.append(base[key])
    f = Signal(n, GF, vals)
    assert shift(f, a) == f
    F, _ = tmft_fast(f, scheme)
    assert shifted_spectrum(F, a) == F


def test_mismatched_inputs():
    with pytest.raises(ValueError):
        convolve_direct(dirac(2, GF), dirac(3, GF))
    with pytest.raises(ValueError):
        convolve_direct(dirac(2, GF), dirac(2, make_ring("bitvec:8")))
    with pytest.raises(ValueError):
        spectral_product(tmft_fast(dirac(3, GF), "tree")[0], tmft_fast(dirac(3, GF), "flat")[0])
