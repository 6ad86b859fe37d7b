"""Two-modular Fourier transform of binary functions f: C_2^n -> R.

R is a finite commutative ring of characteristic 2 (bitwise words, binary
polynomial quotient rings, or GF(2^m)).  The package provides the direct,
fast and inverse transforms with exact ring-operation counting, transform
domain convolution, and the closed-form cost formulas they reproduce.
"""

from .complexity import cost_fast_tmft, cost_itmft, cost_report, cost_tmft
from .convolution import convolve_direct, convolve_via_tmft, shift, spectral_product
from .group import GroupElement, LabelingScheme, sigma, sigma_bar, tau
from .repmat import RepLabel, RingMatrix, e_matrix, phi, reconstruct_from_first_row
from .ring import OpCounter, Ring, RingSpec, counting_ring, make_ring
from .transform import (
    Signal,
    Spectrum,
    basis_labels,
    coefficient_matrix,
    dirac,
    indicator,
    itmft,
    tmft,
    tmft_direct,
    tmft_fast,
)

__all__ = [
    "GroupElement", "LabelingScheme", "OpCounter", "RepLabel", "Ring", "RingMatrix",
    "RingSpec", "Signal", "Spectrum", "basis_labels", "coefficient_matrix",
    "convolve_direct", "convolve_via_tmft", "cost_fast_tmft", "cost_itmft",
    "cost_report", "cost_tmft", "counting_ring", "dirac", "e_matrix", "indicator",
    "itmft", "make_ring", "phi", "reconstruct_from_first_row", "shift", "sigma",
    "sigma_bar", "spectral_product", "tau", "tmft", "tmft_direct", "tmft_fast",
]
