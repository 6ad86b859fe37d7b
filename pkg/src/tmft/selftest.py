"""Golden-vector and counter-exactness checks run by ``tmft selftest``."""

from __future__ import annotations

import random

from .complexity import verify_counts
from .convolution import convolve_direct, convolve_via_tmft
from .group import tau
from .repmat import RepLabel, RingMatrix, e_matrix, phi
from .ring import make_ring
from .transform import Signal, coefficient_matrix, fast_coefficients, itmft, tmft_fast

# Basis labels of C_2^3 (tree labeling), k = 1..3, g = 0..7.
TREE_LABELS_N3 = {
    1: ["0", "1", "0", "1", "0", "1", "0", "1"],
    2: ["00", "01", "11", "10", "00", "01", "11", "10"],
    3: ["000", "001", "011", "010", "111", "110", "100", "101"],
}

# Sample groupings of the fast-transform coefficients for n = 3, keyed by
# level then label; values are the sample indices summed.
ONE_HOT_GROUPINGS = {
    0: {"": [0, 1, 2, 3, 4, 5, 6, 7]},
    1: {"0": [0, 2, 4, 6], "1": [1, 3, 5, 7]},
    2: {"00": [0, 4], "11": [2, 6], "01": [1, 5], "10": [3, 7]},
    3: {
        "000": [0], "111": [4], "011": [2], "100": [6],
        "001": [1], "110": [5], "010": [3], "101": [7],
    },
}

# Labels fed to the corner operator when reconstructing f_j, n = 3.
INVERSE_LABELS_N3 = {
    0: ("0", "00", "000"),
    1: ("1", "01", "001"),
    2: ("0", "11", "011"),
    3: ("1", "10", "010"),
    4: ("0", "00", "111"),
    5: ("1", "01", "110"),
    6: ("0", "11", "100"),
    7: ("1", "10", "101"),
}


def one_hot_probe(n: int = 3):
    """Signal over bitvec:8 whose sample j is the word with only bit j set."""
    ring = make_ring("bitvec:8")
    return Signal(n, ring, [1 << j for j in range(1 << n)])


def check_tree_labels():
    bad = [
        (k, g)
        for k, row in TREE_LABELS_N3.items()
        for g, want in enumerate(row)
        if str(tau(3, k, g)) != want
    ]
    return not bad, f"mismatches at (k, g) = {bad}" if bad else ""


def check_one_hot_groupings():
    levels = fast_coefficients(one_hot_probe())
    bad = []
    for k, groups in ONE_HOT_GROUPINGS.items():
        for label, samples in groups.items():
            b = int(label, 2) if label else 0
            if levels[k][b] != sum(1 << j for j in samples):
                bad.append((k, label))
    return not bad, f"wrong groupings {bad}" if bad else ""


def check_inverse_labels(rng=None):
    rng = rng or random.Random(6)
    ring = make_ring("gf:8:11b")
    f = Signal(3, ring, [ring.random_element(rng) for _ in range(8)])
    F, _ = tmft_fast(f)
    dense = {k: coefficient_matrix(F, k) for k in (1, 2, 3)}
    problems = []
    for j, labels in INVERSE_LABELS_N3.items():
        for k, want in enumerate(labels, start=1):
            if str(tau(3, k, j)) != want:
                problems.append(f"tau_{k}({j})")
        acc = F.dc
        for k, lab in enumerate(labels, start=1):
            E = RingMatrix.from_binary(ring, e_matrix(RepLabel.from_str(lab)))
            acc = ring.add(acc, phi(dense[k] @ E))
        if acc != f.values[j]:
            problems.append(f"f_{j}")
    back, _ = itmft(F)
    if back != f:
        problems.append("full inverse")
    return not problems, ", ".join(problems)


def check_counts(n_max: int = 10):
    rings = ["bitvec:8", "poly:4:13", "gf:8:11b"]
    bad = []
    for n in range(1, n_max + 1):
        for spec in rings:
            for scheme in ("tree", "flat"):
                for key, (got, want, ok) in verify_counts(n, make_ring(spec), scheme).items():
                    if not ok:
                        bad.append(f"n={n} {spec} {scheme} {key}: {got} != {want}")
    return not bad, "; ".join(bad[:5])


def check_convolution(n_max: int = 6, trials: int = 5, rng=None):
    rng = rng or random.Random(7)
    bad = []
    for spec in ("bitvec:8", "poly:4:13", "gf:8:11b"):
        ring = make_ring(spec)
        for n in range(1, n_max + 1):
            for _ in range(trials):
                r = Signal(n, ring, [ring.random_element(rng) for _ in range(1 << n)])
                s = Signal(n, ring, [ring.random_element(rng) for _ in range(1 << n)])
                if convolve_via_tmft(r, s)[0] != convolve_direct(r, s)[0]:
                    bad.append(f"{spec} n={n}")
    return not bad, ", ".join(bad)


CHECKS = [
    ("tree_labels_n3", check_tree_labels),
    ("one_hot_groupings", check_one_hot_groupings),
    ("inverse_labels_n3", check_inverse_labels),
    ("counter_exactness_n1_10", check_counts),
    ("convolution_oracle_n1_6", check_convolution),
]


def run_selftest(out=print) -> bool:
    all_ok = True
    for name, check in CHECKS:
        ok, detail = check()
        all_ok &= ok
        out(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return all_ok
