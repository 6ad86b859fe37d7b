"""Text formats for signals and spectra.

Signal file: one hex element per line, in group-index order 0..2^n-1.

Spectrum file::

    n=<n> ring=<ringspec> scheme=<tree|flat>
    <F_0>
    <row 1: 2 tokens>
    ...
    <row n: 2^n tokens>

Hex is lowercase without padding; bit 0 is the constant coefficient.
"""

from __future__ import annotations

import re
from pathlib import Path

from .group import as_scheme
from .ring import Ring, RingError, RingSpec, make_ring
from .transform import Signal, Spectrum, SpectrumError


class FormatError(ValueError):
    """Malformed or inconsistent signal/spectrum file."""


_HEADER = re.compile(r"^n=(\d+) ring=(\S+) scheme=(\S+)$")


def _parse_tokens(ring: Ring, tokens, where) -> list:
    try:
        return [ring.parse(t) for t in tokens]
    except RingError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def format_signal(f: Signal) -> str:
    return "".join(f.ring.format(v) + "\n" for v in f.values)


def parse_signal(text: str, n: int, ring: Ring) -> Signal:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1 << n:
        raise FormatError(f"expected {1 << n} signal values, found {len(lines)}")
    return Signal(n, ring, _parse_tokens(ring, lines, "signal"))


def parse_signal_file(path, n: int, ring: Ring) -> Signal:
    try:
        return parse_signal(Path(path).read_text(), n, ring)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write_signal_file(path, f: Signal):
    Path(path).write_text(format_signal(f))


def format_spectrum(F: Spectrum) -> str:
    fmt = F.ring.format
    out = [f"n={F.n} ring={F.ring.spec} scheme={F.scheme}"]
    out.extend(" ".join(fmt(v) for v in row) for row in F.rows)
    return "\n".join(out) + "\n"


def parse_spectrum(text: str) -> Spectrum:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty spectrum file")
    m = _HEADER.match(lines[0])
    if not m:
        raise FormatError(f"bad spectrum header {lines[0]!r}")
    n = int(m.group(1))
    try:
        ring = make_ring(RingSpec.parse(m.group(2)))
        scheme = as_scheme(m.group(3))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if len(lines) != n + 2:
        raise FormatError(f"expected {n + 1} spectrum rows, found {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != 1 << k:
            raise FormatError(f"row {k}: expected {1 << k} tokens, found {len(tokens)}")
        rows.append(_parse_tokens(ring, tokens, f"row {k}"))
    try:
        return Spectrum(n, ring, scheme, rows)
    except SpectrumError as exc:
        raise FormatError(str(exc)) from exc


def parse_spectrum_file(path) -> Spectrum:
    try:
        return parse_spectrum(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write_spectrum_file(path, F: Spectrum):
    Path(path).write_text(format_spectrum(F))
