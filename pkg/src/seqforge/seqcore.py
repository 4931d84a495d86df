"""Periodic sequences over Z_2 / Z_4 and their exact correlation functions.

Correlation values are Gaussian integers. For a pair of sequences ``s``, ``t``
of length N over Z_H the periodic cross-correlation at shift ``tau`` is

    R_{s,t}(tau) = sum_i xi ** (s(i) - t(i + tau))      (indices mod N)

with ``xi`` the primitive H-th root of unity. Over Z_2 the value is a signed
integer; over Z_4 the powers of ``xi`` are 1, i, -1, -i so the sum only needs
a count of how often each difference occurs. No floating point is involved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import ClassVar, Iterable, Sequence

import numpy as np

from .errors import DomainError, InvariantError

__all__ = [
    "GaussianInt",
    "BinarySequence",
    "QuaternarySequence",
    "CorrelationSpectrum",
    "OptimalityReport",
    "cross_correlation",
    "cross_spectrum",
    "auto_spectrum",
    "r_max_squared",
    "is_optimal_even_length",
    "shift",
    "complement",
    "from_support",
    "parse_sequence",
    "format_sequence",
]


@dataclass(frozen=True, order=True)
class GaussianInt:
    """Exact complex integer ``re + im*i``."""

    re: int
    im: int = 0

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gaussian(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, np.integer)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self.re, self.im) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared magnitude ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def halve(self) -> GaussianInt:
        """Exact division by 2; both parts must be even."""
        if self.re % 2 or self.im % 2:
            raise InvariantError(f"cannot halve {self}: odd component")
        return GaussianInt(self.re // 2, self.im // 2)

    def to_json(self):
        return [self.re, self.im]

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _as_gaussian(value) -> GaussianInt:
    if isinstance(value, GaussianInt):
        return value
    if isinstance(value, (int, np.integer)):
        return GaussianInt(int(value), 0)
    raise TypeError(f"not a Gaussian integer: {value!r}")


@dataclass(frozen=True)
class _PeriodicSequence:
    symbols: tuple[int, ...]
    alphabet: ClassVar[int] = 0

    def __init__(self, symbols: Iterable[int]):
        values = tuple(int(v) for v in symbols)
        if not values:
            raise DomainError("sequence must have length >= 1")
        bad = [v for v in values if not 0 <= v < self.alphabet]
        if bad:
            raise DomainError(f"symbol {bad[0]} outside Z_{self.alphabet}")
        object.__setattr__(self, "symbols", values)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index % len(self.symbols)]

    @property
    def length(self) -> int:
        return len(self.symbols)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.symbols, dtype=np.int64)

    def __str__(self):
        return format_sequence(self)


class BinarySequence(_PeriodicSequence):
    """Periodic sequence over {0, 1}."""

    alphabet = 2

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.symbols) if v)

    def weight(self) -> int:
        return sum(self.symbols)

    def __repr__(self):
        return f"BinarySequence({format_sequence(self)})"


class QuaternarySequence(_PeriodicSequence):
    """Periodic sequence over Z_4."""

    alphabet = 4

    def __repr__(self):
        return f"QuaternarySequence({format_sequence(self)})"


@dataclass(frozen=True)
class CorrelationSpectrum:
    """Correlation values indexed by shift 0..N-1."""

    values: tuple[GaussianInt, ...]

    @property
    def length(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, tau):
        return self.values[tau]

    def __iter__(self):
        return iter(self.values)

    def off_phase(self) -> tuple[GaussianInt, ...]:
        return self.values[1:]

    def real_parts(self) -> list[int]:
        return [v.re for v in self.values]

    def to_json(self):
        return [v.to_json() for v in self.values]


@dataclass(frozen=True)
class OptimalityReport:
    optimal: bool
    r_max_squared: int
    values: tuple[tuple[int, GaussianInt], ...] = field(repr=False)

    def __bool__(self):
        return self.optimal

    def to_json(self):
        return {
            "optimal": self.optimal,
            "r_max_squared": self.r_max_squared,
            "values": [[tau, v.to_json()] for tau, v in self.values],
        }


def _check_pair(s: _PeriodicSequence, t: _PeriodicSequence) -> None:
    if type(s) is not type(t):
        raise DomainError(
            f"alphabet mismatch: {type(s).__name__} vs {type(t).__name__}"
        )
    if len(s) != len(t):
        raise DomainError(f"length mismatch: {len(s)} vs {len(t)}")


# xi**d for d in Z_4, as (re, im)
_UNITS4 = ((1, 0), (0, 1), (-1, 0), (0, -1))


def cross_correlation(s, t, tau: int) -> GaussianInt:
    """R_{s,t}(tau) by direct summation over one period."""
    _check_pair(s, t)
    n = len(s)
    if not 0 <= tau < n:
        raise DomainError(f"shift {tau} outside 0..{n - 1}")
    a, b = s.symbols, t.symbols
    if s.alphabet == 2:
        agree = sum(1 for i in range(n) if a[i] == b[(i + tau) % n])
        return GaussianInt(2 * agree - n, 0)
    re = im = 0
    for i in range(n):
        ur, ui = _UNITS4[(a[i] - b[(i + tau) % n]) % 4]
        re += ur
        im += ui
    return GaussianInt(re, im)


def cross_spectrum(s, t) -> CorrelationSpectrum:
    """R_{s,t}(tau) for every tau at once (vectorized, still exact)."""
    _check_pair(s, t)
    n = len(s)
    h = s.alphabet
    a = s.to_array()
    b = t.to_array()
    idx = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    diff = (a[:, None] - b[idx]) % h
    counts = [np.count_nonzero(diff == d, axis=0) for d in range(h)]
    if h == 2:
        re = counts[0] - counts[1]
        im = np.zeros(n, dtype=np.int64)
    else:
        re = counts[0] - counts[2]
        im = counts[1] - counts[3]
    return CorrelationSpectrum(
        tuple(GaussianInt(int(r), int(i)) for r, i in zip(re, im))
    )


def auto_spectrum(s) -> CorrelationSpectrum:
    return cross_spectrum(s, s)


def r_max_squared(spectrum: CorrelationSpectrum) -> int:
    """Largest squared magnitude over the out-of-phase shifts 1..N-1."""
    if spectrum.length < 2:
        raise DomainError("spectrum of length 1 has no out-of-phase shifts")
    return max(v.norm() for v in spectrum.off_phase())


def is_optimal_even_length(u: QuaternarySequence) -> OptimalityReport:
    """Optimal means every out-of-phase autocorrelation has magnitude at most 2.

    For even length the best achievable maximum is exactly 2, so the test is
    ``r_max_squared == 4``.
    """
    if len(u) % 2:
        raise DomainError("optimality bound applies to even length only")
    spec = auto_spectrum(u)
    rmax2 = r_max_squared(spec)
    values = tuple((tau, spec[tau]) for tau in range(1, spec.length))
    return OptimalityReport(rmax2 == 4, rmax2, values)


def shift(s, tau: int):
    """Left cyclic shift: result(i) = s(i + tau)."""
    n = len(s)
    k = tau % n
    return type(s)(s.symbols[k:] + s.symbols[:k])


def complement(s: BinarySequence) -> BinarySequence:
    if not isinstance(s, BinarySequence):
        raise DomainError("complement is defined for binary sequences")
    return BinarySequence(1 - v for v in s.symbols)


def from_support(n: int, support: Iterable[int]) -> BinarySequence:
    if n < 1:
        raise DomainError("length must be positive")
    symbols = [0] * n
    for i in support:
        if not 0 <= i < n:
            raise DomainError(f"support index {i} outside 0..{n - 1}")
        symbols[i] = 1
    return BinarySequence(symbols)


_SPLIT = re.compile(r"[,\s]+")


def parse_sequence(text: str, kind: str | None = None):
    """Parse ``"0,1,2,3"`` (optionally bracketed) into a sequence.

    ``kind`` is ``"binary"``, ``"quaternary"`` or None; None picks binary when
    every symbol is 0/1.
    """
    body = text.strip()
    if body[:1] in "([{" and body[-1:] in ")]}":
        body = body[1:-1]
    tokens = [tok for tok in _SPLIT.split(body.strip()) if tok]
    if not tokens:
        raise DomainError("empty sequence literal")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise DomainError(f"bad sequence literal: {exc}") from None
    if kind is None:
        kind = "binary" if all(v in (0, 1) for v in values) else "quaternary"
    if kind == "binary":
        return BinarySequence(values)
    if kind == "quaternary":
        return QuaternarySequence(values)
    raise DomainError(f"unknown sequence kind {kind!r}")


def format_sequence(s: Sequence[int] | _PeriodicSequence) -> str:
    return ",".join(str(v) for v in s)
