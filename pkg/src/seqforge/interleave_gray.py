"""Two-column interleaving and the Gray map between Z_4 and Z_2 x Z_2."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .seqcore import (
    BinarySequence,
    GaussianInt,
    QuaternarySequence,
    cross_correlation,
    shift,
)

__all__ = [
    "InterleaveSpec",
    "interleave",
    "deinterleave",
    "shifted_interleave_correlation",
    "GRAY",
    "INVERSE_GRAY",
    "gray_compose",
    "gray_decompose",
    "krone_sarwate_autocorrelation",
]


@dataclass(frozen=True)
class InterleaveSpec:
    """An n x 2 matrix whose column j is ``column_j`` cyclically shifted by ``g_j``."""

    column0: BinarySequence
    column1: BinarySequence
    g0: int = 0
    g1: int = 0

    def __post_init__(self):
        if len(self.column0) != len(self.column1):
            raise DomainError(
                f"column length mismatch: {len(self.column0)} vs {len(self.column1)}"
            )
        n = len(self.column0)
        object.__setattr__(self, "g0", self.g0 % n)
        object.__setattr__(self, "g1", self.g1 % n)

    @property
    def n(self) -> int:
        return len(self.column0)

    @property
    def columns(self):
        return (self.column0, self.column1)

    @property
    def shifts(self):
        return (self.g0, self.g1)


def interleave(spec: InterleaveSpec) -> BinarySequence:
    """Read the shifted columns row by row: u(2i + j) = column_j(g_j + i)."""
    c0 = shift(spec.column0, spec.g0).symbols
    c1 = shift(spec.column1, spec.g1).symbols
    return BinarySequence(v for row in zip(c0, c1) for v in row)


def deinterleave(u) -> tuple:
    if len(u) % 2:
        raise DomainError("deinterleave needs even length")
    kind = type(u)
    return kind(u.symbols[0::2]), kind(u.symbols[1::2])


def shifted_interleave_correlation(
    u_spec: InterleaveSpec, v_spec: InterleaveSpec, tau: int
) -> GaussianInt:
    """Cross-correlation of two interleaved sequences from their columns alone.

    With tau = 2*t1 + t2, the even case pairs column j with column j; the odd
    case pairs column 0 of u with column 1 of v and column 1 of u with column 0
    of v, the latter one step further along.
    """
    n = u_spec.n
    if v_spec.n != n:
        raise DomainError(f"column length mismatch: {n} vs {v_spec.n}")
    if not 0 <= tau < 2 * n:
        raise DomainError(f"shift {tau} outside 0..{2 * n - 1}")
    a0, a1 = u_spec.columns
    g0, g1 = u_spec.shifts
    b0, b1 = v_spec.columns
    f0, f1 = v_spec.shifts
    t1, t2 = divmod(tau, 2)
    if t2 == 0:
        return cross_correlation(a0, b0, (t1 + f0 - g0) % n) + cross_correlation(
            a1, b1, (t1 + f1 - g1) % n
        )
    return cross_correlation(a0, b1, (t1 + f1 - g0) % n) + cross_correlation(
        a1, b0, (t1 + 1 + f0 - g1) % n
    )


GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
INVERSE_GRAY = {bits: q for q, bits in GRAY.items()}


def gray_compose(c: BinarySequence, d: BinarySequence) -> QuaternarySequence:
    if len(c) != len(d):
        raise DomainError(f"length mismatch: {len(c)} vs {len(d)}")
    return QuaternarySequence(INVERSE_GRAY[pair] for pair in zip(c, d))


def gray_decompose(u: QuaternarySequence) -> tuple[BinarySequence, BinarySequence]:
    bits = [GRAY[q] for q in u]
    return BinarySequence(b[0] for b in bits), BinarySequence(b[1] for b in bits)


def krone_sarwate_autocorrelation(
    c: BinarySequence, d: BinarySequence, tau: int
) -> GaussianInt:
    """Autocorrelation of gray_compose(c, d) from binary correlations of c and d.

    R_u = (R_c + R_d)/2 + i (R_{c,d} - R_{d,c})/2. Both numerators are always
    even; ``halve`` raises InvariantError otherwise.
    """
    if len(c) != len(d):
        raise DomainError(f"length mismatch: {len(c)} vs {len(d)}")
    real = cross_correlation(c, c, tau).re + cross_correlation(d, d, tau).re
    imag = cross_correlation(c, d, tau).re - cross_correlation(d, c, tau).re
    return GaussianInt(real, imag).halve()
