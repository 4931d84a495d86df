"""Construction I: four odd-length binary columns -> one quaternary sequence.

Given a0..a3 of odd length n, lam = (n+1)/2 and bits e = (e0, e1, e2):

    c = I(a0, e0 + L^lam(a1))        d = I(e1 + a2, e2 + L^lam(a3))
    u = inverse Gray map of (c, d), length N = 2n

where I interleaves two columns and "e + " complements when e is 1. The
module also evaluates the closed-form autocorrelation of u, the sufficient
optimality conditions, and the theorem catalog mapping parameters to the
admissible column tuples with their promised spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cyclotomy import QuarticSystem, select_system_for_convention, six_sequences
from .errors import DomainError
from .families import (
    BinaryFieldSpec,
    gmw_pair,
    is_ideal,
    legendre_pair,
    m_sequence,
    twin_prime_pair,
)
from .interleave_gray import InterleaveSpec, gray_compose, interleave
from .numtheory import is_prime
from .seqcore import (
    BinarySequence,
    GaussianInt,
    QuaternarySequence,
    auto_spectrum,
    complement,
    cross_correlation,
    cross_spectrum,
    r_max_squared,
    shift,
)

__all__ = [
    "ConstructionInput",
    "build_components",
    "construct",
    "predicted_autocorrelation",
    "Corollary1Verdict",
    "corollary1_check",
    "infer_e",
    "SpectrumPattern",
    "PatternVerdict",
    "verify_pattern",
    "TheoremCatalogEntry",
    "THEOREMS",
    "pattern_for",
    "CatalogCase",
    "catalog",
    "verify_case",
    "e_triples",
]


def _flip(s: BinarySequence, bit: int) -> BinarySequence:
    return complement(s) if bit else s


@dataclass(frozen=True)
class ConstructionInput:
    a0: BinarySequence
    a1: BinarySequence
    a2: BinarySequence
    a3: BinarySequence
    e: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        lengths = {len(a) for a in self.columns}
        if len(lengths) != 1:
            raise DomainError(f"column lengths differ: {sorted(lengths)}")
        if self.n % 2 == 0:
            raise DomainError(f"column length {self.n} must be odd")
        e = tuple(int(b) for b in self.e)
        if len(e) != 3 or any(b not in (0, 1) for b in e):
            raise DomainError(f"e must be three bits, got {self.e!r}")
        object.__setattr__(self, "e", e)

    @property
    def columns(self) -> tuple[BinarySequence, ...]:
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def n(self) -> int:
        return len(self.a0)

    @property
    def N(self) -> int:
        return 2 * self.n

    @property
    def lam(self) -> int:
        return (self.n + 1) // 2

    @property
    def parity(self) -> int:
        return sum(self.e) % 2


def build_components(inp: ConstructionInput) -> tuple[BinarySequence, BinarySequence]:
    e0, e1, e2 = inp.e
    c = interleave(InterleaveSpec(inp.a0, _flip(shift(inp.a1, inp.lam), e0)))
    d = interleave(InterleaveSpec(_flip(inp.a2, e1), _flip(shift(inp.a3, inp.lam), e2)))
    return c, d


def construct(inp: ConstructionInput) -> QuaternarySequence:
    return gray_compose(*build_components(inp))


def predicted_autocorrelation(inp: ConstructionInput, tau: int) -> GaussianInt:
    """R_u(tau) from correlations of the columns, without building u."""
    if not 0 <= tau < inp.N:
        raise DomainError(f"shift {tau} outside 0..{inp.N - 1}")
    a = inp.columns
    e0, e1, e2 = inp.e
    sign = -1 if inp.parity else 1

    t0, odd = divmod(tau, 2)
    if not odd:
        def R(i, j):
            return cross_correlation(a[i], a[j], t0).re

        real = R(0, 0) + R(1, 1) + R(2, 2) + R(3, 3)
        imag = (-1) ** e1 * (R(0, 2) - R(2, 0) + sign * (R(1, 3) - R(3, 1)))
    else:
        t2 = (t0 + inp.lam) % inp.n

        def R(i, j):
            return cross_correlation(a[i], a[j], t2).re

        real = (-1) ** e0 * (R(0, 1) + R(1, 0) + sign * (R(2, 3) + R(3, 2)))
        imag = (-1) ** e2 * (R(0, 3) - R(3, 0) + sign * (R(1, 2) - R(2, 1)))
    return GaussianInt(real, imag).halve()


@dataclass(frozen=True)
class Corollary1Verdict:
    ok: bool
    condition: int | None = None
    tau0: int | None = None
    value: int | None = None

    def __bool__(self):
        return self.ok


def corollary1_check(inp: ConstructionInput) -> Corollary1Verdict:
    """Sufficient conditions for R_max(u) = 2, checked on the columns.

    1, 2 concern even shifts (tau0 = 1..n-1); 3, 4 odd shifts (tau0 = 0..n-1).
    Sums in 1 and 3 must lie in {0, +-4}; the antisymmetric sums in 2 and 4
    must vanish. On failure the first offending condition and tau0 are kept.
    """
    a = inp.columns
    n = inp.n
    sign = -1 if inp.parity else 1
    allowed = (0, 4, -4)
    spectra = {
        (i, j): cross_spectrum(a[i], a[j]).real_parts() for i in range(4) for j in range(4)
    }

    def R(i, j, t):
        return spectra[i, j][t]

    for t in range(1, n):
        v = R(0, 0, t) + R(1, 1, t) + R(2, 2, t) + R(3, 3, t)
        if v not in allowed:
            return Corollary1Verdict(False, 1, t, v)
        v = R(0, 2, t) - R(2, 0, t) + sign * (R(1, 3, t) - R(3, 1, t))
        if v != 0:
            return Corollary1Verdict(False, 2, t, v)
    for t in range(n):
        v = R(0, 1, t) + R(1, 0, t) + sign * (R(2, 3, t) + R(3, 2, t))
        if v not in allowed:
            return Corollary1Verdict(False, 3, t, v)
        v = R(0, 3, t) - R(3, 0, t) + sign * (R(1, 2, t) - R(2, 1, t))
        if v != 0:
            return Corollary1Verdict(False, 4, t, v)
    return Corollary1Verdict(True)


def e_triples(parity: int | None = None) -> list[tuple[int, int, int]]:
    return [e for e in product((0, 1), repeat=3) if parity is None or sum(e) % 2 == parity]


def infer_e(a0, a1, a2, a3, u: QuaternarySequence) -> list[tuple[int, int, int]]:
    """Every e for which Construction I reproduces ``u`` exactly."""
    return [e for e in e_triples() if construct(ConstructionInput(a0, a1, a2, a3, e)) == u]


@dataclass(frozen=True)
class SpectrumPattern:
    """Promised out-of-phase autocorrelation of u.

    ideal:   -2 at even shifts, 0 at odd shifts
    modulus: at even tau = 2*tau0, -2 when tau0 = 0 mod M and +2 otherwise; 0 at odd
    pm2:     +2 or -2 at every shift
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("ideal", "modulus", "pm2"):
            raise DomainError(f"unknown pattern kind {self.kind!r}")
        if (self.kind == "modulus") != (self.modulus is not None):
            raise DomainError("modulus is required exactly for the modulus pattern")

    def allowed(self, tau: int) -> tuple[GaussianInt, ...]:
        if self.kind == "pm2":
            return (GaussianInt(2), GaussianInt(-2))
        if tau % 2:
            return (GaussianInt(0),)
        if self.kind == "ideal":
            return (GaussianInt(-2),)
        return (GaussianInt(-2 if (tau // 2) % self.modulus == 0 else 2),)

    def describe(self, tau: int) -> str:
        return "|".join(str(v) for v in self.allowed(tau))

    def to_json(self):
        return {"kind": self.kind, "modulus": self.modulus}


@dataclass(frozen=True)
class PatternVerdict:
    ok: bool
    mismatches: tuple[tuple[int, str, GaussianInt], ...]
    r_max_squared: int

    def __bool__(self):
        return self.ok


def verify_pattern(u: QuaternarySequence, pattern: SpectrumPattern) -> PatternVerdict:
    if len(u) % 2:
        raise DomainError("pattern verification needs even length")
    spec = auto_spectrum(u)
    bad = tuple(
        (tau, pattern.describe(tau), spec[tau])
        for tau in range(1, len(spec))
        if spec[tau] not in pattern.allowed(tau)
    )
    return PatternVerdict(not bad, bad, r_max_squared(spec))


@dataclass(frozen=True)
class TheoremCatalogEntry:
    id: str
    requirements: str
    e_parity: int
    fixed_e: tuple[int, int, int] | None
    tuples: tuple[tuple, ...]
    pattern_kind: str


def _tuples(text: str) -> tuple[tuple[int, ...], ...]:
    out = []
    for chunk in text.split(";"):
        out.append(tuple(int(v) for v in chunk.split(",")))
    return tuple(out)


_PAIR_TUPLES = (("s", "t", "s", "t"), ("s", "t", "t", "s"), ("t", "s", "t", "s"), ("t", "s", "s", "t"))

THEOREMS = {
    "T2": TheoremCatalogEntry(
        "T2", "one ideal sequence of length 2^m - 1 used for all four columns",
        1, (0, 0, 1), (("a", "a", "a", "a"),), "ideal"),
    "T3": TheoremCatalogEntry(
        "T3", "two ideal sequences a, b of equal length; a0 = a1 = a, a2 = a3 = b",
        1, (0, 0, 1), (("a", "a", "b", "b"),), "ideal"),
    "T4": TheoremCatalogEntry(
        "T4", "Legendre pair of odd prime length p", 1, (0, 0, 1), _PAIR_TUPLES, "ideal"),
    "T5": TheoremCatalogEntry(
        "T5", "twin-prime pair of length p(p+2); e parity 1", 1, None, _PAIR_TUPLES, "modulus"),
    "T6": TheoremCatalogEntry(
        "T6", "GMW pair of length 2^(2k) - 1; e parity 1", 1, None, _PAIR_TUPLES, "modulus"),
    "T7": TheoremCatalogEntry(
        "T7", "f odd, y = -1; e parity 0", 0, None,
        _tuples("2,1,2,1;1,2,1,2;6,2,6,2;2,6,2,6;5,4,5,4;4,5,4,5;3,5,3,5;5,3,5,3"), "pm2"),
    "T8": TheoremCatalogEntry(
        "T8", "f odd, y = -1; e parity 0", 0, None,
        _tuples("1,2,2,1;2,1,1,2;2,6,6,2;6,2,2,6;4,5,5,4;5,4,4,5;5,3,3,5;3,5,5,3"), "pm2"),
    "T9": TheoremCatalogEntry(
        "T9", "f odd, y = -1; e parity 1", 1, None,
        _tuples("2,1,6,2;2,6,1,2;5,3,4,5;5,4,3,5;6,2,2,1;1,2,2,6;3,5,5,4;4,5,5,3"), "pm2"),
    "T10": TheoremCatalogEntry(
        "T10", "f even, x = +-1; e parity 0", 0, None,
        _tuples(
            "6,3,4,1;6,4,3,1;4,6,3,1;3,6,4,1;"
            "4,1,6,3;6,4,1,3;1,4,6,3;4,6,1,3;"
            "3,1,6,4;6,3,1,4;1,3,6,4;3,6,1,4;"
            "4,1,3,6;3,1,4,6;1,3,4,6;1,4,3,6"
        ), "pm2"),
}


def pattern_for(theorem: str, modulus: int | None = None) -> SpectrumPattern:
    kind = THEOREMS[theorem].pattern_kind
    return SpectrumPattern(kind, modulus if kind == "modulus" else None)


@dataclass(frozen=True)
class CatalogCase:
    theorem: str
    index: int
    labels: tuple[str, ...]
    input: ConstructionInput
    pattern: SpectrumPattern
    parameters: dict = field(default_factory=dict, compare=False, hash=False)


def _label(v) -> str:
    return f"s{v}" if isinstance(v, int) else v


def _resolve_e(entry: TheoremCatalogEntry, e, sweep_e: bool):
    if entry.fixed_e is not None:
        if e is not None and tuple(e) != entry.fixed_e:
            raise DomainError(f"{entry.id} requires e = {entry.fixed_e}")
        return [entry.fixed_e]
    if sweep_e:
        return e_triples(entry.e_parity)
    if e is None:
        return [(0, 0, 1) if entry.e_parity else (0, 0, 0)]
    e = tuple(int(b) for b in e)
    if sum(e) % 2 != entry.e_parity:
        raise DomainError(f"{entry.id} requires e with parity {entry.e_parity}, got {e}")
    return [e]


def _quartic_system(theorem: str, n, system: QuarticSystem | None) -> QuarticSystem:
    need_odd = theorem != "T10"
    if system is None:
        if n is None:
            raise DomainError(f"{theorem} needs n or a quartic system")
        n = int(n)
        if not is_prime(n) or n % 4 != 1:
            raise DomainError(f"{theorem}: n={n} must be a prime = 1 mod 4")
        f_odd = ((n - 1) // 4) % 2 == 1
        if f_odd != need_odd:
            raise DomainError(f"{theorem} requires f {'odd' if need_odd else 'even'}; n={n} has f {'odd' if f_odd else 'even'}")
        return select_system_for_convention(n, "y=-1" if need_odd else "x=±1")
    if system.f_is_odd != need_odd:
        raise DomainError(f"{theorem} requires f {'odd' if need_odd else 'even'}")
    if need_odd and system.y != -1:
        raise DomainError(f"{theorem} requires y = -1, system has y = {system.y}")
    if not need_odd and system.x not in (1, -1):
        raise DomainError(f"{theorem} requires x = +-1, system has x = {system.x}")
    return system


def catalog(theorem: str, *, e=None, sweep_e: bool = False, **params) -> list[CatalogCase]:
    """Every admissible input of a theorem, each paired with its promised spectrum.

    Parameters by theorem: T2 ``m`` (or ``sequence``); T3 ``m`` (or
    ``sequences=(a, b)``); T4/T5 ``p``; T6 ``k`` (optional ``poly`` bit
    string); T7-T10 ``n`` (or ``system``).
    """
    theorem = theorem.upper()
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; expected T2..T10")
    entry = THEOREMS[theorem]
    es = _resolve_e(entry, e, sweep_e)
    modulus = None
    meta: dict = {}

    if theorem == "T2":
        a = params.get("sequence")
        if a is None:
            m = int(params.get("m", 0))
            a = m_sequence(BinaryFieldSpec.default(m) if "poly" not in params
                           else BinaryFieldSpec.from_bits(params["poly"]))
            meta["m"] = m
        n = len(a)
        if (n + 1) & n or not is_ideal(a):
            raise DomainError("T2 requires an ideal sequence of length 2^m - 1")
        roles = {"a": a}
    elif theorem == "T3":
        seqs = params.get("sequences")
        if seqs is None:
            m = int(params.get("m", 0))
            spec = BinaryFieldSpec.default(m)
            reciprocal = BinaryFieldSpec.from_bits(spec.bits[::-1])
            seqs = (m_sequence(spec), m_sequence(reciprocal))
            meta["m"] = m
        a, b = seqs
        if len(a) != len(b) or not (is_ideal(a) and is_ideal(b)):
            raise DomainError("T3 requires two ideal sequences of the same length")
        roles = {"a": a, "b": b}
    elif theorem in ("T4", "T5", "T6"):
        if theorem == "T4":
            pair = legendre_pair(int(params["p"]))
        elif theorem == "T5":
            pair = twin_prime_pair(int(params["p"]))
            modulus = int(params["p"]) + 2
        else:
            k = int(params["k"])
            spec = BinaryFieldSpec.from_bits(params["poly"]) if params.get("poly") else None
            pair = gmw_pair(k, spec)
            modulus = (1 << k) + 1
        meta.update(pair.parameters)
        roles = {"s": pair.first, "t": pair.second}
    else:
        system = _quartic_system(theorem, params.get("n"), params.get("system"))
        meta.update(n=system.n, alpha=system.generator, x=system.x, y=system.y)
        roles = dict(enumerate(six_sequences(system), start=1))

    pattern = pattern_for(theorem, modulus)
    cases = []
    for labels in entry.tuples:
        for ev in es:
            inp = ConstructionInput(*(roles[r] for r in labels), e=ev)
            cases.append(CatalogCase(
                theorem, len(cases), tuple(_label(r) for r in labels), inp, pattern, dict(meta)
            ))
    return cases


def verify_case(case: CatalogCase) -> dict:
    """JSON-ready verification report for one catalog case."""
    u = construct(case.input)
    verdict = verify_pattern(u, case.pattern)
    return {
        "theorem": case.theorem,
        "index": case.index,
        "n": case.input.n,
        "N": case.input.N,
        "tuple": list(case.labels),
        "e": list(case.input.e),
        "optimal": verdict.r_max_squared == 4,
        "r_max_squared": verdict.r_max_squared,
        "pattern": case.pattern.to_json(),
        "pattern_ok": verdict.ok,
        "mismatches": [[tau, want, got.to_json()] for tau, want, got in verdict.mismatches],
    }
