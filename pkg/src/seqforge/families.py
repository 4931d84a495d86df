"""Binary component families: m-sequences, Legendre, twin-prime and GMW pairs.

The pair families are only loosely pinned down in the literature (which value
sits at index 0, which residue class carries the ones, where the companion
sequence differs). Each generator therefore tries a short, fixed list of
conventions and keeps the first one whose Construction I output shows the
spectrum the matching theorem promises. The chosen convention is stored in
``SequencePair.parameters``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .errors import ConventionError, DomainError
from .numtheory import is_prime, legendre_symbol, prime_factors
from .seqcore import BinarySequence, auto_spectrum, parse_sequence, format_sequence

__all__ = [
    "DEFAULT_PRIMITIVE_POLYNOMIALS",
    "BinaryFieldSpec",
    "SequencePair",
    "PairFormatError",
    "m_sequence",
    "is_ideal",
    "legendre_pair",
    "twin_prime_pair",
    "gmw_pair",
    "pair_passes_theorem",
    "format_pair",
    "parse_pair",
    "save_pair",
    "load_pair",
]

# Bit i is the coefficient of x^i.
DEFAULT_PRIMITIVE_POLYNOMIALS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


@dataclass(frozen=True)
class BinaryFieldSpec:
    """GF(2^m) as GF(2)[x] modulo a primitive polynomial.

    Elements are ints whose bit i is the coefficient of x^i; ``alpha`` is x.
    """

    m: int
    polynomial: int

    def __post_init__(self):
        if self.m < 2:
            raise DomainError("extension degree must be >= 2")
        if self.polynomial.bit_length() - 1 != self.m:
            raise DomainError(
                f"polynomial {self.bits} has degree {self.polynomial.bit_length() - 1}, expected {self.m}"
            )
        order = (1 << self.m) - 1
        if self.power(2, order) != 1 or any(
            self.power(2, order // q) == 1 for q in prime_factors(order)
        ):
            raise DomainError(f"polynomial {self.bits} is not primitive")

    @classmethod
    def default(cls, m: int) -> BinaryFieldSpec:
        if m not in DEFAULT_PRIMITIVE_POLYNOMIALS:
            raise DomainError(f"no built-in primitive polynomial for m={m}")
        return cls(m, DEFAULT_PRIMITIVE_POLYNOMIALS[m])

    @classmethod
    def from_bits(cls, bits: str | Iterable[int]) -> BinaryFieldSpec:
        """Coefficients highest degree first, e.g. "1000011" for x^6 + x + 1."""
        if isinstance(bits, str):
            bits = bits.strip()
            if not bits or set(bits) - {"0", "1"}:
                raise DomainError(f"bad polynomial bit string {bits!r}")
            coeffs = [int(b) for b in bits]
        else:
            coeffs = [int(b) for b in bits]
        value = 0
        for c in coeffs:
            value = (value << 1) | c
        return cls(value.bit_length() - 1, value)

    @property
    def bits(self) -> str:
        return format(self.polynomial, "b")

    def mul(self, a: int, b: int) -> int:
        result = 0
        top = 1 << self.m
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.polynomial
        return result

    def power(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)); always 0 or 1."""
        t, acc = a, 0
        for _ in range(self.m):
            acc ^= t
            t = self.mul(t, t)
        return acc


def m_sequence(spec: BinaryFieldSpec) -> BinarySequence:
    """s(i) = Tr(alpha^i), i = 0 .. 2^m - 2."""
    # Trace is GF(2)-linear: precompute it on the basis x^j.
    mask = 0
    for j in range(spec.m):
        if spec.trace(1 << j):
            mask |= 1 << j
    out = []
    a = 1
    for _ in range((1 << spec.m) - 1):
        out.append(bin(a & mask).count("1") & 1)
        a = spec.mul(a, 2)
    return BinarySequence(out)


def is_ideal(s: BinarySequence) -> bool:
    """Every out-of-phase autocorrelation equals -1."""
    if len(s) % 2 == 0:
        raise DomainError("ideal autocorrelation is defined for odd length")
    return all(v == -1 for v in auto_spectrum(s).off_phase())


@dataclass(frozen=True)
class SequencePair:
    first: BinarySequence
    second: BinarySequence
    family_tag: str
    parameters: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if len(self.first) != len(self.second):
            raise DomainError(
                f"pair length mismatch: {len(self.first)} vs {len(self.second)}"
            )

    @property
    def length(self) -> int:
        return len(self.first)


def pair_passes_theorem(first, second, theorem: str, modulus: int | None = None) -> bool:
    """Run every admissible tuple of a pair theorem through Construction I."""
    from .construction import THEOREMS, ConstructionInput, construct, pattern_for, verify_pattern

    entry = THEOREMS[theorem]
    e = (0, 0, 1)  # parity 1, and the fixed e of the Legendre theorem
    pattern = pattern_for(theorem, modulus)
    roles = {"s": first, "t": second}
    for labels in entry.tuples:
        inp = ConstructionInput(*(roles[r] for r in labels), e=e)
        if not verify_pattern(construct(inp), pattern).ok:
            return False
    return True


def legendre_pair(p: int) -> SequencePair:
    """Quadratic-residue / non-residue pair of prime length p.

    Off index 0 the two sequences are complementary. The values at index 0
    are the first (first(0), second(0)) in (0,0), (0,1), (1,0), (1,1) that
    passes the Legendre-pair theorem; that is (0, 0) for p = 1 mod 4 and
    (0, 1) for p = 3 mod 4.
    """
    if p < 3 or not is_prime(p):
        raise DomainError(f"p={p} is not an odd prime")
    qr = [legendre_symbol(i, p) == 1 for i in range(p)]
    tried = []
    for v_first, v_second in product((0, 1), repeat=2):
        first = BinarySequence([v_first] + [int(qr[i]) for i in range(1, p)])
        second = BinarySequence([v_second] + [int(not qr[i]) for i in range(1, p)])
        tried.append({"first_at_0": v_first, "second_at_0": v_second})
        if pair_passes_theorem(first, second, "T4"):
            return SequencePair(
                first, second, "legendre",
                {"p": p, "first_at_0": v_first, "second_at_0": v_second},
            )
    raise ConventionError(f"pair convention mismatch for Legendre p={p}", tried=tried)


def _twin_prime_base(p: int, at_zero: int, at_p: int, at_q: int) -> list[int]:
    q = p + 2
    out = []
    for i in range(p * q):
        if i == 0:
            out.append(at_zero)
        elif i % q == 0:
            out.append(at_q)
        elif i % p == 0:
            out.append(at_p)
        else:
            out.append(int(legendre_symbol(i, p) * legendre_symbol(i, q) == -1))
    return out


def twin_prime_pair(p: int) -> SequencePair:
    """Twin-prime sequence of length p(p+2) and its companion.

    The base sequence is 1 where (i|p)(i|p+2) = -1; the fixed positions
    (0, multiples of p, multiples of p+2) follow a convention searched in
    order, starting from the classical ideal one (0, 1, 0). The companion is
    the base complemented on the multiples of p+2.
    """
    if not (is_prime(p) and is_prime(p + 2)):
        raise DomainError(f"p={p}, p+2={p + 2} are not both prime")
    q = p + 2
    variants = [(0, 1, 0)] + [v for v in product((0, 1), repeat=3) if v != (0, 1, 0)]
    tried = []
    for at_zero, at_p, at_q in variants:
        base = _twin_prime_base(p, at_zero, at_p, at_q)
        first = BinarySequence(base)
        second = BinarySequence(
            b ^ 1 if i % q == 0 else b for i, b in enumerate(base)
        )
        tried.append({"at_0": at_zero, "at_multiples_of_p": at_p, "at_multiples_of_p+2": at_q})
        if pair_passes_theorem(first, second, "T5", modulus=q):
            return SequencePair(
                first, second, "twin_prime",
                {"p": p, "at_0": at_zero, "at_p": at_p, "at_q": at_q},
            )
    raise ConventionError(f"pair construction unresolved for twin primes p={p}", tried=tried)


def gmw_pair(k: int, spec: BinaryFieldSpec | None = None) -> SequencePair:
    """m-sequence over GF(2^(2k)) and its companion complemented at multiples of 2^k + 1."""
    if k < 2:
        raise DomainError("GMW pairs need k >= 2")
    if spec is None:
        spec = BinaryFieldSpec.default(2 * k)
    if spec.m != 2 * k:
        raise DomainError(f"field degree {spec.m} != 2k = {2 * k}")
    modulus = (1 << k) + 1
    first = m_sequence(spec)
    second = BinarySequence(
        b ^ 1 if i % modulus == 0 else b for i, b in enumerate(first)
    )
    if not pair_passes_theorem(first, second, "T6", modulus=modulus):
        from .construction import ConstructionInput, construct, pattern_for, verify_pattern

        inp = ConstructionInput(first, second, first, second, e=(0, 0, 1))
        bad = verify_pattern(construct(inp), pattern_for("T6", modulus)).mismatches
        raise ConventionError(
            f"pair construction unresolved for GMW k={k}",
            tried=[{"failing_shifts": [m[0] for m in bad]}],
        )
    return SequencePair(first, second, "gmw", {"k": k, "poly": spec.bits})


class PairFormatError(DomainError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _encode_params(params: dict) -> str:
    return ",".join(f"{k}:{v}" for k, v in params.items())


def _decode_params(text: str, line: int) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition(":")
        if not sep or not key:
            raise PairFormatError(f"bad parameter {item!r}", line)
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def format_pair(pair: SequencePair) -> str:
    params = dict(pair.parameters)
    tag = pair.family_tag
    if tag == "fixture" and "source_family" in params:
        tag = params.pop("source_family")
    header = f"n={pair.length} family={tag} params={_encode_params(params)}"
    return "\n".join([header, format_sequence(pair.first), format_sequence(pair.second)]) + "\n"


def parse_pair(text: str) -> SequencePair:
    """Parse the three-line pair format; loaded pairs are tagged ``fixture``."""
    lines = text.splitlines()
    if len(lines) < 3:
        raise PairFormatError(f"expected 3 lines, got {len(lines)}", len(lines) + 1)
    fields = {}
    for token in lines[0].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise PairFormatError(f"bad header token {token!r}", 1)
        fields[key] = value
    for key in ("n", "family", "params"):
        if key not in fields:
            raise PairFormatError(f"header missing {key}=", 1)
    try:
        n = int(fields["n"])
    except ValueError:
        raise PairFormatError(f"bad length {fields['n']!r}", 1) from None
    params = {"source_family": fields["family"]}
    params.update(_decode_params(fields["params"], 1))
    seqs = []
    for lineno in (2, 3):
        try:
            seqs.append(parse_sequence(lines[lineno - 1], kind="binary"))
        except DomainError as exc:
            raise PairFormatError(str(exc), lineno) from None
    if len(seqs[0]) != len(seqs[1]):
        raise DomainError(f"pair length mismatch: {len(seqs[0])} vs {len(seqs[1])}")
    if len(seqs[0]) != n:
        raise PairFormatError(f"header says n={n}, sequences have {len(seqs[0])}", 1)
    return SequencePair(seqs[0], seqs[1], "fixture", params)


def save_pair(pair: SequencePair, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_pair(pair))


def load_pair(path) -> SequencePair:
    with open(os.fspath(path), encoding="ascii") as fh:
        return parse_pair(fh.read())
