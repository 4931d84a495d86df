"""Quartic cyclotomy over a prime n = 4f + 1 and the six two-class sequences.

For a generator ``alpha`` of Z_n^* the classes are C_k = {alpha^(4j+k)}. The
cyclotomic number (i, j) counts z in C_i with z + 1 in C_j. Writing
n = x^2 + 4y^2, all sixteen numbers are affine in (n, x, y) with two layouts
depending on the parity of f. The sign of y depends on which generator was
picked, so (x, y) are read back from directly counted numbers instead of
being derived from a separate sum-of-squares decomposition.

Sequence s_k (k = 1..6) has support C_a U C_b for the k-th pair (a, b) in
SUPPORT_CLASSES. Their correlations are constant on each class and given by
CORRELATION_TABLES; a class-shift symmetry extends the tables from i <= j to
all ordered pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ConventionError, DomainError, InvariantError
from .numtheory import is_generator, is_prime
from .seqcore import BinarySequence, from_support

__all__ = [
    "SUPPORT_CLASSES",
    "CyclotomicNumberTable",
    "QuarticSystem",
    "find_generator",
    "build_system",
    "count_cyclotomic_numbers",
    "closed_form_letters",
    "cyclotomic_numbers_closed_form",
    "select_system_for_convention",
    "six_sequences",
    "delta",
    "predicted_correlation",
    "system_report",
]

SUPPORT_CLASSES = {1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 2), 5: (1, 3), 6: (2, 3)}


@dataclass(frozen=True)
class CyclotomicNumberTable:
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i % 4][j % 4]

    def to_json(self):
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class QuarticSystem:
    n: int
    generator: int
    classes: tuple[tuple[int, ...], ...]
    x: int
    y: int
    table: CyclotomicNumberTable

    @property
    def f(self) -> int:
        return (self.n - 1) // 4

    @property
    def f_is_odd(self) -> bool:
        return self.f % 2 == 1

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        """class_index[v] = k with v in C_k; -1 for v = 0."""
        idx = [-1] * self.n
        for k, members in enumerate(self.classes):
            for v in members:
                idx[v] = k
        return tuple(idx)

    def class_of(self, v: int) -> int:
        k = self.class_index[v % self.n]
        if k < 0:
            raise DomainError("0 belongs to no cyclotomic class")
        return k


def find_generator(n: int) -> int:
    """Smallest generator >= 2 of Z_n^*."""
    if n < 3 or not is_prime(n):
        raise DomainError(f"n={n} is not an odd prime")
    for a in range(2, n):
        if is_generator(a, n):
            return a
    raise InvariantError(f"no generator found mod {n}")


def _quartic_classes(n: int, alpha: int) -> tuple[tuple[int, ...], ...]:
    f = (n - 1) // 4
    classes = []
    for k in range(4):
        start = pow(alpha, k, n)
        step = pow(alpha, 4, n)
        members, v = [], start
        for _ in range(f):
            members.append(v)
            v = v * step % n
        classes.append(tuple(sorted(members)))
    return tuple(classes)


def count_cyclotomic_numbers(n: int, classes) -> CyclotomicNumberTable:
    """(i, j) = |(C_i + 1) ∩ C_j| by direct counting."""
    where = {}
    for k, members in enumerate(classes):
        for v in members:
            where[v] = k
    entries = [[0] * 4 for _ in range(4)]
    for i, members in enumerate(classes):
        for v in members:
            w = (v + 1) % n
            if w:
                entries[i][where[w]] += 1
    return CyclotomicNumberTable(tuple(tuple(r) for r in entries))


def _recover_xy(n: int, table: CyclotomicNumberTable) -> tuple[int, int]:
    f = (n - 1) // 4
    if f % 2:
        # (0,2) = (n+1-6x)/16, (0,1) = (n+1+2x-8y)/16
        x = Fraction(n + 1 - 16 * table[0, 2], 6)
        y = Fraction(n + 1 + 2 * x - 16 * table[0, 1], 8)
    else:
        # (0,2) = (n-3+2x)/16, (0,1) = (n-3+2x+8y)/16
        x = Fraction(16 * table[0, 2] - n + 3, 2)
        y = Fraction(16 * table[0, 1] - n + 3 - 2 * x, 8)
    if x.denominator != 1 or y.denominator != 1:
        raise InvariantError(f"non-integral (x, y) = ({x}, {y}) for n={n}")
    x, y = int(x), int(y)
    if x * x + 4 * y * y != n:
        raise InvariantError(f"recovered (x, y) = ({x}, {y}) but x^2+4y^2 != {n}")
    return x, y


def build_system(n: int, alpha: int | None = None) -> QuarticSystem:
    if n < 5 or not is_prime(n):
        raise DomainError(f"n={n} is not an odd prime")
    if n % 4 != 1:
        raise DomainError(f"n={n} is not 1 mod 4")
    if alpha is None:
        alpha = find_generator(n)
    if not is_generator(alpha, n):
        raise DomainError(f"alpha={alpha} does not generate Z_{n}^*")
    classes = _quartic_classes(n, alpha)
    table = count_cyclotomic_numbers(n, classes)
    x, y = _recover_xy(n, table)
    return QuarticSystem(n, alpha, classes, x, y, table)


def closed_form_letters(system: QuarticSystem) -> dict[str, int]:
    n, x, y = system.n, system.x, system.y
    if system.f_is_odd:
        raw = {
            "A": n - 7 + 2 * x,
            "B": n + 1 + 2 * x - 8 * y,
            "C": n + 1 - 6 * x,
            "D": n + 1 + 2 * x + 8 * y,
            "E": n - 3 - 2 * x,
        }
    else:
        raw = {
            "A": n - 11 - 6 * x,
            "B": n - 3 + 2 * x + 8 * y,
            "C": n - 3 + 2 * x,
            "D": n - 3 + 2 * x - 8 * y,
            "E": n + 1 - 2 * x,
        }
    letters = {}
    for key, num in raw.items():
        if num % 16 or num < 0:
            raise InvariantError(f"letter {key} = {num}/16 is not a nonnegative integer")
        letters[key] = num // 16
    return letters


_LAYOUT_ODD = ("ABCD", "EEDB", "AEAE", "EDBE")
_LAYOUT_EVEN = ("ABCD", "BDEE", "CECE", "DEEB")


def cyclotomic_numbers_closed_form(system: QuarticSystem) -> CyclotomicNumberTable:
    letters = closed_form_letters(system)
    layout = _LAYOUT_ODD if system.f_is_odd else _LAYOUT_EVEN
    return CyclotomicNumberTable(
        tuple(tuple(letters[c] for c in row) for row in layout)
    )


def _achieves(system: QuarticSystem, target: str) -> bool:
    if target == "y=-1":
        return system.f_is_odd and system.y == -1
    return (not system.f_is_odd) and system.x in (1, -1)


def select_system_for_convention(n: int, target: str) -> QuarticSystem:
    """First generator (ascending) whose recovered (x, y) meets ``target``.

    ``target`` is ``"y=-1"`` (needs f odd) or ``"x=±1"`` (needs f even;
    ``"x=+-1"`` is accepted too).
    """
    target = {"x=+-1": "x=±1", "x=pm1": "x=±1"}.get(target, target)
    if target not in ("y=-1", "x=±1"):
        raise DomainError(f"unknown convention target {target!r}")
    seen = []
    base = build_system(n)
    for alpha in range(2, n):
        if not is_generator(alpha, n):
            continue
        system = base if alpha == base.generator else build_system(n, alpha)
        if _achieves(system, target):
            return system
        if (system.x, system.y) not in seen:
            seen.append((system.x, system.y))
    parity = "odd" if base.f_is_odd else "even"
    raise ConventionError(
        f"convention {target} unreachable for n={n} (f {parity}); "
        f"achievable (x, y): {seen}",
        tried=seen,
    )


def six_sequences(system: QuarticSystem) -> tuple[BinarySequence, ...]:
    """(s_1, ..., s_6) as a tuple; s_k sits at index k-1."""
    out = []
    for k in range(1, 7):
        a, b = SUPPORT_CLASSES[k]
        out.append(from_support(system.n, system.classes[a] + system.classes[b]))
    return tuple(out)


def _class_order(k: int) -> tuple[int, int, int, int]:
    a, b = SUPPORT_CLASSES[k]
    return (a, b) + tuple(c for c in range(4) if c not in (a, b))


def delta(system: QuarticSystem, i: int, j: int, tau: int) -> int:
    """Signed count over positions m with m and m + tau both nonzero.

    Each of the 16 class pairs (C_p for m, C_q for m + tau) contributes
    +/- the cyclotomic number (p - k, q - k), k being the class of tau; the
    sign is + when m and m + tau are both inside or both outside their supports.
    """
    if tau % system.n == 0:
        raise DomainError("delta is defined for tau != 0")
    k = system.class_of(tau)
    rows, cols = _class_order(i), _class_order(j)
    total = 0
    for l, p in enumerate(rows):
        for m, q in enumerate(cols):
            sign = 1 if (l < 2) == (m < 2) else -1
            total += sign * system.table[p - k, q - k]
    return total


_TERM = re.compile(r"([+-]?)(\d*)([xy]?)")


def _affine(expr: str) -> tuple[int, int, int]:
    cx = cy = c = 0
    for sign, digits, var in _TERM.findall(expr.replace(" ", "")):
        if not digits and not var:
            continue
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        if var == "x":
            cx += coef
        elif var == "y":
            cy += coef
        else:
            c += coef
    return cx, cy, c


def _table(rows: dict) -> dict:
    return {key: tuple(_affine(e) for e in value.split(",")) for key, value in rows.items()}


# Values on C_0, C_1, C_2, C_3 for i <= j.
CORRELATION_TABLES = {
    "odd": _table({
        (1, 1): "-2y-1, 2y-1, -2y-1, 2y-1",
        (2, 2): "-3, 1, -3, 1",
        (3, 3): "2y-1, -2y-1, 2y-1, -2y-1",
        (4, 4): "2y-1, -2y-1, 2y-1, -2y-1",
        (5, 5): "1, -3, 1, -3",
        (6, 6): "-2y-1, 2y-1, -2y-1, 2y-1",
        (1, 2): "-x+2y, x+2y+2, x-2y-2, -x-2y",
        (1, 3): "x, -x+2, x, -x-2",
        (1, 4): "-x+2, x, -x-2, x",
        (1, 5): "x-2y+2, -x-2y, -x+2y, x+2y-2",
        (1, 6): "2y+3, 3-2y, 2y-1, -1-2y",
        (2, 3): "x+2y-2, x-2y+2, -x-2y, -x+2y",
        (2, 4): "-x-2y, -x+2y, x+2y-2, x-2y+2",
        (2, 5): "1, 1, 1, 1",
        (2, 6): "2y-x, x+2y+2, x-2y-2, -x-2y",
        (3, 4): "3-2y, 2y-1, -1-2y, 3+2y",
        (3, 5): "x+2y+2, x-2y-2, -x-2y, -x+2y",
        (3, 6): "-x+2, x, -x-2, x",
        (4, 5): "-x-2y, -x+2y, x+2y+2, x-2y-2",
        (4, 6): "x, -x+2, x, -x-2",
        (5, 6): "x-2y+2, -x-2y, -x+2y, x+2y-2",
    }),
    "even": _table({
        (1, 1): "2y-3, -3-2y, 1+2y, 1-2y",
        (2, 2): "-3, 1, -3, 1",
        (3, 3): "-2y-3, 2y+1, -2y+1, 2y-3",
        (4, 4): "-2y+1, 2y-3, -2y-3, 2y+1",
        (5, 5): "1, -3, 1, -3",
        (6, 6): "2y+1, -2y+1, 2y-3, -2y-3",
        (1, 2): "-x+2y-2, x+2y, x-2y, -x-2y+2",
        (1, 3): "-x-2, x, -x+2, x",
        (1, 4): "x, -x-2, x, -x+2",
        (1, 5): "x-2y, -x-2y-2, -x+2y+2, x+2y",
        (1, 6): "1-2y, 1+2y, 1-2y, 1+2y",
        (2, 3): "-x-2y-2, -x+2y+2, x+2y, x-2y",
        (2, 4): "x+2y, x-2y, -x-2y-2, -x+2y+2",
        (2, 5): "1, 1, 1, 1",
        (2, 6): "x-2y, -x-2y+2, -x+2y-2, x+2y",
        (3, 4): "1+2y, 1-2y, 1+2y, 1-2y",
        (3, 5): "x+2y, x-2y, -x-2y+2, -x+2y-2",
        (3, 6): "x, -x+2, x, -x-2",
        (4, 5): "-x-2y+2, -x+2y-2, x+2y, x-2y",
        (4, 6): "-x+2, x, -x-2, x",
        (5, 6): "-x+2y+2, x+2y, x-2y, -x-2y-2",
    }),
}


def predicted_correlation(system: QuarticSystem, i: int, j: int, tau: int) -> int:
    """R_{s_i,s_j}(tau) from the closed-form tables (no summation)."""
    if i not in SUPPORT_CLASSES or j not in SUPPORT_CLASSES:
        raise DomainError("sequence indices run 1..6")
    tau %= system.n
    if tau == 0:
        if i == j:
            return system.n
        if i + j == 7:
            return 2 - system.n
        return 1
    k = system.class_of(tau)
    if i > j:
        i, j = j, i
        if system.f_is_odd:
            k = (k + 2) % 4
    cx, cy, c = CORRELATION_TABLES["odd" if system.f_is_odd else "even"][i, j][k]
    return cx * system.x + cy * system.y + c


def system_report(system: QuarticSystem) -> dict:
    closed = cyclotomic_numbers_closed_form(system)
    return {
        "n": system.n,
        "f": system.f,
        "alpha": system.generator,
        "x": system.x,
        "y": system.y,
        "classes": [list(c) for c in system.classes],
        "cyclotomic_numbers": system.table.to_json(),
        "closed_form": closed.to_json(),
        "closed_form_matches": closed == system.table,
    }
