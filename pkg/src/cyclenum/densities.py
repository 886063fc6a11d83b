"""Exact densities of the arrangement classes inside the all-plus pattern.

For the word of n plus signs the pattern class is counted by a zigzag
number, and each of the six arrangement classes takes up an exact rational
share of it.  This module computes those shares with big-integer arithmetic
(no floating point enters the counts), expands them to fixed-point decimals,
and compares them against the conjectured limiting values

    1/pi,  1/2 - 1/pi,  2/pi - 1/2,  2/pi - 1/2,  1/2 - 1/pi,  1 - 3/pi

for arrangements 1..6, plus 2/pi for the positive wrap class and 1/2 for the
doubly-positive wrap class.  The limits themselves are conjectural; what is
computed here is the exact finite-n deviation from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .boustrophedon import (
    arc_pair,
    arc_tetrahedra,
    arc_triangles,
    initial_tetrahedra,
    step_pair,
    step_tetrahedra,
)
from .orders import PLUS


def fraction_decimal(value: Fraction, digits: int = 15) -> str:
    """Fixed-point decimal expansion, correctly rounded (half away from zero).

    Uses scaled integer division only, so the result is exact to the last
    printed digit no matter how large numerator and denominator are.
    """
    if digits < 1:
        raise ValueError("need at least one digit")
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    scaled, rem = divmod(abs(num) * 10**digits, den)
    if 2 * rem >= den:
        scaled += 1
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


@dataclass(frozen=True)
class DensityRow:
    """Exact arrangement densities for the all-plus word of length ``n``.

    ``fractions[a-1]`` is the share of arrangement a in the pattern class;
    the six fractions add up to 1 exactly.  ``decimals`` carries fixed-point
    expansions of the same values.
    """

    n: int
    fractions: tuple[Fraction, ...]
    decimals: tuple[str, ...]


def density_rows(max_n: int, digits: int = 15, method: str = "fast") -> list[DensityRow]:
    """Density rows for the all-plus words of lengths 2..max_n.

    One incremental evolution serves all lengths, so the total cost is that
    of the longest word.  Lengths much beyond 200 get slow and memory-hungry.
    """
    if max_n < 2:
        raise ValueError("need max_n >= 2")
    if digits < 1:
        raise ValueError("need at least one digit")
    tetra = initial_tetrahedra("++")
    pair = arc_pair("++", method)
    rows: list[DensityRow] = []
    for n in range(2, max_n + 1):
        if n > 2:
            tetra = step_tetrahedra(tetra, PLUS, method)
            pair = step_pair(pair, PLUS, n + 1, method)
        sums = tuple(poly.total() for poly in tetra)
        pattern_total = pair.total()
        if sum(sums) != pattern_total:
            raise ArithmeticError(
                f"internal inconsistency at n={n}: arrangement sums {sum(sums)} "
                f"!= pattern count {pattern_total}"
            )
        fractions = tuple(Fraction(s, pattern_total) for s in sums)
        decimals = tuple(fraction_decimal(f, digits) for f in fractions)
        rows.append(DensityRow(n, fractions, decimals))
    return rows


def arrangement_limits() -> tuple[float, ...]:
    """Conjectured limiting densities of the six arrangements."""
    inv_pi = 1.0 / math.pi
    return (
        inv_pi,
        0.5 - inv_pi,
        2.0 * inv_pi - 0.5,
        2.0 * inv_pi - 0.5,
        0.5 - inv_pi,
        1.0 - 3.0 * inv_pi,
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Exact finite-n densities next to their conjectured limits.

    ``deviations[a-1]`` is |density(a) - limit(a)| as a float (the densities
    themselves stay exact).  ``wrap_plus`` is the density of the positive
    wrap class, compared against 2/pi; ``double_wrap_plus`` the density of
    the doubly-positive class, compared against 1/2.
    """

    n: int
    densities: tuple[Fraction, ...]
    limits: tuple[float, ...]
    deviations: tuple[float, ...]
    wrap_plus: Fraction
    wrap_plus_limit: float
    wrap_plus_deviation: float
    double_wrap_plus: Fraction
    double_wrap_plus_limit: float
    double_wrap_plus_deviation: float


def conjecture_report(n: int, method: str = "fast") -> ConjectureReport:
    """Compare the exact densities at length ``n`` with the conjectured limits."""
    if n < 2:
        raise ValueError("need n >= 2")
    word = "+" * n
    tetra = arc_tetrahedra(word, method)
    sums = tuple(poly.total() for poly in tetra)
    pattern_total = arc_pair(word, method).total()
    if sum(sums) != pattern_total:
        raise ArithmeticError("arrangement sums disagree with the pattern count")
    wrap_plus_total = arc_triangles(word, method)[0].total()
    densities = tuple(Fraction(s, pattern_total) for s in sums)
    limits = arrangement_limits()
    deviations = tuple(abs(float(d) - lim) for d, lim in zip(densities, limits))
    wrap_plus = Fraction(wrap_plus_total, pattern_total)
    double_wrap_plus = densities[0] + densities[1]
    return ConjectureReport(
        n=n,
        densities=densities,
        limits=limits,
        deviations=deviations,
        wrap_plus=wrap_plus,
        wrap_plus_limit=2.0 / math.pi,
        wrap_plus_deviation=abs(float(wrap_plus) - 2.0 / math.pi),
        double_wrap_plus=double_wrap_plus,
        double_wrap_plus_limit=0.5,
        double_wrap_plus_deviation=abs(float(double_wrap_plus) - 0.5),
    )
