"""Linear evolutions that count cyclic orders with prescribed triple turns.

Let w be a sign word of length n - 2 read as instructions for the triples
(i, i+1, i+2) on [n]: position i says whether (i, i+1, i+2) turns positively
('+') or negatively ('-').  The number of total cyclic orders following w is
computed here in polynomial time by growing, one letter at a time, arrays of
counts refined by the contents of the arcs between a few marked elements:

- a 2-variable pair for the plain pattern count (marks n-1 and n),
- a pair of 3-variable triangles when the turn of the wrap-around triple
  (n-1, n, 1) is also prescribed (marks n-1, n, 1),
- six 4-variable tetrahedra when the turn of (n, 1, 2) is prescribed as well
  (marks n-1, n, 1, 2; six possible circular arrangements of the marks).

Every step is an application of the ``arc_insertion`` operator; the tables
below list which index triples feed each output array.  The classical
boustrophedon (zigzag triangle of Entringer numbers) and the growth of
descent classes of permutations are the 1-dimensional members of the family
and live here too, along with Seidel triangle sequences, which iterate the
same operator on externally supplied triangles.

All counts are exact big integers end to end.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .orders import MINUS, PLUS, check_sign, check_sign_word
from .polynomials import (
    HomoPoly,
    arc_insertion,
    arc_insertion_fast,
    arc_insertion_indexed,
)

StepFn = Callable[[int, int, int, HomoPoly], HomoPoly]

METHODS: dict[str, StepFn] = {
    "fast": arc_insertion_fast,
    "monomial": arc_insertion,
    "indexed": arc_insertion_indexed,
}


def _step_fn(method: str) -> StepFn:
    try:
        return METHODS[method]
    except KeyError:
        raise ValueError(f"method must be one of {sorted(METHODS)}, got {method!r}") from None


# ---------------------------------------------------------------------------
# Pattern counts (2 variables, marks n-1 and n).
#
# Which of the two operator shapes applies alternates with the parity of the
# ground-set size n = len(prefix) + 2 carried by the current word.


def initial_pair(letter: str) -> HomoPoly:
    check_sign(letter)
    return HomoPoly.monomial((1, 0) if letter == PLUS else (0, 1))


def step_pair(poly: HomoPoly, letter: str, ground: int, method: str = "fast") -> HomoPoly:
    """Append ``letter`` to a word whose orders live on ``ground`` elements."""
    check_sign(letter)
    step = _step_fn(method)
    if (ground % 2 == 0) == (letter == PLUS):
        return step(1, 1, 2, poly)
    return step(2, 2, 1, poly)


def arc_pair(word: str, method: str = "fast") -> HomoPoly:
    """2-variable refinement of the pattern count by the arcs between n-1 and n."""
    check_sign_word(word)
    if not word:
        raise ValueError("the word must have at least one letter")
    poly = initial_pair(word[0])
    for offset, letter in enumerate(word[1:]):
        poly = step_pair(poly, letter, offset + 3, method)
    return poly


def count_pattern(word: str, method: str = "fast") -> int:
    """Number of total cyclic orders on [len(word) + 2] following ``word``."""
    return arc_pair(word, method).total()


# ---------------------------------------------------------------------------
# Wrap-refined counts (3 variables, marks n-1, n, 1).
#
# State: the pair of triangles (plus, minus) for the two turns of the
# wrap-around triple (n-1, n, 1).  Appending a letter mixes them:
#
#   letter '+':  plus'  = ins(2,2,1) minus + ins(3,1,2) plus
#                minus' = ins(1,1,3) plus
#   letter '-':  plus'  = ins(1,1,2) minus
#                minus' = ins(3,3,1) plus + ins(2,1,3) minus


def initial_triangles(letter: str) -> tuple[HomoPoly, HomoPoly]:
    check_sign(letter)
    if letter == PLUS:
        return HomoPoly.one(3), HomoPoly.zero(3)
    return HomoPoly.zero(3), HomoPoly.one(3)


def step_triangles(
    plus: HomoPoly, minus: HomoPoly, letter: str, method: str = "fast"
) -> tuple[HomoPoly, HomoPoly]:
    check_sign(letter)
    ins = _step_fn(method)
    if letter == PLUS:
        return ins(2, 2, 1, minus) + ins(3, 1, 2, plus), ins(1, 1, 3, plus)
    return ins(1, 1, 2, minus), ins(3, 3, 1, plus) + ins(2, 1, 3, minus)


def arc_triangles(word: str, method: str = "fast") -> tuple[HomoPoly, HomoPoly]:
    """Triangles refining the two wrap classes by three arc contents.

    The coefficient of X1^i X2^j X3^k in the first (second) triangle counts
    orders following ``word`` whose wrap triple turns positively (negatively)
    and whose arcs between the marks n-1, n, 1 (n, n-1, 1 for the negative
    turn) have contents (i, j, k).
    """
    check_sign_word(word)
    if not word:
        raise ValueError("the word must have at least one letter")
    plus, minus = initial_triangles(word[0])
    for letter in word[1:]:
        plus, minus = step_triangles(plus, minus, letter, method)
    return plus, minus


def count_wrap(word: str, sign: str, method: str = "fast") -> int:
    """Orders following ``word`` whose triple (n-1, n, 1) has the given turn."""
    check_sign(sign)
    plus, minus = arc_triangles(word, method)
    return plus.total() if sign == PLUS else minus.total()


# ---------------------------------------------------------------------------
# Arrangement-refined counts (4 variables, marks n-1, n, 1, 2).
#
# State: six tetrahedra, one per circular arrangement of the marks:
#
#   1: 1,2,n-1,n   2: 1,n-1,2,n   3: 1,n-1,n,2
#   4: 1,2,n,n-1   5: 1,n,2,n-1   6: 1,n,n-1,2
#
# Seeds for the two-letter words w = ++, --, -+, +-:
#   arrangement 1 and 5 start at 1 for "++", 2 and 6 for "--",
#   3 for "-+", 4 for "+-"; everything else starts at 0.

_TETRA_SEEDS = {"++": (1, 5), "--": (2, 6), "-+": (3,), "+-": (4,)}

# Step tables: output arrangement -> list of (a, b, c, input arrangement).
_TETRA_PLUS = (
    ((4, 1, 2, 1), (3, 1, 2, 2), (2, 2, 1, 4)),
    ((3, 4, 2, 3), (2, 2, 4, 5)),
    ((3, 4, 1, 3), (2, 4, 1, 5), (1, 1, 4, 6)),
    ((1, 1, 4, 1),),
    ((4, 1, 3, 1), (1, 1, 3, 2)),
    ((4, 4, 3, 3),),
)
_TETRA_MINUS = (
    ((1, 1, 2, 4),),
    ((1, 4, 2, 6), (4, 4, 2, 5)),
    ((4, 4, 1, 6),),
    ((2, 1, 4, 4), (3, 1, 4, 2), (4, 4, 1, 1)),
    ((2, 1, 3, 4), (3, 3, 1, 2)),
    ((1, 4, 3, 6), (2, 4, 3, 5), (3, 3, 4, 3)),
)


def initial_tetrahedra(two_letters: str) -> tuple[HomoPoly, ...]:
    check_sign_word(two_letters)
    if len(two_letters) != 2:
        raise ValueError("tetrahedra start from a two-letter word")
    seeds = _TETRA_SEEDS[two_letters]
    return tuple(
        HomoPoly.one(4) if alpha in seeds else HomoPoly.zero(4) for alpha in range(1, 7)
    )


def step_tetrahedra(
    polys: Sequence[HomoPoly], letter: str, method: str = "fast"
) -> tuple[HomoPoly, ...]:
    check_sign(letter)
    ins = _step_fn(method)
    table = _TETRA_PLUS if letter == PLUS else _TETRA_MINUS
    out = []
    for rules in table:
        acc = None
        for a, b, c, source in rules:
            term = ins(a, b, c, polys[source - 1])
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def arc_tetrahedra(word: str, method: str = "fast") -> tuple[HomoPoly, ...]:
    """Six tetrahedra refining the arrangement classes by four arc contents."""
    check_sign_word(word)
    if len(word) < 2:
        raise ValueError("arrangement counts need a word of length >= 2")
    polys = initial_tetrahedra(word[:2])
    for letter in word[2:]:
        polys = step_tetrahedra(polys, letter, method)
    return polys


def count_arrangement(word: str, alpha: int, method: str = "fast") -> int:
    """Orders following ``word`` whose marks 1, 2, n-1, n sit in arrangement ``alpha``."""
    if not isinstance(alpha, int) or not 1 <= alpha <= 6:
        raise ValueError(f"arrangement index must be 1..6, got {alpha!r}")
    return arc_tetrahedra(word, method)[alpha - 1].total()


_DOUBLE_WRAP = {
    (PLUS, PLUS): (1, 2),
    (PLUS, MINUS): (3,),
    (MINUS, PLUS): (4,),
    (MINUS, MINUS): (5, 6),
}


def count_double_wrap(word: str, first: str, second: str, method: str = "fast") -> int:
    """Orders following ``word`` with both wrap triples prescribed.

    ``first`` is the turn of (n-1, n, 1) and ``second`` the turn of (n, 1, 2).
    For a single-letter word the two wrap triples coincide on 3 elements, so
    the count equals the one-wrap count when the turns agree and 0 otherwise.
    """
    check_sign(first)
    check_sign(second)
    check_sign_word(word)
    if not word:
        raise ValueError("the word must have at least one letter")
    if len(word) == 1:
        return count_wrap(word, first, method) if first == second else 0
    polys = arc_tetrahedra(word, method)
    return sum(polys[alpha - 1].total() for alpha in _DOUBLE_WRAP[(first, second)])


# ---------------------------------------------------------------------------
# 1-dimensional engines: descent classes and the zigzag triangle.


def descent_class_row(word: str) -> tuple[int, ...]:
    """Counts of permutations of [len(word) + 1] with pattern ``word``, by last value.

    Entry v-1 counts those ending in v.  Each '+' step replaces the row by its
    prefix sums and each '-' step by its suffix sums, shifted to the longer
    row; this is the zigzag ("boustrophedon") recurrence generalized to an
    arbitrary ascent/descent prescription.
    """
    check_sign_word(word)
    row = [1]
    for letter in word:
        if letter == PLUS:
            acc = 0
            new = [0]
            for value in row:
                acc += value
                new.append(acc)
        else:
            acc = 0
            new = [0]
            for value in reversed(row):
                acc += value
                new.append(acc)
            new.reverse()
        row = new
    return tuple(row)


def descent_class_count(word: str) -> int:
    """Number of permutations of [len(word) + 1] with descent pattern ``word``."""
    return sum(descent_class_row(word))


def entringer_triangle(n: int) -> list[tuple[int, ...]]:
    """The first ``n`` rows of the zigzag triangle of Entringer numbers.

    Row r holds r entries; in rows of even index each entry is the sum of the
    previous row's entries to its left, in rows of odd index the sum of those
    to its right.  Row sums are the zigzag (Euler up/down) numbers.
    """
    if n < 1:
        raise ValueError("need at least one row")
    rows = [(1,)]
    for r in range(2, n + 1):
        prev = rows[-1]
        if r % 2 == 0:
            acc = 0
            new = [0]
            for value in prev:
                acc += value
                new.append(acc)
        else:
            acc = 0
            new = [0]
            for value in reversed(prev):
                acc += value
                new.append(acc)
            new.reverse()
        rows.append(tuple(new))
    return rows


def euler_number(n: int) -> int:
    """The n-th zigzag number: permutations of [n] alternating up, down, up, ..."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    return sum(entringer_triangle(n)[-1])


# ---------------------------------------------------------------------------
# Seidel triangle sequences: iterate the operator on external triangles.


def _constant_row_triangle(line: Sequence[int]) -> HomoPoly:
    # Triangle of side len(line) whose cells depend only on the second
    # exponent; the bottom row (first exponent 0), read left to right, is the
    # given line.
    n = len(line)
    coeffs: dict[tuple[int, int, int], int] = {}
    for j in range(n):
        value = line[n - 1 - j]
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError("triangle entries must be ints")
        if value:
            for i in range(n - j):
                coeffs[(i, j, n - 1 - i - j)] = value
    return HomoPoly._raw(3, n - 1, coeffs)


def seidel_triangles(
    lines: Sequence[Sequence[int]], steps: int | None = None, method: str = "fast"
) -> list[HomoPoly]:
    """Triangle sequence A_1, A_2, ... driven by an external triangular array.

    ``lines`` supplies the driving array: line k (1-based) must hold k
    entries.  A_1 is the constant-row triangle of line 1 and each subsequent
    step applies ``arc_insertion(1, 1, 3)`` and adds the next constant-row
    triangle.
    """
    if steps is None:
        steps = len(lines)
    if steps < 1:
        raise ValueError("need at least one step")
    if steps > len(lines):
        raise ValueError(f"need {steps} lines, got {len(lines)}")
    for idx, line in enumerate(lines[:steps], start=1):
        if len(line) != idx:
            raise ValueError(f"line {idx} must hold {idx} entries, got {len(line)}")
    ins = _step_fn(method)
    result: list[HomoPoly] = []
    current: HomoPoly | None = None
    for idx in range(1, steps + 1):
        layer = _constant_row_triangle(lines[idx - 1])
        current = layer if current is None else ins(1, 1, 3, current) + layer
        result.append(current)
    return result
