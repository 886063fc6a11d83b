"""Total cyclic orders on {1, ..., n} and their elementary queries.

A total cyclic order arranges the elements 1..n on an oriented circle; the
order itself is the set of triples (x, y, z) such that starting from x and
walking in the positive direction one meets y strictly before z.  We store
the circle as its successor cycle, canonically rotated to start at element 1,
so two input sequences that differ by a rotation produce equal objects:

>>> CyclicOrder((2, 3, 1)) == CyclicOrder((1, 2, 3))
True

Conventions used throughout the package:

- element labels are 1-based everywhere; 0-based offsets never leak out,
- permutations are tuples in one-line notation with values 1..n,
- sign words are plain strings over the characters '+' and '-',
- the text form of an order is the comma-separated cycle, e.g. "1,3,4,2".

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share between threads.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable

PLUS = "+"
MINUS = "-"
_SIGNS = frozenset((PLUS, MINUS))


def check_sign_word(word: str) -> str:
    """Validate that ``word`` only uses the characters '+' and '-'."""
    if not isinstance(word, str):
        raise TypeError(f"sign word must be a string, got {type(word).__name__}")
    for ch in word:
        if ch not in _SIGNS:
            raise ValueError(f"invalid sign {ch!r} in word {word!r}")
    return word


def check_sign(sign: str) -> str:
    """Validate a single '+' or '-'."""
    if sign not in _SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def check_permutation(perm: Iterable[int]) -> tuple[int, ...]:
    """Validate one-line notation and return the permutation as a tuple."""
    values = tuple(perm)
    n = len(values)
    if n == 0:
        raise ValueError("empty permutation")
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise ValueError(f"{values!r} is not a permutation of 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v} in {values!r}")
        seen[v] = True
    return values


def descent_pattern(perm: Iterable[int]) -> str:
    """The word of ascents '+' and descents '-' read along a permutation.

    >>> descent_pattern((1, 5, 3, 2, 4))
    '+--+'
    """
    values = check_permutation(perm)
    if len(values) < 2:
        raise ValueError("descent pattern needs at least two values")
    return "".join(PLUS if b > a else MINUS for a, b in zip(values, values[1:]))


def flip_even_signs(word: str) -> str:
    """Flip the letters sitting in even positions (the 2nd, 4th, ...).

    This map is an involution; it converts the cyclic descent pattern of an
    order into the (alternating) descent pattern of the matching permutation.

    >>> flip_even_signs("++--")
    '+--+'
    >>> flip_even_signs(flip_even_signs("+-++-"))
    '+-++-'
    """
    check_sign_word(word)
    out = []
    for idx, ch in enumerate(word):
        if idx % 2:
            out.append(MINUS if ch == PLUS else PLUS)
        else:
            out.append(ch)
    return "".join(out)


class CyclicOrder:
    """A total cyclic order on {1, ..., n}, n >= 3, held as a successor cycle.

    Construct from any sequence listing 1..n in circular reading order.  The
    stored cycle always starts at 1, which makes equality rotation-invariant;
    the element-position table kept alongside is a pure cache and never takes
    part in comparisons.
    """

    __slots__ = ("_cycle", "_pos")

    def __init__(self, sequence: Iterable[int]):
        cycle = tuple(sequence)
        n = len(cycle)
        if n < 3:
            raise ValueError("a cyclic order needs at least 3 elements")
        seen = [False] * (n + 1)
        for v in cycle:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ValueError(f"elements must be 1..{n}, got {v!r}")
            if seen[v]:
                raise ValueError(f"duplicate element {v}")
            seen[v] = True
        start = cycle.index(1)
        self._cycle = cycle[start:] + cycle[:start]
        pos = [0] * (n + 1)
        for idx, v in enumerate(self._cycle):
            pos[v] = idx
        self._pos = pos

    @classmethod
    def from_text(cls, text: str) -> "CyclicOrder":
        """Parse the text form, a comma-separated cycle such as "1,3,4,2"."""
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse cyclic order from {text!r}") from None
        return cls(values)

    def to_text(self) -> str:
        return ",".join(str(v) for v in self._cycle)

    @property
    def n(self) -> int:
        return len(self._cycle)

    @property
    def cycle(self) -> tuple[int, ...]:
        """The walk around the circle starting at element 1."""
        return self._cycle

    def successor(self, x: int) -> int:
        """The next element after ``x`` in the positive direction."""
        self._check_element(x)
        return self._cycle[(self._pos[x] + 1) % len(self._cycle)]

    def _check_element(self, x: int) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= len(self._cycle):
            raise ValueError(f"element {x!r} out of range 1..{len(self._cycle)}")

    def _offset(self, x: int, y: int) -> int:
        return (self._pos[y] - self._pos[x]) % len(self._cycle)

    def in_order(self, x: int, y: int, z: int) -> bool:
        """True when walking from ``x`` meets ``y`` strictly before ``z``."""
        for v in (x, y, z):
            self._check_element(v)
        if x == y or x == z or y == z:
            raise ValueError(f"elements must be distinct, got ({x}, {y}, {z})")
        return self._offset(x, y) < self._offset(x, z)

    def content(self, i: int, j: int) -> int:
        """Number of elements strictly inside the arc from ``i`` to ``j``."""
        self._check_element(i)
        self._check_element(j)
        if i == j:
            raise ValueError("content needs two distinct elements")
        return self._offset(i, j) - 1

    def multi_content(self, *elems: int) -> tuple[int, ...]:
        """Contents of the arcs between consecutive reference points.

        For reference points ``(y1, ..., yp)`` returns the tuple of contents
        of the arcs y1->y2, y2->y3, ..., yp->y1.  If the points appear in this
        circular order the entries add up to n - p.
        """
        if len(elems) < 2:
            raise ValueError("multi_content needs at least two elements")
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in {elems!r}")
        closed = elems + (elems[0],)
        return tuple(self.content(a, b) for a, b in zip(closed, closed[1:]))

    def is_chain(self, *elems: int) -> bool:
        """True when walking from the first element meets the rest in order."""
        if len(elems) < 3:
            raise ValueError("a chain needs at least three elements")
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in {elems!r}")
        first = elems[0]
        self._check_element(first)
        offsets = []
        for v in elems[1:]:
            self._check_element(v)
            offsets.append(self._offset(first, v))
        return all(a < b for a, b in zip(offsets, offsets[1:]))

    def delete_max(self) -> "CyclicOrder":
        """The order on {1, ..., n-1} obtained by removing the largest element.

        Every triple not involving n is preserved verbatim.
        """
        n = len(self._cycle)
        if n < 4:
            raise ValueError("cannot delete from an order on 3 elements")
        return CyclicOrder(v for v in self._cycle if v != n)

    def cyclic_descent_pattern(self) -> str:
        """Record, for each i <= n-2, the turn of the triple (i, i+1, i+2).

        Position i of the word is '+' when (i, i+1, i+2) belongs to the order
        and '-' when the reversed triple does.
        """
        n = len(self._cycle)
        return "".join(
            PLUS if self.in_order(i, i + 1, i + 2) else MINUS for i in range(1, n - 1)
        )

    def satisfies_cyclic_axioms(self) -> bool:
        """Exhaustively check cyclicity, asymmetry and transitivity.

        Costs O(n^4); intended as a test-time oracle, not for production use.
        """
        n = len(self._cycle)
        elems = range(1, n + 1)
        for x, y, z in _permutations(elems, 3):
            member = self.in_order(x, y, z)
            if member and not self.in_order(y, z, x):
                return False
            if member and self.in_order(z, y, x):
                return False
        for x, y, z, u in _permutations(elems, 4):
            if self.in_order(x, y, z) and self.in_order(x, z, u):
                if not self.in_order(x, y, u):
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicOrder):
            return NotImplemented
        return self._cycle == other._cycle

    def __hash__(self) -> int:
        return hash(self._cycle)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CyclicOrder(({self.to_text()}))"
