"""A size-preserving bijection between cyclic orders and permutations.

``order_to_permutation`` maps the (n)! total cyclic orders on [n+1] onto the
permutations of [n], and ``permutation_to_order`` inverts it.  The map peels
the largest element off the circle one at a time; at each stage the position
of the removed element (how many others sit on the arc after the current
maximum) dictates, through a parity-dependent re-indexing, the last value of
the permutation being grown.  The crucial property, checked exhaustively in
the tests, is that it transports the cyclic descent pattern of the order to
the descent pattern of the permutation with every even-position sign flipped.

The induction bottoms out at the circle on two elements.  That stage is not
representable as a :class:`~cyclenum.orders.CyclicOrder` (orders need three
elements), so it stays private to this module: the public functions accept
orders on >= 3 elements and permutations of >= 2 values.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .orders import (
    CyclicOrder,
    check_permutation,
    check_sign_word,
    descent_pattern,
    flip_even_signs,
)
from .oracle import orders_with_pattern


def shrink(perm: Iterable[int]) -> tuple[int, ...]:
    """Drop the last position; larger values close ranks.

    >>> shrink((1, 4, 2, 5, 3))
    (1, 3, 2, 4)
    """
    values = check_permutation(perm)
    if len(values) < 2:
        raise ValueError("cannot shrink a single-value permutation")
    last = values[-1]
    return tuple(v if v < last else v - 1 for v in values[:-1])


def split_last(perm: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Split a permutation of [n] into (shrunken permutation of [n-1], last value)."""
    values = check_permutation(perm)
    return shrink(values), values[-1]


def insert_last(reduced: Iterable[int], last: int) -> tuple[int, ...]:
    """Inverse of :func:`split_last`: append ``last``, bumping values >= it."""
    values = check_permutation(reduced)
    n = len(values) + 1
    if not isinstance(last, int) or not 1 <= last <= n:
        raise ValueError(f"last value must be in 1..{n}, got {last!r}")
    return tuple(v if v < last else v + 1 for v in values) + (last,)


def order_to_permutation(order: CyclicOrder) -> tuple[int, ...]:
    """Encode a cyclic order on [n+1] as a permutation of [n].

    >>> order_to_permutation(CyclicOrder((1, 5, 3, 4, 2)))
    (4, 3, 1, 2)
    """
    cycle = list(order.cycle)
    top = order.n
    # Peel elements top, top-1, ..., 3 off the circle, remembering for each
    # stage m how many elements sit strictly between m and m+1.
    gaps: dict[int, int] = {}
    for m in range(top - 1, 1, -1):
        size = m + 1
        gaps[m] = (cycle.index(m + 1) - cycle.index(m)) % size - 1
        cycle.remove(m + 1)
    perm: tuple[int, ...] = (1,)
    for m in range(2, top):
        gap = gaps[m]
        last = m - gap if m % 2 == 0 else 1 + gap
        perm = insert_last(perm, last)
    return perm


def permutation_to_order(perm: Iterable[int]) -> CyclicOrder:
    """Decode a permutation of [n] back into a cyclic order on [n+1].

    Requires n >= 2 (the n = 1 image would live on two elements, below the
    smallest representable order).

    >>> permutation_to_order((4, 3, 1, 2)).cycle
    (1, 5, 3, 4, 2)
    """
    values = check_permutation(perm)
    n = len(values)
    if n < 2:
        raise ValueError("need a permutation of at least 2 values")
    lasts: list[tuple[int, int]] = []
    current = values
    for m in range(n, 1, -1):
        current, last = split_last(current)
        lasts.append((m, last))
    cycle = [1, 2]
    for m, last in reversed(lasts):
        gap = m - last if m % 2 == 0 else last - 1
        at = cycle.index(m)
        cycle.insert((at + gap) % m + 1, m + 1)
    return CyclicOrder(cycle)


def transport_holds(word: str) -> bool:
    """Check the pattern-transport law on every order following ``word``.

    True when each order with cyclic descent pattern ``word`` maps to a
    permutation whose descent pattern is ``word`` with even positions flipped.
    Exhaustive, so the word length is capped at 7.
    """
    check_sign_word(word)
    if not 1 <= len(word) <= 7:
        raise ValueError("transport check supports word lengths 1..7")
    expected = flip_even_signs(word)
    return all(
        descent_pattern(order_to_permutation(order)) == expected
        for order in orders_with_pattern(word, force=True)
    )


@lru_cache(maxsize=None)
def _entringer_row_brute(n: int) -> tuple[int, ...]:
    # Entry i-1 counts orders on [n+1] with every (j, j+1, j+2), j <= n-1,
    # turning positively and with i - 1 elements inside the arc from n to n+1
    # (from n+1 to n when n is even).
    row = [0] * n
    for order in orders_with_pattern("+" * (n - 1), force=True):
        gap = order.content(n, n + 1) if n % 2 else order.content(n + 1, n)
        row[gap] += 1
    return tuple(row)


def entringer_by_content(n: int, i: int) -> int:
    """Entringer number e(n, i) realized by counting cyclic orders.

    Counts orders on [n+1] whose first n - 1 triples all turn positively and
    whose arc from n to n+1 (n+1 to n for even n) holds i - 1 elements.  The
    values match row n of the zigzag triangle.
    """
    if not 1 <= n <= 9:
        raise ValueError("supported for 1 <= n <= 9")
    if not 1 <= i <= n:
        raise ValueError(f"index must be in 1..{n}, got {i}")
    if n == 1:
        return 1
    return _entringer_row_brute(n)[i - 1]
