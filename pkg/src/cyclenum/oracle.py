"""Brute-force enumeration and classification of total cyclic orders.

Everything in this module works by scanning all (n-1)! orders on [n], so it
is unusable beyond small n, but it is also the independent ground truth that
the polynomial-time recurrences and the bijection are validated against.

Enumeration fixes element 1 at the start of the stored cycle and permutes the
remaining labels, so each order is produced exactly once with no
deduplication pass.  The default size guard (n <= 10) can be raised through
the environment variable ``CYCLENUM_MAX_ORACLE_N`` or the ``force`` keyword,
but never beyond n = 12.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Iterator

from .orders import (
    MINUS,
    PLUS,
    CyclicOrder,
    check_sign,
    check_sign_word,
    descent_pattern,
)

DEFAULT_MAX_N = 10
HARD_MAX_N = 12
MAX_N_ENV = "CYCLENUM_MAX_ORACLE_N"


def enumeration_limit() -> int:
    """Current size guard for exhaustive enumeration."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    return max(3, min(value, HARD_MAX_N))


def _check_enumeration_size(n: int, force: bool) -> None:
    if n < 3:
        raise ValueError("cyclic orders need at least 3 elements")
    if n > HARD_MAX_N:
        raise ValueError(f"n={n} exceeds the hard enumeration cap {HARD_MAX_N}")
    if not force and n > enumeration_limit():
        raise ValueError(
            f"n={n} exceeds the enumeration guard {enumeration_limit()}; "
            f"pass force=True or set {MAX_N_ENV}"
        )


def all_cyclic_orders(n: int, *, force: bool = False) -> Iterator[CyclicOrder]:
    """Yield each of the (n-1)! total cyclic orders on [n] exactly once.

    Cost grows factorially with n.  ``force=True`` bypasses the configurable
    guard; nothing bypasses the hard cap of n = 12.
    """
    _check_enumeration_size(n, force)
    for rest in _permutations(range(2, n + 1)):
        yield CyclicOrder((1,) + rest)


def orders_with_pattern(word: str, *, force: bool = False) -> Iterator[CyclicOrder]:
    """Yield the orders on [len(word) + 2] whose cyclic descent pattern is ``word``."""
    check_sign_word(word)
    n = len(word) + 2
    for order in all_cyclic_orders(n, force=force):
        if order.cyclic_descent_pattern() == word:
            yield order


# The six possible circular arrangements of the marked elements 1, 2, n-1, n,
# read as chains starting at 1.  The index of the matching chain is the
# "arrangement index" used to split a pattern class into six parts.
def _arrangement_chains(n: int) -> tuple[tuple[int, ...], ...]:
    return (
        (1, 2, n - 1, n),
        (1, n - 1, 2, n),
        (1, n - 1, n, 2),
        (1, 2, n, n - 1),
        (1, n, 2, n - 1),
        (1, n, n - 1, 2),
    )


def arrangement_index(order: CyclicOrder) -> int:
    """Which of the six arrangements of (1, 2, n-1, n) the order realizes (1..6)."""
    n = order.n
    if n < 4:
        raise ValueError("arrangement index needs at least 4 elements")
    for idx, chain in enumerate(_arrangement_chains(n), start=1):
        if order.is_chain(*chain):
            return idx
    raise AssertionError("every order realizes exactly one arrangement")


@dataclass(frozen=True)
class WordCounts:
    """Exact class sizes for a single sign word of length n - 2.

    ``total`` counts the orders with this cyclic descent pattern; ``plus`` /
    ``minus`` split them by the turn of the wrap-around triple (n-1, n, 1);
    ``arrangement[a-1]`` further splits by the arrangement index a in 1..6
    (all zeros when n = 3, where 2 and n-1 coincide).
    """

    total: int
    plus: int
    minus: int
    arrangement: tuple[int, int, int, int, int, int]


def _tetra_key(order: CyclicOrder, alpha: int, n: int) -> tuple[int, int, int, int]:
    # Arc contents between the four marked elements, in the coordinate order
    # used by the tetrahedral arrays (it differs per arrangement).
    c = order.content
    if alpha == 1:
        return (c(n - 1, n), c(n, 1), c(1, 2), c(2, n - 1))
    if alpha == 2:
        return (c(n - 1, 2), c(n, 1), c(1, n - 1), c(2, n))
    if alpha == 3:
        return (c(n, 2), c(2, 1), c(1, n - 1), c(n - 1, n))
    if alpha == 4:
        return (c(n, n - 1), c(n - 1, 1), c(1, 2), c(2, n))
    if alpha == 5:
        return (c(n, 2), c(n - 1, 1), c(1, n), c(2, n - 1))
    if alpha == 6:
        return (c(n - 1, 2), c(2, 1), c(1, n), c(n, n - 1))
    raise ValueError(f"arrangement index must be 1..6, got {alpha}")


@lru_cache(maxsize=None)
def _sweep(n: int):
    """One pass over all orders on [n], classifying each into every family."""
    counts: dict[str, list] = {}
    tri: dict[tuple[str, str], dict] = {}
    tet: dict[tuple[str, int], dict] = {}
    for order in all_cyclic_orders(n, force=True):
        word = order.cyclic_descent_pattern()
        entry = counts.setdefault(word, [0, 0, 0, [0] * 6])
        entry[0] += 1
        if order.in_order(n - 1, n, 1):
            entry[1] += 1
            key = (order.content(n - 1, n), order.content(n, 1), order.content(1, n - 1))
            table = tri.setdefault((word, PLUS), {})
        else:
            entry[2] += 1
            key = (order.content(n, n - 1), order.content(n - 1, 1), order.content(1, n))
            table = tri.setdefault((word, MINUS), {})
        table[key] = table.get(key, 0) + 1
        if n >= 4:
            alpha = arrangement_index(order)
            entry[3][alpha - 1] += 1
            tkey = _tetra_key(order, alpha, n)
            ttable = tet.setdefault((word, alpha), {})
            ttable[tkey] = ttable.get(tkey, 0) + 1
    frozen = {
        word: WordCounts(e[0], e[1], e[2], tuple(e[3])) for word, e in counts.items()
    }
    return frozen, tri, tet


def classify_all(n: int, *, force: bool = False) -> dict[str, WordCounts]:
    """Class sizes for every sign word of length n - 2, by full enumeration."""
    _check_enumeration_size(n, force)
    return _sweep(n)[0]


def refined_triangle_counts(word: str, sign: str) -> dict[tuple[int, int, int], int]:
    """Triangle of counts splitting one wrap class by three arc contents.

    Keys (i, j, k) are the contents of the arcs between the elements n-1, n
    and 1 (between n, n-1 and 1 for the '-' class); they add up to
    len(word) - 1.  Missing keys mean zero.
    """
    check_sign_word(word)
    check_sign(sign)
    if not 1 <= len(word) <= 8:
        raise ValueError("refined triangle counts support word lengths 1..8")
    return dict(_sweep(len(word) + 2)[1].get((word, sign), {}))


def refined_tetra_counts(word: str, alpha: int) -> dict[tuple[int, int, int, int], int]:
    """Tetrahedron of counts splitting one arrangement class by arc contents.

    Keys (i, j, k, l) add up to len(word) - 2; missing keys mean zero.
    """
    check_sign_word(word)
    if not isinstance(alpha, int) or not 1 <= alpha <= 6:
        raise ValueError(f"arrangement index must be 1..6, got {alpha!r}")
    if not 2 <= len(word) <= 7:
        raise ValueError("refined tetrahedron counts support word lengths 2..7")
    return dict(_sweep(len(word) + 2)[2].get((word, alpha), {}))


def count_descent_class_brute(word: str) -> int:
    """Number of permutations of [len(word) + 1] with the given descent pattern."""
    check_sign_word(word)
    if len(word) > 9:
        raise ValueError("brute-force descent counting supports word lengths <= 9")
    if not word:
        return 1
    n = len(word) + 1
    return sum(
        1 for perm in _permutations(range(1, n + 1)) if descent_pattern(perm) == word
    )
