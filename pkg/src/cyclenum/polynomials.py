"""Homogeneous polynomials with big-integer coefficients and the arc operator.

The evolution engines in :mod:`cyclenum.boustrophedon` advance triangular and
tetrahedral arrays of counts.  An array of side d+1 is stored here as a
homogeneous polynomial of degree d: the coefficient of
``X1^i1 * ... * Xm^im`` is the number of orders whose marked arcs have
contents (i1, ..., im).  Coefficients are plain Python ints, so counts never
overflow and no floating point is involved anywhere.

``arc_insertion`` is the one linear operator all recurrences are built from.
It comes in three interchangeable implementations:

- ``arc_insertion``          expands monomials term by term (the definition),
- ``arc_insertion_indexed``  sums source cells per target cell,
- ``arc_insertion_fast``     shares running prefix sums across target cells,
                             costing O(1) per cell instead of O(degree).

Keeping three routes is deliberate: they cross-check each other in the test
suite, and the fast one is the only one used for large computations.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

Exponents = tuple[int, ...]


def compositions(total: int, parts: int) -> Iterator[Exponents]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``, lex order."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


class HomoPoly:
    """A homogeneous polynomial with nonnegative big-integer coefficients.

    ``m`` is the number of variables, ``degree`` the common total degree of
    every stored monomial.  Zero coefficients are never stored, so two equal
    polynomials always compare equal structurally.
    """

    __slots__ = ("m", "degree", "coeffs")

    def __init__(self, m: int, degree: int, coeffs: Mapping[Exponents, int] | None = None):
        if m < 1:
            raise ValueError("need at least one variable")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Exponents, int] = {}
        for expts, value in (coeffs or {}).items():
            key = tuple(expts)
            if len(key) != m or any(e < 0 for e in key):
                raise ValueError(f"bad exponent tuple {key!r} for {m} variables")
            if sum(key) != degree:
                raise ValueError(f"exponents {key!r} do not sum to degree {degree}")
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"coefficient of {key!r} must be an int")
            if value < 0:
                raise ValueError("coefficients are cardinalities and must be >= 0")
            if value:
                clean[key] = value
        self.m = m
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def _raw(cls, m: int, degree: int, coeffs: dict[Exponents, int]) -> "HomoPoly":
        # Internal fast path: caller guarantees the invariants hold.
        poly = cls.__new__(cls)
        poly.m = m
        poly.degree = degree
        poly.coeffs = coeffs
        return poly

    @classmethod
    def zero(cls, m: int, degree: int = 0) -> "HomoPoly":
        return cls._raw(m, degree, {})

    @classmethod
    def one(cls, m: int) -> "HomoPoly":
        return cls._raw(m, 0, {(0,) * m: 1})

    @classmethod
    def monomial(cls, expts: Iterable[int], coeff: int = 1) -> "HomoPoly":
        key = tuple(expts)
        return cls(len(key), sum(key), {key: coeff})

    def coefficient(self, expts: Iterable[int]) -> int:
        return self.coeffs.get(tuple(expts), 0)

    def total(self) -> int:
        """Sum of all coefficients (the polynomial evaluated at all ones)."""
        return sum(self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __add__(self, other: "HomoPoly") -> "HomoPoly":
        if not isinstance(other, HomoPoly):
            return NotImplemented
        if self.m != other.m or self.degree != other.degree:
            raise ValueError("can only add polynomials of equal arity and degree")
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, 0) + value
        return HomoPoly._raw(self.m, self.degree, merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return (
            self.m == other.m
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.m, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"HomoPoly({self.m}, {self.degree}, 0)"
        terms = " + ".join(
            f"{v}*{key}" for key, v in sorted(self.coeffs.items())
        )
        return f"HomoPoly({self.m}, {self.degree}, {terms})"


def _check_indices(a: int, b: int, c: int, m: int) -> None:
    for name, idx in (("a", a), ("b", b), ("c", c)):
        if not isinstance(idx, int) or not 1 <= idx <= m:
            raise ValueError(f"index {name}={idx!r} out of range 1..{m}")
    if b == c:
        raise ValueError("indices b and c must differ")


def arc_insertion(a: int, b: int, c: int, poly: HomoPoly) -> HomoPoly:
    """Linear degree-raising operator on arc-content polynomials.

    On a monomial with exponents ``e`` the image is the sum over k of the
    monomial obtained by zeroing positions b and c, adding ``e[b] + 1`` to
    position a, then adding ``e[c] - k`` to b and ``k`` to c::

        X_a^(e[b]+1) * (X_b^e[c] + X_b^(e[c]-1)*X_c + ... + X_c^e[c]) * rest

    This is the bookkeeping of inserting a new largest element into the arc
    tracked by c: the arc splits between b and c while arc b is absorbed next
    to the new element.  ``b != c`` is required; ``a`` may equal either.
    """
    _check_indices(a, b, c, poly.m)
    A, B, C = a - 1, b - 1, c - 1
    out: dict[Exponents, int] = {}
    for expts, value in poly.coeffs.items():
        ib, ic = expts[B], expts[C]
        base = list(expts)
        base[B] = 0
        base[C] = 0
        base[A] += ib + 1
        for k in range(ic + 1):
            shifted = list(base)
            shifted[B] += ic - k
            shifted[C] += k
            key = tuple(shifted)
            out[key] = out.get(key, 0) + value
    return HomoPoly._raw(poly.m, poly.degree + 1, out)


def source_indices(a: int, b: int, c: int, target: Exponents) -> list[Exponents]:
    """The degree-d cells feeding a degree-(d+1) cell under ``arc_insertion``.

    The inverse-image description by cases:

    - a == b: sources run over t in 0..target[a]-1 with position a set to t
      and position c set to target[c] + target[a] - 1 - t;
    - a == c: sources run over u in 0..target[a]-1 with position b set to u
      and position a set to target[a] + target[b] - 1 - u;
    - a, b, c distinct: sources run over t in 0..target[a]-1 with position a
      set to t, position b to target[a] - 1 - t, and position c to
      target[b] + target[c].
    """
    A, B, C = a - 1, b - 1, c - 1
    sources: list[Exponents] = []
    if A == B:
        ia, ic = target[A], target[C]
        for t in range(ia):
            src = list(target)
            src[A] = t
            src[C] = ic + ia - 1 - t
            sources.append(tuple(src))
    elif A == C:
        ja, jb = target[A], target[B]
        for u in range(ja):
            src = list(target)
            src[B] = u
            src[A] = ja + jb - 1 - u
            sources.append(tuple(src))
    else:
        ja = target[A]
        spread = target[B] + target[C]
        for t in range(ja):
            src = list(target)
            src[A] = t
            src[B] = ja - 1 - t
            src[C] = spread
            sources.append(tuple(src))
    return sources


def arc_insertion_indexed(a: int, b: int, c: int, poly: HomoPoly) -> HomoPoly:
    """Same map as ``arc_insertion``, computed cell by cell from source sets.

    Independent second implementation kept for cross-checking; costs
    O(cells * degree).
    """
    _check_indices(a, b, c, poly.m)
    out: dict[Exponents, int] = {}
    lookup = poly.coeffs.get
    for target in compositions(poly.degree + 1, poly.m):
        value = 0
        for src in source_indices(a, b, c, target):
            value += lookup(src, 0)
        if value:
            out[target] = value
    return HomoPoly._raw(poly.m, poly.degree + 1, out)


def _split_rest(expts: Exponents, skip: tuple[int, ...]) -> Exponents:
    return tuple(e for idx, e in enumerate(expts) if idx not in skip)


def _rebuild(rest: Exponents, placed: dict[int, int], m: int) -> Exponents:
    out = [0] * m
    it = iter(rest)
    for idx in range(m):
        if idx in placed:
            out[idx] = placed[idx]
        else:
            out[idx] = next(it)
    return tuple(out)


def arc_insertion_fast(a: int, b: int, c: int, poly: HomoPoly) -> HomoPoly:
    """Same map as ``arc_insertion`` with shared prefix sums, O(1) per cell."""
    _check_indices(a, b, c, poly.m)
    m, d = poly.m, poly.degree
    A, B, C = a - 1, b - 1, c - 1
    out: dict[Exponents, int] = {}
    if A == B:
        # Target (t+1 at A, s-t at C) is the prefix sum of the source line
        # A + C = s; accumulate while walking the line.
        groups: dict[Exponents, dict[int, int]] = {}
        for expts, value in poly.coeffs.items():
            groups.setdefault(_split_rest(expts, (A, C)), {})[expts[A]] = value
        for rest, line in groups.items():
            span = d - sum(rest)
            acc = 0
            for t in range(span + 1):
                acc += line.get(t, 0)
                if acc:
                    out[_rebuild(rest, {A: t + 1, C: span - t}, m)] = acc
    elif A == C:
        # Same prefix structure, walking the source line A + B = s along B.
        groups = {}
        for expts, value in poly.coeffs.items():
            groups.setdefault(_split_rest(expts, (A, B)), {})[expts[B]] = value
        for rest, line in groups.items():
            span = d - sum(rest)
            acc = 0
            for u in range(span + 1):
                acc += line.get(u, 0)
                if acc:
                    out[_rebuild(rest, {A: u + 1, B: span - u}, m)] = acc
    else:
        # Every target reads the full sum of one source anti-diagonal
        # (A + B = s at fixed C); aggregate those once, then fan out.
        lines: dict[tuple[int, int, Exponents], int] = {}
        for expts, value in poly.coeffs.items():
            key = (expts[A] + expts[B], expts[C], _split_rest(expts, (A, B, C)))
            lines[key] = lines.get(key, 0) + value
        for (s, q, rest), value in lines.items():
            for k in range(q + 1):
                out[_rebuild(rest, {A: s + 1, B: q - k, C: k}, m)] = value
    return HomoPoly._raw(m, d + 1, out)


def format_triangle(poly: HomoPoly) -> str:
    """Render a 3-variable polynomial as a triangle of numbers.

    Rows run from the top vertex down; the bottom, right and left sides carry
    the cells with first, second and third exponent zero respectively.
    """
    if poly.m != 3:
        raise ValueError("triangle rendering needs exactly 3 variables")
    d = poly.degree
    rows = []
    for i in range(d, -1, -1):
        cells = [str(poly.coefficient((i, d - i - k, k))) for k in range(d - i + 1)]
        rows.append("   ".join(cells))
    width = len(rows[-1])
    return "\n".join(row.center(width).rstrip() for row in rows)


_LAYOUT_NAMES = {2: "dense-(i)-lex", 3: "dense-(i,j)-lex", 4: "dense-(i,j,k)-lex"}


def poly_to_json(poly: HomoPoly, word: str, label) -> str:
    """Serialize an array as JSON with a dense, lexicographic coefficient list.

    The layout string names the free exponents; the last exponent is implied
    by homogeneity.  Coefficients are decimal strings so that arbitrarily
    large counts survive the round trip, and serialization is deterministic:
    re-serializing a parsed dump reproduces the bytes.
    """
    if poly.m not in _LAYOUT_NAMES:
        raise ValueError("JSON layout is defined for 2, 3 or 4 variables")
    obj = {
        "word": word,
        "eta_or_alpha": label,
        "degree": poly.degree,
        "layout": _LAYOUT_NAMES[poly.m],
        "coefficients": [
            str(poly.coefficient(expts)) for expts in compositions(poly.degree, poly.m)
        ],
    }
    return json.dumps(obj)


def poly_from_json(text: str) -> tuple[HomoPoly, str, object]:
    """Inverse of :func:`poly_to_json`; returns (polynomial, word, label)."""
    obj = json.loads(text)
    layouts = {name: m for m, name in _LAYOUT_NAMES.items()}
    try:
        m = layouts[obj["layout"]]
        degree = obj["degree"]
        raw = obj["coefficients"]
        word = obj["word"]
        label = obj["eta_or_alpha"]
    except KeyError as exc:
        raise ValueError(f"malformed array dump: missing {exc}") from None
    coeffs: dict[Exponents, int] = {}
    cells = list(compositions(degree, m))
    if len(raw) != len(cells):
        raise ValueError("coefficient list length does not match the layout")
    for expts, text_value in zip(cells, raw):
        value = int(text_value)
        if value:
            coeffs[expts] = value
    return HomoPoly._raw(m, degree, coeffs), word, label
