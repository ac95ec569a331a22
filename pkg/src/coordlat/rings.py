"""Finite rings as explicit Cayley tables, with regularity predicates.

A ring is stored as two ``order x order`` tables of element indices plus
distinguished ``zero`` and ``one`` indices.  Everything downstream
(modules, endomorphism rings, ideal lattices) works on these indices, so
every existential or universal statement can be settled by exhaustive
scan.  Searches always return the least witness index, which keeps all
outputs reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import SizeLimitError

#: Default cap on the order of constructed rings.
RING_ORDER_CAP = 4096
#: Default cap for make_zmod (validation of bigger rings is cubic).
ZMOD_CAP = 256
#: validate_ring refuses orders above this unless force=True.
VALIDATE_CAP = 256


@dataclass(frozen=True)
class FiniteRing:
    """A finite unital ring given by addition and multiplication tables.

    ``add[a][b]`` and ``mul[a][b]`` are element indices in ``[0, order)``.
    Instances are immutable; all operations on them are pure.
    """

    order: int
    labels: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    def elements(self) -> range:
        return range(self.order)

    def element(self, index: int) -> RingElement:
        if not 0 <= index < self.order:
            raise IndexError(f"element index {index} out of range [0, {self.order})")
        return RingElement(self, index)

    def __repr__(self) -> str:  # tables are noise in debug output
        return f"FiniteRing(order={self.order}, zero={self.zero}, one={self.one})"


@dataclass(frozen=True)
class RingElement:
    """A single element of a :class:`FiniteRing`, by index."""

    ring: FiniteRing
    index: int


@dataclass(frozen=True)
class Violation:
    """One failed axiom check together with the witnessing tuple."""

    axiom: str
    witness: tuple


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of the elementwise regularity scans over a ring.

    ``witnesses`` maps each element to its least quasi-inverse and is
    present exactly when the ring is regular; ``counterexample`` is the
    least element with no quasi-inverse otherwise.
    """

    regular: bool
    strongly_regular: bool
    witnesses: dict[int, int] | None = None
    counterexample: int | None = None
    strong_counterexample: int | None = field(default=None)


def make_zmod(n: int, max_order: int = ZMOD_CAP) -> FiniteRing:
    """Ring of integers modulo ``n``.

    >>> make_zmod(6).mul[2][5]
    4
    >>> make_zmod(4).add[3][3]
    2
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > max_order:
        raise SizeLimitError(f"zmod order {n} exceeds cap {max_order}")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    labels = tuple(str(i) for i in range(n))
    return FiniteRing(order=n, labels=labels, add=add, mul=mul, zero=0, one=1 % n)


def make_matrix_ring(base: FiniteRing, k: int, max_order: int = RING_ORDER_CAP) -> FiniteRing:
    """Ring of k-by-k matrices over ``base``.

    A matrix is a row-major tuple of ``k*k`` base indices; the matrix at
    ring index ``i`` is the radix-``base.order`` expansion of ``i``.
    """
    if k < 1:
        raise ValueError(f"matrix dimension must be positive, got {k}")
    order = base.order ** (k * k)
    if order > max_order:
        raise SizeLimitError(f"matrix ring order {order} exceeds cap {max_order}")

    n = k * k

    def decode(i: int) -> tuple[int, ...]:
        out = []
        for _ in range(n):
            i, r = divmod(i, base.order)
            out.append(r)
        return tuple(reversed(out))

    def encode(entries: tuple[int, ...]) -> int:
        i = 0
        for e in entries:
            i = i * base.order + e
        return i

    mats = [decode(i) for i in range(order)]

    def label(entries: tuple[int, ...]) -> str:
        rows = []
        for r in range(k):
            cells = ",".join(base.labels[entries[r * k + c]] for c in range(k))
            rows.append(f"[{cells}]")
        return "[" + ",".join(rows) + "]"

    badd = base.add
    bmul = base.mul
    add_rows = []
    mul_rows = []
    for a in mats:
        add_row = []
        mul_row = []
        for b in mats:
            add_row.append(encode(tuple(badd[x][y] for x, y in zip(a, b))))
            prod_entries = []
            for r in range(k):
                for c in range(k):
                    acc = base.zero
                    for t in range(k):
                        acc = badd[acc][bmul[a[r * k + t]][b[t * k + c]]]
                    prod_entries.append(acc)
            mul_row.append(encode(tuple(prod_entries)))
        add_rows.append(tuple(add_row))
        mul_rows.append(tuple(mul_row))

    zero = encode(tuple(base.zero for _ in range(n)))
    identity = [base.zero] * n
    for r in range(k):
        identity[r * k + r] = base.one
    one = encode(tuple(identity))

    return FiniteRing(
        order=order,
        labels=tuple(label(m) for m in mats),
        add=tuple(add_rows),
        mul=tuple(mul_rows),
        zero=zero,
        one=one,
    )


def make_product(a: FiniteRing, b: FiniteRing, max_order: int = RING_ORDER_CAP) -> FiniteRing:
    """Componentwise product ring; pair (i, j) sits at index i*b.order + j."""
    order = a.order * b.order
    if order > max_order:
        raise SizeLimitError(f"product ring order {order} exceeds cap {max_order}")

    def enc(i: int, j: int) -> int:
        return i * b.order + j

    add_rows = []
    mul_rows = []
    labels = []
    for i in range(a.order):
        for j in range(b.order):
            labels.append(f"({a.labels[i]},{b.labels[j]})")
            add_rows.append(
                tuple(
                    enc(a.add[i][x], b.add[j][y])
                    for x in range(a.order)
                    for y in range(b.order)
                )
            )
            mul_rows.append(
                tuple(
                    enc(a.mul[i][x], b.mul[j][y])
                    for x in range(a.order)
                    for y in range(b.order)
                )
            )
    return FiniteRing(
        order=order,
        labels=tuple(labels),
        add=tuple(add_rows),
        mul=tuple(mul_rows),
        zero=enc(a.zero, b.zero),
        one=enc(a.one, b.one),
    )


def validate_ring(r: FiniteRing, force: bool = False) -> list[Violation]:
    """Exhaustively check every ring axiom; empty list means valid.

    Cubic in the order, so orders above VALIDATE_CAP are refused unless
    ``force`` is set.
    """
    n = r.order
    if n > VALIDATE_CAP and not force:
        raise SizeLimitError(
            f"validate_ring on order {n} > {VALIDATE_CAP} requires force=True"
        )
    out: list[Violation] = []
    if len(r.labels) != n or len(r.add) != n or len(r.mul) != n:
        out.append(Violation("table dimensions", (n,)))
        return out
    for row in r.add + r.mul:
        if len(row) != n or any(not 0 <= x < n for x in row):
            out.append(Violation("table dimensions", (n,)))
            return out
    if not 0 <= r.zero < n or not 0 <= r.one < n:
        out.append(Violation("distinguished elements in range", (r.zero, r.one)))
        return out

    add, mul, zero, one = r.add, r.mul, r.zero, r.one
    els = range(n)

    for a in els:
        if add[a][zero] != a:
            out.append(Violation("additive identity", (a,)))
        if not any(add[a][b] == zero for b in els):
            out.append(Violation("additive inverse", (a,)))
        if mul[a][one] != a or mul[one][a] != a:
            out.append(Violation("multiplicative identity", (a,)))
        if mul[a][zero] != zero or mul[zero][a] != zero:
            out.append(Violation("zero annihilates", (a,)))
    for a, b in product(els, els):
        if add[a][b] != add[b][a]:
            out.append(Violation("addition commutative", (a, b)))
    for a, b, c in product(els, els, els):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            out.append(Violation("addition associative", (a, b, c)))
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            out.append(Violation("multiplication associative", (a, b, c)))
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            out.append(Violation("left distributivity", (a, b, c)))
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            out.append(Violation("right distributivity", (a, b, c)))
    return out


def quasi_inverse(r: RingElement) -> RingElement | None:
    """Least s with r*s*r = r, or None if no such element exists.

    >>> z6 = make_zmod(6)
    >>> quasi_inverse(z6.element(2)).index
    2
    >>> quasi_inverse(make_zmod(4).element(2)) is None
    True
    """
    idx = _quasi_inverse_index(r.ring, r.index)
    return None if idx is None else RingElement(r.ring, idx)


def _quasi_inverse_index(ring: FiniteRing, a: int) -> int | None:
    mul = ring.mul
    for s in range(ring.order):
        if mul[mul[a][s]][a] == a:
            return s
    return None


def _strong_witness_index(ring: FiniteRing, a: int) -> int | None:
    mul = ring.mul
    sq = mul[a][a]
    for s in range(ring.order):
        if mul[sq][s] == a:
            return s
    return None


def is_von_neumann_regular(r: FiniteRing) -> RegularityReport:
    """Scan every element for a quasi-inverse (r = r*s*r).

    The report also carries the strong-regularity verdict (r*r*s = r for
    all r) so a single call answers both questions.
    """
    witnesses: dict[int, int] = {}
    counterexample: int | None = None
    for a in range(r.order):
        s = _quasi_inverse_index(r, a)
        if s is None:
            counterexample = a
            break
        witnesses[a] = s
    regular = counterexample is None

    strong_counterexample: int | None = None
    for a in range(r.order):
        if _strong_witness_index(r, a) is None:
            strong_counterexample = a
            break

    return RegularityReport(
        regular=regular,
        strongly_regular=strong_counterexample is None,
        witnesses=witnesses if regular else None,
        counterexample=counterexample,
        strong_counterexample=strong_counterexample,
    )


def is_strongly_regular(r: FiniteRing) -> bool:
    """True iff every element a has some s with a*a*s = a."""
    return all(_strong_witness_index(r, a) is not None for a in range(r.order))


def idempotents(r: FiniteRing) -> list[int]:
    """Sorted indices of all elements with e*e = e."""
    return [e for e in range(r.order) if r.mul[e][e] == e]
