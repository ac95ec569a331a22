"""Explicit finite lattices and the three property deciders.

Lattices arrive as inclusion-ordered families of element sets (submodule
families, ideal families) and are stored with full order/join/meet
tables.  All three law checks are exhaustive over triples and return the
first counterexample in index order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, LatticeStructureError, UsageError
from .rings import Violation


@dataclass(frozen=True)
class FiniteLattice:
    """A finite bounded lattice with explicit order and bound tables."""

    size: int
    element_keys: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size})"


@dataclass(frozen=True)
class LatticeMap:
    """An index-level map between two lattices."""

    source: FiniteLattice
    target: FiniteLattice
    image: tuple[int, ...]


@dataclass(frozen=True)
class PropertyCheck:
    """Decision of one lattice law, with the first counterexample if any."""

    holds: bool
    counterexample: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class MapReport:
    """Itemized verification of a lattice map."""

    bijective: bool
    preserves_join: bool
    preserves_meet: bool
    preserves_order: bool
    reflects_order: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.preserves_join
            and self.preserves_meet
            and self.preserves_order
            and self.reflects_order
        )


def _set_key(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def lattice_from_sets(family) -> FiniteLattice:
    """Lattice of a set family under inclusion.

    The join of two members is the least member containing their union,
    the meet the greatest member inside their intersection; if either
    bound is missing or not unique the family is not a lattice and a
    structural error names the offending pair.
    """
    sets = sorted({frozenset(s) for s in family}, key=lambda s: (len(s), sorted(s)))
    n = len(sets)
    if n == 0:
        raise LatticeStructureError("empty family has no lattice")
    keys = tuple(_set_key(s) for s in sets)
    leq = tuple(tuple(sets[i] <= sets[j] for j in range(n)) for i in range(n))

    join_rows = []
    meet_rows = []
    for i in range(n):
        jrow = []
        mrow = []
        for j in range(n):
            union = sets[i] | sets[j]
            uppers = [k for k in range(n) if union <= sets[k]]
            if not uppers:
                raise LatticeStructureError(
                    f"no upper bound for pair ({keys[i]}, {keys[j]})"
                )
            least = min(uppers, key=lambda k: (len(sets[k]), sorted(sets[k])))
            if any(not sets[least] <= sets[k] for k in uppers):
                raise LatticeStructureError(
                    f"no least upper bound for pair ({keys[i]}, {keys[j]})"
                )
            jrow.append(least)

            inter = sets[i] & sets[j]
            lowers = [k for k in range(n) if sets[k] <= inter]
            if not lowers:
                raise LatticeStructureError(
                    f"no lower bound for pair ({keys[i]}, {keys[j]})"
                )
            greatest = max(lowers, key=lambda k: (len(sets[k]), sorted(sets[k])))
            if any(not sets[k] <= sets[greatest] for k in lowers):
                raise LatticeStructureError(
                    f"no greatest lower bound for pair ({keys[i]}, {keys[j]})"
                )
            mrow.append(greatest)
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))

    bottoms = [b for b in range(n) if all(leq[b][x] for x in range(n))]
    tops = [t for t in range(n) if all(leq[x][t] for x in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise LatticeStructureError("family lacks a unique bottom or top")

    return FiniteLattice(
        size=n,
        element_keys=keys,
        leq=leq,
        join=tuple(join_rows),
        meet=tuple(meet_rows),
        bottom=bottoms[0],
        top=tops[0],
    )


def validate_lattice(l: FiniteLattice) -> list[Violation]:
    """Recompute everything from ``leq`` alone and compare.

    Serves as the independent oracle for the join/meet tables: bounds are
    rederived from the order matrix without touching the stored tables.
    """
    out: list[Violation] = []
    n = l.size
    leq = l.leq
    for x in range(n):
        if not leq[x][x]:
            out.append(Violation("order reflexive", (x,)))
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                out.append(Violation("order antisymmetric", (x, y)))
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    out.append(Violation("order transitive", (x, y, z)))
    for x in range(n):
        if not leq[l.bottom][x]:
            out.append(Violation("bottom below all", (x,)))
        if not leq[x][l.top]:
            out.append(Violation("top above all", (x,)))
    for x in range(n):
        for y in range(n):
            uppers = [k for k in range(n) if leq[x][k] and leq[y][k]]
            least = [u for u in uppers if all(leq[u][k] for k in uppers)]
            if len(least) != 1 or l.join[x][y] != least[0]:
                out.append(Violation("join is least upper bound", (x, y)))
            lowers = [k for k in range(n) if leq[k][x] and leq[k][y]]
            greatest = [g for g in lowers if all(leq[k][g] for k in lowers)]
            if len(greatest) != 1 or l.meet[x][y] != greatest[0]:
                out.append(Violation("meet is greatest lower bound", (x, y)))
    return out


def is_modular(l: FiniteLattice) -> PropertyCheck:
    """Check x <= z implies x v (y ^ z) = (x v y) ^ z over all triples."""
    n, leq, join, meet = l.size, l.leq, l.join, l.meet
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if leq[x][z] and join[x][meet[y][z]] != meet[join[x][y]][z]:
                    return PropertyCheck(False, (x, y, z))
    return PropertyCheck(True)


def is_complemented(l: FiniteLattice) -> PropertyCheck:
    """Check every element has a complement; counterexample is the element."""
    n = l.size
    for x in range(n):
        if not any(
            l.join[x][y] == l.top and l.meet[x][y] == l.bottom for y in range(n)
        ):
            return PropertyCheck(False, (x,))
    return PropertyCheck(True)


def is_distributive(l: FiniteLattice) -> PropertyCheck:
    """Check x ^ (y v z) = (x ^ y) v (x ^ z) over all triples."""
    n, join, meet = l.size, l.join, l.meet
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return PropertyCheck(False, (x, y, z))
    return PropertyCheck(True)


def _profiles(l: FiniteLattice) -> list[tuple[int, int, int, int]]:
    """Per-element isomorphism invariants: downset/upset sizes, cover degrees."""
    cov = covers(l)
    n = l.size
    down = [sum(l.leq[y][x] for y in range(n)) for x in range(n)]
    up = [sum(l.leq[x][y] for y in range(n)) for x in range(n)]
    cov_up = [0] * n
    cov_down = [0] * n
    for a, b in cov:
        cov_up[a] += 1
        cov_down[b] += 1
    return [(down[x], up[x], cov_up[x], cov_down[x]) for x in range(n)]


def are_isomorphic(a: FiniteLattice, b: FiniteLattice) -> LatticeMap | None:
    """Backtracking search for an order isomorphism, or None.

    Candidates are pruned by per-element invariants; the first complete
    assignment in lexicographic order is returned.  An order isomorphism
    between lattices preserves joins and meets automatically, but the
    result is verified anyway.
    """
    if a.size != b.size:
        return None
    pa = _profiles(a)
    pb = _profiles(b)
    if sorted(pa) != sorted(pb):
        return None
    n = a.size
    image = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for t in range(n):
            if used[t] or pa[i] != pb[t]:
                continue
            ok = True
            for j in range(i):
                if a.leq[i][j] != b.leq[t][image[j]] or a.leq[j][i] != b.leq[image[j]][t]:
                    ok = False
                    break
            if ok:
                image[i] = t
                used[t] = True
                if backtrack(i + 1):
                    return True
                used[t] = False
                image[i] = -1
        return False

    if not backtrack(0):
        return None
    found = LatticeMap(source=a, target=b, image=tuple(image))
    if not verify_map(found).ok:
        raise ConsistencyError("order bijection failed lattice-map verification")
    return found


def verify_map(m: LatticeMap) -> MapReport:
    """Itemized check: bijectivity, join/meet preservation, order both ways."""
    a, b, img = m.source, m.target, m.image
    failures: list[str] = []
    if len(img) != a.size:
        raise UsageError("map image length does not match source size")
    bijective = a.size == b.size and sorted(img) == list(range(b.size))

    pj = pm = po = ro = True
    for x in range(a.size):
        for y in range(a.size):
            if img[a.join[x][y]] != b.join[img[x]][img[y]]:
                pj = False
                failures.append(f"join not preserved at ({x},{y})")
            if img[a.meet[x][y]] != b.meet[img[x]][img[y]]:
                pm = False
                failures.append(f"meet not preserved at ({x},{y})")
            if a.leq[x][y] and not b.leq[img[x]][img[y]]:
                po = False
                failures.append(f"order not preserved at ({x},{y})")
            if b.leq[img[x]][img[y]] and not a.leq[x][y]:
                ro = False
                failures.append(f"order not reflected at ({x},{y})")
    if not bijective:
        failures.append("map is not a bijection")
    return MapReport(
        bijective=bijective,
        preserves_join=pj,
        preserves_meet=pm,
        preserves_order=po,
        reflects_order=ro,
        failures=tuple(failures),
    )


def covers(l: FiniteLattice) -> list[tuple[int, int]]:
    """Cover pairs (a, b): a < b with nothing strictly between."""
    n, leq = l.size, l.leq
    out = []
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            if any(c != a and c != b and leq[a][c] and leq[c][b] for c in range(n)):
                continue
            out.append((a, b))
    return out


def export_dot(l: FiniteLattice) -> str:
    """Hasse diagram in DOT syntax, bottom-up, deterministic node order."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(l.size):
        label = l.element_keys[i].replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for a, b in sorted(covers(l)):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
