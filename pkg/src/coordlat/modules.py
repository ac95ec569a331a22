"""Finite right modules over finite rings.

Modules carry an addition table and a scalar-action table ``act[m][r]``;
submodules are canonical sorted index sets.  Homomorphism enumeration
works generator-wise: pick a greedy generating set, try every assignment
of generator images, extend along a recorded derivation of each element,
and keep the candidates that verify as homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import AlgebraError, SizeLimitError, UsageError, ConsistencyError
from .rings import FiniteRing, Violation

#: Default cap on module order.
MODULE_ORDER_CAP = 4096
#: Default cap on generator-image assignments tried per hom enumeration.
HOM_CANDIDATE_CAP = 10**7


@dataclass(frozen=True)
class RightModule:
    """A finite right module: abelian group table plus ring action table."""

    ring: FiniteRing
    order: int
    labels: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    act: tuple[tuple[int, ...], ...]
    zero: int

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"RightModule(order={self.order}, ring_order={self.ring.order})"


@dataclass(frozen=True)
class ModuleHom:
    """A module homomorphism as a total image table over the source."""

    source: RightModule
    target: RightModule
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]


@dataclass(frozen=True)
class SubmoduleRef:
    """Canonical handle to a submodule: the sorted element-index set."""

    module: RightModule
    elements: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def make_free_module(r: FiniteRing, k: int, max_order: int = MODULE_ORDER_CAP) -> RightModule:
    """Free right module of rank ``k``: k-tuples with componentwise action.

    Indices are the radix-``r.order`` encoding of the tuple (first
    coordinate most significant); rank 0 gives the zero module and rank 1
    reproduces the ring's own tables, so module indices double as ring
    indices there.
    """
    if k < 0:
        raise ValueError(f"rank must be non-negative, got {k}")
    order = r.order**k
    if order > max_order:
        raise SizeLimitError(f"free module order {order} exceeds cap {max_order}")

    def decode(i: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            i, rem = divmod(i, r.order)
            out.append(rem)
        return tuple(reversed(out))

    def encode(t: tuple[int, ...]) -> int:
        i = 0
        for c in t:
            i = i * r.order + c
        return i

    tuples = [decode(i) for i in range(order)]
    add = tuple(
        tuple(encode(tuple(r.add[x][y] for x, y in zip(a, b))) for b in tuples)
        for a in tuples
    )
    act = tuple(
        tuple(encode(tuple(r.mul[x][s] for x in a)) for s in range(r.order))
        for a in tuples
    )
    labels = tuple("(" + ",".join(r.labels[x] for x in a) + ")" for a in tuples)
    return RightModule(ring=r, order=order, labels=labels, add=add, act=act, zero=0)


def validate_module(m: RightModule) -> list[Violation]:
    """Exhaustively check the abelian-group and action axioms."""
    out: list[Violation] = []
    n, rn = m.order, m.ring.order
    if len(m.labels) != n or len(m.add) != n or len(m.act) != n:
        return [Violation("table dimensions", (n,))]
    for row in m.add:
        if len(row) != n or any(not 0 <= x < n for x in row):
            return [Violation("table dimensions", (n,))]
    for row in m.act:
        if len(row) != rn or any(not 0 <= x < n for x in row):
            return [Violation("table dimensions", (n, rn))]
    if not 0 <= m.zero < n:
        return [Violation("zero in range", (m.zero,))]

    add, act = m.add, m.act
    radd, rmul, one = m.ring.add, m.ring.mul, m.ring.one
    els = range(n)

    for a in els:
        if add[a][m.zero] != a:
            out.append(Violation("additive identity", (a,)))
        if not any(add[a][b] == m.zero for b in els):
            out.append(Violation("additive inverse", (a,)))
        if act[a][one] != a:
            out.append(Violation("unitality m*1 = m", (a,)))
    for a, b in product(els, els):
        if add[a][b] != add[b][a]:
            out.append(Violation("addition commutative", (a, b)))
    for a, b, c in product(els, els, els):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            out.append(Violation("addition associative", (a, b, c)))
    for a, b in product(els, range(rn)):
        for c in range(rn):
            if act[a][radd[b][c]] != add[act[a][b]][act[a][c]]:
                out.append(Violation("action distributes over ring addition", (a, b, c)))
            if act[a][rmul[b][c]] != act[act[a][b]][c]:
                out.append(Violation("action associative over ring product", (a, b, c)))
    for a, b in product(els, els):
        for c in range(rn):
            if act[add[a][b]][c] != add[act[a][c]][act[b][c]]:
                out.append(Violation("action distributes over module addition", (a, b, c)))
    return out


def make_module_from_tables(
    ring: FiniteRing,
    order: int,
    labels: list[str] | tuple[str, ...],
    add: list | tuple,
    act: list | tuple,
    zero: int,
) -> RightModule:
    """Build a module from raw tables, rejecting any axiom violation."""
    m = RightModule(
        ring=ring,
        order=order,
        labels=tuple(labels),
        add=tuple(tuple(row) for row in add),
        act=tuple(tuple(row) for row in act),
        zero=zero,
    )
    violations = validate_module(m)
    if violations:
        raise AlgebraError(violations[0].axiom, violations[0].witness)
    return m


def _close(m: RightModule, seed) -> set[int]:
    """Least subset containing seed and zero, closed under add and act."""
    elems = set(seed)
    elems.add(m.zero)
    add, act = m.add, m.act
    rn = m.ring.order
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for r in range(rn):
            y = act[x][r]
            if y not in elems:
                elems.add(y)
                frontier.append(y)
        for z in list(elems):
            w = add[x][z]
            if w not in elems:
                elems.add(w)
                frontier.append(w)
    return elems


def _ref(m: RightModule, elems) -> SubmoduleRef:
    return SubmoduleRef(module=m, elements=tuple(sorted(elems)))


def zero_submodule(m: RightModule) -> SubmoduleRef:
    return _ref(m, {m.zero})


def full_submodule(m: RightModule) -> SubmoduleRef:
    return _ref(m, range(m.order))


def as_submodule(m: RightModule, elements) -> SubmoduleRef:
    """Canonical ref for an element set, verifying it is a submodule."""
    elems = set(elements)
    if m.zero not in elems:
        raise AlgebraError("submodule contains zero", (m.zero,))
    for a in elems:
        for b in elems:
            if m.add[a][b] not in elems:
                raise AlgebraError("submodule closed under addition", (a, b))
        for r in range(m.ring.order):
            if m.act[a][r] not in elems:
                raise AlgebraError("submodule closed under action", (a, r))
    return _ref(m, elems)


def cyclic_submodule(m: RightModule, x: int) -> SubmoduleRef:
    """Least submodule containing x: additive closure of the orbit x*R."""
    orbit = {m.act[x][r] for r in range(m.ring.order)}
    return _ref(m, _close(m, orbit))


def enumerate_submodules(m: RightModule, max_order: int = MODULE_ORDER_CAP) -> list[SubmoduleRef]:
    """All submodules, by worklist closure over cyclic submodules and sums.

    Output is sorted by (cardinality, element set), which fixes the
    enumeration order used for least-witness searches downstream.
    """
    if m.order > max_order:
        raise SizeLimitError(f"module order {m.order} exceeds cap {max_order}")
    seen: set[tuple[int, ...]] = set()
    for x in range(m.order):
        seen.add(cyclic_submodule(m, x).elements)
    worklist = list(seen)
    while worklist:
        a = worklist.pop()
        for b in list(seen):
            s = _sum_sets(m, a, b)
            if s not in seen:
                seen.add(s)
                worklist.append(s)
    refs = [SubmoduleRef(module=m, elements=e) for e in seen]
    refs.sort(key=lambda r: (len(r.elements), r.elements))
    return refs


def _sum_sets(m: RightModule, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    add = m.add
    return tuple(sorted({add[x][y] for x in a for y in b}))


def submodule_sum(a: SubmoduleRef, b: SubmoduleRef) -> SubmoduleRef:
    """Join of two submodules: the set of pairwise sums."""
    if a.module != b.module:
        raise UsageError("submodule sum needs a common underlying module")
    return SubmoduleRef(module=a.module, elements=_sum_sets(a.module, a.elements, b.elements))


def submodule_intersect(a: SubmoduleRef, b: SubmoduleRef) -> SubmoduleRef:
    """Meet of two submodules: plain set intersection."""
    if a.module != b.module:
        raise UsageError("submodule intersection needs a common underlying module")
    return _ref(a.module, set(a.elements) & set(b.elements))


def _generating_set(m: RightModule) -> list[int]:
    """Greedy generating set: repeatedly adjoin the least outside element."""
    gens: list[int] = []
    current: set[int] = {m.zero}
    while len(current) < m.order:
        g = min(x for x in range(m.order) if x not in current)
        gens.append(g)
        current = _close(m, current | {g})
    return gens


def _derivations(m: RightModule, gens: list[int]):
    """Discovery order plus one derivation per element from the generators.

    Derivations reference only earlier-discovered elements, so a candidate
    hom extends by replaying them in order.
    """
    known: dict[int, tuple] = {m.zero: ("zero",)}
    order: list[int] = [m.zero]
    for i, g in enumerate(gens):
        if g not in known:
            known[g] = ("gen", i)
            order.append(g)
    changed = True
    while changed:
        changed = False
        snapshot = list(order)
        for x in snapshot:
            for r in range(m.ring.order):
                y = m.act[x][r]
                if y not in known:
                    known[y] = ("act", x, r)
                    order.append(y)
                    changed = True
            for z in snapshot:
                w = m.add[x][z]
                if w not in known:
                    known[w] = ("add", x, z)
                    order.append(w)
                    changed = True
    return order, known


def is_hom(f: ModuleHom) -> bool:
    """Full homomorphism check: zero, addition, and action respected."""
    u, m, img = f.source, f.target, f.image
    if len(img) != u.order or img[u.zero] != m.zero:
        return False
    uadd, madd = u.add, m.add
    uact, mact = u.act, m.act
    for a in range(u.order):
        ia = img[a]
        row = uadd[a]
        for b in range(u.order):
            if img[row[b]] != madd[ia][img[b]]:
                return False
        arow = uact[a]
        for r in range(u.ring.order):
            if img[arow[r]] != mact[ia][r]:
                return False
    return True


def hom_enumerate(
    u: RightModule, m: RightModule, max_candidates: int = HOM_CANDIDATE_CAP
) -> list[ModuleHom]:
    """All module homomorphisms u -> m, sorted by image table.

    Tries every assignment of images to a greedy generating set of ``u``,
    extends each along the recorded derivations, and post-verifies; the
    verification pass is what guarantees correctness, so no backtracking
    is needed inside one assignment.
    """
    if u.ring != m.ring:
        raise UsageError("hom enumeration needs modules over the same ring")
    gens = _generating_set(u)
    candidates = m.order ** len(gens)
    if candidates > max_candidates:
        raise SizeLimitError(
            f"{candidates} generator assignments exceed cap {max_candidates}"
        )
    order, deriv = _derivations(u, gens)
    madd, mact = m.add, m.act
    out: list[ModuleHom] = []
    img = [0] * u.order
    for assignment in product(range(m.order), repeat=len(gens)):
        for e in order:
            d = deriv[e]
            tag = d[0]
            if tag == "zero":
                img[e] = m.zero
            elif tag == "gen":
                img[e] = assignment[d[1]]
            elif tag == "add":
                img[e] = madd[img[d[1]]][img[d[2]]]
            else:
                img[e] = mact[img[d[1]]][d[2]]
        f = ModuleHom(source=u, target=m, image=tuple(img))
        if is_hom(f):
            out.append(f)
    out.sort(key=lambda h: h.image)
    return out


def identity_hom(m: RightModule) -> ModuleHom:
    return ModuleHom(source=m, target=m, image=tuple(range(m.order)))


def zero_hom(u: RightModule, m: RightModule) -> ModuleHom:
    return ModuleHom(source=u, target=m, image=tuple(m.zero for _ in range(u.order)))


def hom_compose(f: ModuleHom, g: ModuleHom) -> ModuleHom:
    """Diagrammatic composite: apply ``f`` first, then ``g`` (g after f).

    ``f: A -> B`` and ``g: B -> C`` give ``hom_compose(f, g): A -> C``.
    """
    if f.target != g.source:
        raise UsageError("hom_compose needs f.target == g.source")
    return ModuleHom(
        source=f.source,
        target=g.target,
        image=tuple(g.image[y] for y in f.image),
    )


def preimage(f: ModuleHom, n: SubmoduleRef) -> SubmoduleRef:
    """f^{-1}(N) as a submodule of the source."""
    if n.module != f.target:
        raise UsageError("preimage needs a submodule of the hom's target")
    members = set(n.elements)
    return _ref(f.source, {x for x in range(f.source.order) if f.image[x] in members})


def quotient_module(m: RightModule, n: SubmoduleRef) -> tuple[RightModule, ModuleHom]:
    """Quotient by a submodule, with cosets indexed by least representative.

    Returns the quotient and the canonical projection, which is surjective
    with kernel ``n``.
    """
    if n.module != m:
        raise UsageError("quotient needs a submodule of the module itself")
    nset = n.elements
    coset_index: dict[int, int] = {}
    reps: list[int] = []
    for x in range(m.order):
        if x in coset_index:
            continue
        coset = sorted(m.add[x][v] for v in nset)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_index[y] = idx
    q_order = len(reps)
    q_add = tuple(
        tuple(coset_index[m.add[a][b]] for b in reps) for a in reps
    )
    q_act = tuple(
        tuple(coset_index[m.act[a][r]] for r in range(m.ring.order)) for a in reps
    )
    labels = tuple(f"[{m.labels[a]}]" for a in reps)
    q = RightModule(
        ring=m.ring, order=q_order, labels=labels, add=q_add, act=q_act,
        zero=coset_index[m.zero],
    )
    pi = ModuleHom(source=m, target=q, image=tuple(coset_index[x] for x in range(m.order)))
    return q, pi


def is_direct_summand(m: RightModule, n: SubmoduleRef) -> SubmoduleRef | None:
    """First complement of ``n`` in enumeration order, or None.

    A complement meets ``n`` trivially and sums with it to the whole
    module.
    """
    if n.module != m:
        raise UsageError("summand check needs a submodule of the module itself")
    nset = set(n.elements)
    full = tuple(range(m.order))
    for cand in enumerate_submodules(m):
        cset = set(cand.elements)
        if nset & cset != {m.zero}:
            continue
        if _sum_sets(m, n.elements, cand.elements) == full:
            return cand
    return None


def projection_idempotent(
    m: RightModule, n: SubmoduleRef, n_comp: SubmoduleRef
) -> ModuleHom:
    """Idempotent endomorphism projecting onto ``n`` along ``n_comp``.

    Each x decomposes uniquely as a + b with a in n, b in n_comp; the
    result maps x to a, fixes n pointwise, and kills n_comp.
    """
    if n.module != m or n_comp.module != m:
        raise UsageError("projection needs submodules of the module itself")
    if set(n.elements) & set(n_comp.elements) != {m.zero}:
        raise UsageError("projection needs a direct-sum pair (intersection not trivial)")
    if len(n.elements) * len(n_comp.elements) != m.order:
        raise UsageError("projection needs a direct-sum pair (sizes do not multiply out)")
    table: dict[int, int] = {}
    for a in n.elements:
        for b in n_comp.elements:
            x = m.add[a][b]
            if x in table:
                raise UsageError("projection needs a direct-sum pair (decomposition not unique)")
            table[x] = a
    if len(table) != m.order:
        raise UsageError("projection needs a direct-sum pair (sum not the whole module)")
    e = ModuleHom(source=m, target=m, image=tuple(table[x] for x in range(m.order)))
    if not is_hom(e):
        raise ConsistencyError("projection along a verified direct sum is not a hom")
    return e


def submodule_as_module(n: SubmoduleRef) -> tuple[RightModule, ModuleHom]:
    """View a submodule as a module in its own right, plus the inclusion."""
    parent = n.module
    elems = n.elements
    pos = {x: i for i, x in enumerate(elems)}
    add = tuple(tuple(pos[parent.add[a][b]] for b in elems) for a in elems)
    act = tuple(
        tuple(pos[parent.act[a][r]] for r in range(parent.ring.order)) for a in elems
    )
    sub = RightModule(
        ring=parent.ring,
        order=len(elems),
        labels=tuple(parent.labels[x] for x in elems),
        add=add,
        act=act,
        zero=pos[parent.zero],
    )
    inclusion = ModuleHom(source=sub, target=parent, image=elems)
    return sub, inclusion
