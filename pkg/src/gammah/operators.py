"""Left and right operator hemirings realized as closures of action maps.

A formal sum of generator pairs acts on the carrier S; two sums are
congruent exactly when they induce the same total map, so the quotient is
enumerated as a function-closure fixpoint under pointwise addition and
composition.  Composition is oriented so the tables match the defining
relations: on the left side (f.g)(a) = f(g(a)), on the right side
(f.g)(a) = g(f(a)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CapacityError,
    FiniteMonoid,
    GammaHemiring,
    Hemiring,
    ProductStructure,
    StructureError,
    _cap,
    hemiring_product_structure,
    validate_hemiring,
)

LEFT = "left"
RIGHT = "right"

DEFAULT_OPERATOR_CAP = 20_000
OPERATOR_CAP_ENV = "GAMMAH_OPERATOR_CAP"


@dataclass(frozen=True)
class FormalSum:
    """Non-empty sum of generator pairs: (S,Gamma) on the left, (Gamma,S) on the right."""

    side: str
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        if not self.terms:
            raise ValueError("formal sums must have at least one term")

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if self.side != other.side:
            raise ValueError("cannot add formal sums of different sides")
        return FormalSum(self.side, self.terms + other.terms)


@dataclass(frozen=True)
class ActionMap:
    """Total additive map S -> S induced by a formal sum."""

    table: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.table[a]


def formal_sum_label(g: GammaHemiring, f: FormalSum) -> str:
    if f.side == LEFT:
        parts = [f"[{g.S.elements[x]},{g.Gamma.elements[ga]}]" for x, ga in f.terms]
    else:
        parts = [f"[{g.Gamma.elements[ga]},{g.S.elements[x]}]" for ga, x in f.terms]
    return "+".join(parts)


def realize(g: GammaHemiring, f: FormalSum) -> ActionMap:
    """The map a -> sum_i x_i g_i a (left) or a -> sum_i a g_i x_i (right)."""
    ns = g.S.n
    ng = g.Gamma.n
    act = g.action
    for t in f.terms:
        first, second = t
        x, ga = (first, second) if f.side == LEFT else (second, first)
        if not (0 <= x < ns and 0 <= ga < ng):
            raise ValueError(f"term {t} out of range")
    table = []
    for a in range(ns):
        if f.side == LEFT:
            total = g.S.add_all(act[x][ga][a] for x, ga in f.terms)
        else:
            total = g.S.add_all(act[a][ga][x] for ga, x in f.terms)
        table.append(total)
    return ActionMap(tuple(table))


def rho_equivalent(g: GammaHemiring, f1: FormalSum, f2: FormalSum) -> bool:
    """Congruent iff both sums act identically on every carrier element."""
    if f1.side != f2.side:
        raise ValueError("formal sums on different sides are never compared")
    return realize(g, f1) == realize(g, f2)


def formal_product(g: GammaHemiring, f1: FormalSum, f2: FormalSum) -> FormalSum:
    """Pairwise product of formal sums, matching the quotient multiplication."""
    if f1.side != f2.side:
        raise ValueError("cannot multiply formal sums of different sides")
    act = g.action
    terms = []
    if f1.side == LEFT:
        for x, ga in f1.terms:
            for y, gb in f2.terms:
                terms.append((act[x][ga][y], gb))
    else:
        for ga, x in f1.terms:
            for gb, y in f2.terms:
                terms.append((ga, act[x][gb][y]))
    return FormalSum(f1.side, tuple(terms))


class OperatorHemiring:
    """Finite operator hemiring: distinct action maps closed under + and composition.

    Immutable by convention.  `maps[k]` is addressed externally by the stable
    label "op<k>" in closure-discovery order; `provenance[k]` is one formal
    sum realizing it (first found).
    """

    def __init__(
        self,
        side: str,
        structure: str,
        maps: tuple[ActionMap, ...],
        add: tuple[tuple[int, ...], ...],
        mul: tuple[tuple[int, ...], ...],
        zero: int,
        provenance: tuple[FormalSum, ...],
    ):
        self.side = side
        self.structure = structure
        self.maps = maps
        self.add = add
        self.mul = mul
        self.zero = zero
        self.provenance = provenance
        self._index = {m.table: i for i, m in enumerate(maps)}

    @property
    def n(self) -> int:
        return len(self.maps)

    def index_of(self, m: ActionMap) -> int:
        return self._index[m.table]

    def labels(self) -> tuple[str, ...]:
        return tuple(f"op{i}" for i in range(self.n))

    def monoid(self) -> FiniteMonoid:
        name = f"{'L' if self.side == LEFT else 'R'}({self.structure})"
        return FiniteMonoid(self.labels(), self.zero, self.add, name)

    def hemiring(self) -> Hemiring:
        name = f"{'L' if self.side == LEFT else 'R'}({self.structure})"
        return Hemiring(self.labels(), self.zero, self.add, self.mul, name)


def hemiring_as_product_structure(op: OperatorHemiring) -> ProductStructure:
    return hemiring_product_structure(op.hemiring())


def _pointwise_add(s: FiniteMonoid, m1: ActionMap, m2: ActionMap) -> ActionMap:
    add = s.add
    return ActionMap(tuple(add[a][b] for a, b in zip(m1.table, m2.table)))


def _compose(side: str, m1: ActionMap, m2: ActionMap) -> ActionMap:
    # Left operators act first on the inner argument; right operators chain
    # the other way so the table matches the defining multiplication.
    if side == LEFT:
        return ActionMap(tuple(m1.table[v] for v in m2.table))
    return ActionMap(tuple(m2.table[v] for v in m1.table))


def build_operator(g: GammaHemiring, side: str, cap: int | None = None) -> OperatorHemiring:
    """Breadth-first closure of the generator maps under + and composition.

    Maps are deduplicated by table equality; each map keeps the first formal
    sum that produced it.  The hemiring laws of the resulting tables are
    verified before returning.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
    limit = _cap(OPERATOR_CAP_ENV, DEFAULT_OPERATOR_CAP, cap)
    s = g.S
    maps: list[ActionMap] = []
    prov: list[FormalSum] = []
    index: dict[tuple[int, ...], int] = {}

    def admit(m: ActionMap, f: FormalSum) -> None:
        if m.table not in index:
            if len(maps) >= limit:
                raise CapacityError(f"operator closure exceeded cap {limit} maps")
            index[m.table] = len(maps)
            maps.append(m)
            prov.append(f)

    for x in range(s.n):
        for ga in range(g.Gamma.n):
            pair = (x, ga) if side == LEFT else (ga, x)
            f = FormalSum(side, (pair,))
            admit(realize(g, f), f)

    # Fixpoint: rescan all pairs until no new map appears.  Closure sizes are
    # desk scale, so the quadratic rescan is fine and keeps discovery order
    # deterministic.
    grown = True
    while grown:
        grown = False
        size = len(maps)
        for i in range(size):
            for j in range(size):
                before = len(maps)
                if i <= j:
                    admit(_pointwise_add(s, maps[i], maps[j]), prov[i] + prov[j])
                admit(_compose(side, maps[i], maps[j]), formal_product(g, prov[i], prov[j]))
                if len(maps) != before:
                    grown = True

    n = len(maps)
    add_table = tuple(
        tuple(index[_pointwise_add(s, maps[i], maps[j]).table] for j in range(n))
        for i in range(n)
    )
    mul_table = tuple(
        tuple(index[_compose(side, maps[i], maps[j]).table] for j in range(n))
        for i in range(n)
    )
    zero = index[tuple(s.zero for _ in range(s.n))]

    op = OperatorHemiring(side, g.name, tuple(maps), add_table, mul_table, zero, tuple(prov))
    rep = validate_hemiring(op.hemiring())
    if not rep.valid:
        raise StructureError(f"operator closure is not a hemiring: {rep.violations[0][0]}", rep)
    for k, m in enumerate(maps):
        if m.table[s.zero] != s.zero:
            raise StructureError(f"map op{k} does not fix zero")
        for a in range(s.n):
            for b in range(s.n):
                if m.table[s.add[a][b]] != s.add[m.table[a]][m.table[b]]:
                    raise StructureError(f"map op{k} is not additive at ({a},{b})")
    return op


def embed(g: GammaHemiring, op: OperatorHemiring, x: int, gamma: int) -> int:
    """Index in the closure of the single-generator class [x,gamma] (or [gamma,x])."""
    pair = (x, gamma) if op.side == LEFT else (gamma, x)
    return op.index_of(realize(g, FormalSum(op.side, (pair,))))


@dataclass(frozen=True)
class Unity:
    kind: str  # left | right
    strong: bool
    witness: FormalSum


def find_unity(g: GammaHemiring, op: OperatorHemiring) -> Unity | None:
    """Identity map membership; strong when a single generator already realizes it."""
    identity = tuple(range(g.S.n))
    for x in range(g.S.n):
        for ga in range(g.Gamma.n):
            pair = (x, ga) if op.side == LEFT else (ga, x)
            f = FormalSum(op.side, (pair,))
            if realize(g, f).table == identity:
                return Unity(op.side, True, f)
    k = op._index.get(identity)
    if k is None:
        return None
    return Unity(op.side, False, op.provenance[k])
