"""Postcritical sets, the minimal orbifold weight function and parabolic types.

The weight function is the smallest nu with nu(y) * deg_y(f) dividing
nu(f(y)) for every y; equivalently nu(x) is the lcm of the local degrees
of f^n over all backward orbits landing on x, and infinite exactly on
periodic cycles through a critical point.

Everything runs on a finite *block graph*: the points of P_f together
with the critical points are partitioned into squarefree blocks such that
each block B has a uniform local degree and maps onto a single block.
Blocks need not be irreducible; they only need to be fine enough for nu
to be constant on them, which the refinement guarantees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import INF, poly_gcd, squarefree_decomposition
from .ratmap import (
    PointSet, RatMap, critical_points, critical_values, image_of_pointset,
    local_degree, preimage_within,
)

__all__ = [
    "Block", "PostcriticalData", "NuFunction", "OrbifoldSignature",
    "postcritical_set", "nu_function", "classify", "euler_characteristic",
    "enumerate_parabolic_signatures", "PARABOLIC_TYPES", "type_of_weights",
    "condition_holds", "NotPostcriticallyFinite",
]

DEFAULT_BUDGET = 64
# coefficient height per unit of budget before an orbit is declared runaway
HEIGHT_BITS_PER_BUDGET = 64

INF_WEIGHT = math.inf

PARABOLIC_TYPES = {
    (INF_WEIGHT, INF_WEIGHT): "(i)",
    (2, 2, INF_WEIGHT): "(ii)",
    (2, 2, 2, 2): "(iii)",
    (3, 3, 3): "(iv)",
    (2, 4, 4): "(v)",
    (2, 3, 6): "(vi)",
}
BOUNDARY_TYPES = {"(i)", "(ii)"}


class NotPostcriticallyFinite(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    """A set of points with common local degree, mapping onto ``image``."""

    points: PointSet
    local_degree: int
    postcritical: bool
    image: int = -1

    def label(self) -> str:
        return self.points.label()


@dataclass(frozen=True)
class PostcriticalData:
    pcf: bool
    pset: PointSet | None
    critical: PointSet
    blocks: tuple[Block, ...] = ()
    reason: str = ""

    def orbit_graph(self) -> list[tuple[int, int, int]]:
        """Edges (block, image block, local degree)."""
        return [(i, b.image, b.local_degree) for i, b in enumerate(self.blocks)]


def _sorted_blocks(parts) -> list[PointSet]:
    return sorted((p for p in parts if len(p)), key=PointSet.sort_key)


def _split_by_local_degree(f: RatMap, S: PointSet) -> list[tuple[PointSet, int]]:
    F = f.field
    out = []
    rest = S.poly
    if rest.degree > 0:
        for part, e in squarefree_decomposition(f.wronskian()):
            g = poly_gcd(rest, part)
            if g.degree > 0:
                out.append((PointSet(g, False), e + 1))
                rest = rest.exact_div(g)
        if rest.degree > 0:
            out.append((PointSet(rest, False), 1))
    if S.has_infinity:
        out.append((PointSet.infinity(F), local_degree(f, INF)))
    return out


def _refine(f: RatMap, blocks: list[PointSet]) -> list[PointSet]:
    """Split until every block maps into one block and images are whole blocks."""
    while True:
        changed = False
        # (1) a block must map into a single block
        nxt = []
        for B in blocks:
            pieces = [preimage_within(f, B, C) for C in blocks]
            pieces = [p for p in pieces if len(p)]
            if len(pieces) > 1:
                changed = True
            nxt.extend(pieces if pieces else [B])
        blocks = _sorted_blocks(nxt)
        # (2) the image of a block must be a whole block
        images = [image_of_pointset(f, B) for B in blocks]
        nxt = []
        for C in blocks:
            parts = [C]
            for I in images:
                split = []
                for p in parts:
                    inside, outside = p & I, p - I
                    split.extend(x for x in (inside, outside) if len(x))
                parts = split
            if len(parts) > 1:
                changed = True
            nxt.extend(parts)
        blocks = _sorted_blocks(nxt)
        if not changed:
            return blocks


def _block_index(blocks: list[PointSet], target: PointSet) -> int:
    for i, B in enumerate(blocks):
        if target.issubset(B):
            return i
    raise ArithmeticError(f"image {target} escapes the block graph")


def postcritical_set(f: RatMap, budget: int = DEFAULT_BUDGET) -> PostcriticalData:
    """P_f by forward iteration from the critical values.

    Runaway orbits are cut off by the budget on accumulated squarefree
    degree, or by a coefficient-height cap of HEIGHT_BITS_PER_BUDGET *
    budget bits (a single wandering rational orbit never grows in degree).
    """
    if f.degree < 2:
        raise ValueError("postcritical analysis needs degree at least 2")
    crit = critical_points(f)
    P = critical_values(f)
    frontier = P
    height_cap = HEIGHT_BITS_PER_BUDGET * budget
    while True:
        new = image_of_pointset(f, frontier) - P
        if not len(new):
            break
        P = P | new
        frontier = new
        if len(P) > budget:
            return PostcriticalData(False, None, crit, reason=f"postcritical degree exceeds budget {budget}")
        if P.poly.content_bits() > height_cap:
            return PostcriticalData(False, None, crit, reason=f"orbit height exceeds {height_cap} bits")
    return PostcriticalData(True, P, crit, _block_graph(f, P, crit))


def _block_graph(f: RatMap, P: PointSet, crit: PointSet) -> tuple[Block, ...]:
    V = P | crit
    initial = []
    for part in (V & P, V - P):
        for S, _ in _split_by_local_degree(f, part):
            initial.append(S)
    blocks = _refine(f, _sorted_blocks(initial))
    out = []
    for B in blocks:
        degs = {e for _, e in _split_by_local_degree(f, B)}
        if len(degs) != 1:
            raise ArithmeticError(f"block {B} has mixed local degrees {sorted(degs)}")
        img = _block_index(blocks, image_of_pointset(f, B))
        out.append(Block(B, degs.pop(), B.issubset(P), img))
    return tuple(out)


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class NuFunction:
    """Weight per postcritical block; every other point has weight 1."""

    blocks: tuple[Block, ...]
    weights: tuple

    def assignments(self) -> list[tuple[PointSet, object]]:
        return [(b.points, w) for b, w in zip(self.blocks, self.weights) if b.postcritical]

    def weight_at(self, x):
        for b, w in zip(self.blocks, self.weights):
            if x in b.points:
                return w
        return 1

    def satisfies_condition(self) -> bool:
        return condition_holds(self.blocks, self.weights)

    def is_minimal(self) -> bool:
        """Lowering any finite weight to a proper divisor breaks the condition."""
        for i, w in enumerate(self.weights):
            if w == INF_WEIGHT or w == 1:
                continue
            for d in _proper_divisors(w):
                trial = list(self.weights)
                trial[i] = d
                if condition_holds(self.blocks, trial):
                    return False
        return True


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _divides(a, b) -> bool:
    if b == INF_WEIGHT:
        return True
    if a == INF_WEIGHT:
        return False
    return b % a == 0


def condition_holds(blocks, weights) -> bool:
    """nu(y) deg_y(f) | nu(f(y)) on every block, and nu = 1 off P_f."""
    for b, w in zip(blocks, weights):
        if not b.postcritical and w != 1:
            return False
        req = w if w == INF_WEIGHT else w * b.local_degree
        if not _divides(req, weights[b.image]):
            return False
    return True


def _critical_cycles(blocks: tuple[Block, ...]) -> set[int]:
    on_cycle = set()
    for start in range(len(blocks)):
        seen = []
        i = start
        while i not in seen:
            seen.append(i)
            i = blocks[i].image
        if i == start:
            if any(blocks[j].local_degree > 1 for j in seen):
                on_cycle.update(seen)
    return on_cycle


def nu_function(f: RatMap, pc: PostcriticalData) -> NuFunction:
    if not pc.pcf:
        raise NotPostcriticallyFinite(pc.reason or "map is not postcritically finite")
    blocks = pc.blocks
    infinite = _critical_cycles(blocks)
    weights = [INF_WEIGHT if i in infinite else 1 for i in range(len(blocks))]
    # the lcm fixpoint only increases and is bounded along acyclic paths
    for _ in range(4 * len(blocks) + 4):
        changed = False
        for i, b in enumerate(blocks):
            if weights[i] == INF_WEIGHT:
                continue
            t = b.image
            if weights[t] == INF_WEIGHT:
                continue
            need = math.lcm(weights[t], weights[i] * b.local_degree)
            if need != weights[t]:
                weights[t] = need
                changed = True
        if not changed:
            break
    else:
        raise ArithmeticError("weight fixpoint did not stabilize")
    nu = NuFunction(blocks, tuple(weights))
    if not nu.satisfies_condition():
        raise ArithmeticError("computed weights violate the divisibility condition")
    return nu


# ---------------------------------------------------------------------------
# classification


def _weight_key(w):
    return (1, 0) if w == INF_WEIGHT else (0, w)


def euler_characteristic(weights) -> Fraction:
    return 2 - sum((Fraction(1) if w == INF_WEIGHT else 1 - Fraction(1, int(w))) for w in weights)


def type_of_weights(weights) -> str:
    ws = tuple(sorted(weights, key=_weight_key))
    tag = PARABOLIC_TYPES.get(ws)
    if tag:
        return tag
    chi = euler_characteristic(ws)
    if chi < 0:
        return "hyperbolic"
    if chi > 0:
        return "elliptic"
    raise ArithmeticError(f"parabolic weights {ws} outside the known list")


@dataclass(frozen=True)
class OrbifoldSignature:
    """Weights flattened to one entry per point, grouped by weight in ``components``."""

    weights: tuple
    chi: Fraction | None
    type_tag: str
    components: tuple[tuple[PointSet, object], ...]
    degree: int = 0
    pcf: bool = True
    postcritical: PointSet | None = None

    @property
    def is_parabolic(self) -> bool:
        return self.type_tag in PARABOLIC_TYPES.values()

    @property
    def is_boundary(self) -> bool:
        return self.type_tag in BOUNDARY_TYPES

    def weight_at(self, x):
        for S, w in self.components:
            if x in S:
                return w
        return 1


def _group_components(nu: NuFunction) -> tuple[tuple[PointSet, object], ...]:
    groups: dict = {}
    for S, w in nu.assignments():
        groups[w] = groups[w] | S if w in groups else S
    return tuple((S, w) for w, S in sorted(groups.items(), key=lambda t: _weight_key(t[0])))


def classify(f: RatMap, budget: int = DEFAULT_BUDGET) -> OrbifoldSignature:
    if f.degree < 2:
        raise ValueError("classification needs degree at least 2; use mobius_normal_form")
    pc = postcritical_set(f, budget)
    if not pc.pcf:
        return OrbifoldSignature((), None, "not-applicable", (), f.degree, False, None)
    nu = nu_function(f, pc)
    comps = _group_components(nu)
    weights = []
    for S, w in comps:
        weights.extend([w] * len(S))
    weights = tuple(sorted(weights, key=_weight_key))
    return OrbifoldSignature(weights, euler_characteristic(weights), type_of_weights(weights),
                             comps, f.degree, True, pc.pset)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_parabolic_signatures(max_weight: int, allow_infinity: bool = True) -> list[tuple]:
    """All multisets with sum (1 - 1/e) = 2, e in 2..max_weight (and inf)."""
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2")
    out = []

    def term(e) -> Fraction:
        return Fraction(1) if e == INF_WEIGHT else 1 - Fraction(1, e)

    def rec(rem: Fraction, lo, acc: list):
        if rem == 0:
            out.append(tuple(acc))
            return
        # each term is at least 1/2, so at most four terms fit
        if len(acc) == 4:
            return
        if lo != INF_WEIGHT and rem < term(lo):
            return
        # solve a final term directly
        if rem < 1:
            e = 1 / (1 - rem)
            if e.denominator == 1 and lo != INF_WEIGHT and lo <= e <= max_weight:
                out.append(tuple(acc) + (int(e),))
        elif rem == 1 and allow_infinity:
            out.append(tuple(acc) + (INF_WEIGHT,))
        # or place a term with room for at least one more of equal size
        if lo != INF_WEIGHT:
            e = lo
            while e <= max_weight and 2 * term(e) <= rem:
                rec(rem - term(e), e, acc + [e])
                e += 1
        if allow_infinity and rem >= 2:
            rec(rem - 1, INF_WEIGHT, acc + [INF_WEIGHT])

    rec(Fraction(2), 2, [])
    return sorted(set(out), key=lambda ws: (len(ws), [_weight_key(w) for w in ws]))

