# CHECKPOINT_7_INVARIANTS
"""
Link Invariants
===============
Alexander polynomial from the reduced Burau representation, the Kauffman
bracket and its writhe-normalized form f, and the per-source invariant
report that the verification pipeline compares.
"""

from collections import defaultdict
from typing import Annotated, Dict, FrozenSet, Iterable, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator, WithJsonSchema

from lorenz_links.config import settings
from lorenz_links.topology.braid import (
    BraidWord,
    closure_components,
    closure_planar,
    exponent_sum,
    genus_from_euler,
    positive_braid_euler,
    seifert_surface_components,
    stabilize,
)
from lorenz_links.topology.errors import CrossingLimitExceeded, InvariantError, LinkInputError
from lorenz_links.topology.grid import GridDiagram, grid_components, grid_to_planar
from lorenz_links.topology.laurent import LaurentPoly
from lorenz_links.topology.planar import PlanarDiagram
from lorenz_links.topology.schemas import POLYNOMIAL_SCHEMA
from lorenz_links.utils.logger import get_logger

logger = get_logger("invariants")

Matrix = List[List[LaurentPoly]]
Source = Literal["lorenz-braid", "t-braid", "grid", "braid"]
SKIPPABLE = ("alexander", "jones", "kauffman")

T = LaurentPoly.monomial(1, variable="t")
ONE = LaurentPoly.constant(1, variable="t")
ZERO = LaurentPoly({}, variable="t")


# ============================================
# Reduced Burau Representation
# ============================================

def _generator_row(i: int, size: int, inverse: bool) -> Dict[int, LaurentPoly]:
    """Nonzero entries of row i (1-based) of the generator matrix"""
    if inverse:
        entries = {i - 1: ONE, i: -(T ** -1), i + 1: T ** -1}
    else:
        entries = {i - 1: T, i: -T, i + 1: ONE}
    return {c: v for c, v in entries.items() if 1 <= c <= size}


def burau_reduced(w: BraidWord) -> Matrix:
    """
    Product of the (n−1)×(n−1) reduced Burau matrices of the letters.

    σ_i is the identity except in row i, so right multiplication only
    touches columns i−1, i and i+1.
    """
    if w.strands < 2:
        raise LinkInputError(f"the reduced Burau representation needs n >= 2 strands, got {w.strands}")
    size = w.strands - 1
    matrix = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    for letter in w.letters:
        i = abs(letter)
        row = _generator_row(i, size, inverse=letter < 0)
        for r in range(size):
            pivot = matrix[r][i - 1]
            if pivot.is_zero:
                continue
            for c, value in row.items():
                base = ZERO if c == i else matrix[r][c - 1]
                matrix[r][c - 1] = base + pivot * value
    return matrix


def determinant(matrix: Matrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination; every division is exact"""
    size = len(matrix)
    if size == 0:
        return ONE
    m = [list(row) for row in matrix]
    sign = 1
    previous = ONE
    for k in range(size - 1):
        if m[k][k].is_zero:
            swap = next((r for r in range(k + 1, size) if not m[r][k].is_zero), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(previous)
        previous = m[k][k]
    return m[-1][-1] * sign


def alexander(w: BraidWord) -> LaurentPoly:
    """
    Δ with Δ·(1−t^n) = det(I − B)·(1−t), in canonical form.

    One-strand closures are stabilized first; the closure is unchanged.
    """
    if w.strands < 2:
        w = stabilize(w)
    burau = burau_reduced(w)
    size = len(burau)
    shifted = [[(ONE if r == c else ZERO) - burau[r][c] for c in range(size)] for r in range(size)]
    numerator = determinant(shifted) * (ONE - T)
    if numerator.is_zero:
        return ZERO
    return numerator.exact_div(ONE - T ** w.strands).canonical()


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly) -> bool:
    """q = ±t^m · p for some m; zero only equals zero"""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return p.canonical() == q.canonical()


# ============================================
# Kauffman Bracket
# ============================================

A = LaurentPoly.monomial(1, variable="A")
DELTA = -(A ** 2) - (A ** -2)

# slot indices into Crossing.slots: 0 under_in, 1 over_in, 2 under_out, 3 over_out
ORIENTED = ((0, 3), (1, 2))
UNORIENTED = ((0, 1), (2, 3))


def _smoothings(sign: int) -> Tuple[Tuple[int, Tuple], Tuple[int, Tuple]]:
    """(A-exponent change, slot pairs) of the A- and B-smoothing"""
    if sign > 0:
        return (1, ORIENTED), (-1, UNORIENTED)
    return (1, UNORIENTED), (-1, ORIENTED)


def _assemble(terms: Dict[Tuple[int, int], int], free_loops: int) -> LaurentPoly:
    total = LaurentPoly({}, variable="A")
    by_loops: Dict[int, Dict[int, int]] = defaultdict(dict)
    for (exponent, loops), count in terms.items():
        by_loops[loops][exponent] = by_loops[loops].get(exponent, 0) + count
    for loops, coeffs in by_loops.items():
        total = total + LaurentPoly(coeffs, variable="A") * DELTA ** (loops + free_loops - 1)
    return total


class _DisjointSet:
    def __init__(self, items: Iterable = ()):
        self.parent = {item: item for item in items}

    def find(self, item):
        self.parent.setdefault(item, item)
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b) -> None:
        self.parent[self.find(a)] = self.find(b)

    def groups(self) -> Dict[object, List]:
        out: Dict[object, List] = defaultdict(list)
        for item in list(self.parent):
            out[self.find(item)].append(item)
        return out


def _bracket_states(d: PlanarDiagram) -> LaurentPoly:
    """Plain enumeration of all 2^c states"""
    terms: Dict[Tuple[int, int], int] = defaultdict(int)
    choices = [_smoothings(c.sign) for c in d.crossings]
    for state in range(1 << len(d.crossings)):
        uf = _DisjointSet(range(d.arc_count))
        exponent = 0
        for index, crossing in enumerate(d.crossings):
            step, pairs = choices[index][(state >> index) & 1]
            exponent += step
            slots = crossing.slots
            for a, b in pairs:
                uf.union(slots[a], slots[b])
        loops = len({uf.find(arc) for arc in range(d.arc_count)})
        terms[(exponent, loops)] += 1
    return _assemble(terms, d.free_loops)


Matching = FrozenSet[Tuple[int, int]]


def _bracket_frontier(d: PlanarDiagram) -> LaurentPoly:
    """
    The same state sum, one crossing at a time.

    A partial state is summarized by how the arcs that are still open (seen at
    exactly one slot so far) are joined in pairs by the partial loops; states
    with equal pairings are merged, keeping (A-exponent, closed loops) counts.
    """
    states: Dict[Matching, Dict[Tuple[int, int], int]] = {frozenset(): {(0, 0): 1}}
    open_arcs = set()

    for crossing in d.crossings:
        slots = crossing.slots
        here: Dict[int, List[int]] = defaultdict(list)
        for k, arc in enumerate(slots):
            here[arc].append(k)
        closing = {arc for arc in here if arc in open_arcs}

        next_states: Dict[Matching, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
        for matching, counts in states.items():
            partner = {}
            for a, b in matching:
                partner[a], partner[b] = b, a
            for step, pairs in _smoothings(crossing.sign):
                uf = _DisjointSet(range(4))
                for arc, ks in here.items():
                    if len(ks) == 2:
                        uf.union(ks[0], ks[1])
                    elif arc in closing:
                        other = partner[arc]
                        uf.union(ks[0], here[other][0] if other in closing else ("o", other))
                    else:
                        uf.union(ks[0], ("o", arc))
                for a, b in pairs:
                    uf.union(a, b)

                loops = 0
                kept = [pair for pair in matching if pair[0] not in closing and pair[1] not in closing]
                for members in uf.groups().values():
                    ends = sorted(m[1] for m in members if isinstance(m, tuple))
                    if not ends:
                        loops += 1
                    elif len(ends) == 2:
                        kept.append((ends[0], ends[1]))
                    else:
                        raise InvariantError(f"partial loop with {len(ends)} open ends")
                key = frozenset(kept)
                target = next_states[key]
                for (exponent, closed), count in counts.items():
                    target[(exponent + step, closed + loops)] += count
        states = next_states

        open_arcs -= closing
        open_arcs |= {arc for arc, ks in here.items() if len(ks) == 1 and arc not in closing}

    if open_arcs or set(states) != {frozenset()}:
        raise InvariantError("bracket frontier did not close every arc")
    return _assemble(states[frozenset()], d.free_loops)


def kauffman_bracket(
    d: PlanarDiagram,
    max_crossings: Optional[int] = None,
    method: Optional[str] = None,
) -> LaurentPoly:
    """⟨D⟩ as a Laurent polynomial in A; CrossingLimitExceeded above the cap"""
    limit = settings.MAX_BRACKET_CROSSINGS if max_crossings is None else max_crossings
    method = method or settings.BRACKET_METHOD
    crossings = len(d.crossings)
    if crossings > limit:
        raise CrossingLimitExceeded(crossings, limit)
    if crossings == 0 and d.free_loops == 0:
        raise LinkInputError("the empty diagram has no bracket")
    if method == "states":
        return _bracket_states(d)
    if method == "frontier":
        return _bracket_frontier(d)
    raise LinkInputError(f"unknown bracket method: {method}")


def normalize_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """(−A³)^{−w} · ⟨D⟩"""
    factor = LaurentPoly.monomial(-3 * writhe, -1 if writhe % 2 else 1, variable="A")
    return bracket * factor


def normalized_f(
    d: PlanarDiagram,
    writhe: Optional[int] = None,
    max_crossings: Optional[int] = None,
    method: Optional[str] = None,
) -> LaurentPoly:
    writhe = d.writhe if writhe is None else writhe
    return normalize_bracket(kauffman_bracket(d, max_crossings, method), writhe)


def jones_from_f(f: LaurentPoly) -> Optional[LaurentPoly]:
    """V(t) via A = t^{-1/4}; None when some exponent is not a multiple of 4"""
    if any(e % 4 for e in f.exponents):
        return None
    return f.map_exponents(lambda e: -e // 4, variable="t")


# ============================================
# Reports
# ============================================

def _poly_field(variable: str):
    """Annotated LaurentPoly in `variable`, stored as its JSON form"""

    def validate(value) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, dict):
            return LaurentPoly.from_json(value, variable=variable)
        raise ValueError(f"expected a Laurent polynomial, got {type(value).__name__}")

    return Annotated[
        LaurentPoly,
        PlainValidator(validate),
        PlainSerializer(lambda p: p.to_json(), return_type=dict),
        WithJsonSchema(POLYNOMIAL_SCHEMA),
    ]


PolyT = _poly_field("t")
PolyA = _poly_field("A")


class InvariantReport(BaseModel):
    """Invariants computed from one representation of a link"""

    model_config = ConfigDict(frozen=True)

    source: Source
    components: int
    crossings: int
    writhe: int
    euler_characteristic: Optional[int] = None
    surface_components: Optional[int] = None
    genus: Optional[int] = None
    alexander: Optional[PolyT] = None
    kauffman_f: Optional[PolyA] = None
    kauffman_status: str = "computed"
    jones: Optional[PolyT] = None

    @property
    def f_computed(self) -> bool:
        return self.kauffman_status == "computed"

    def summary(self) -> str:
        parts = [f"components={self.components}", f"crossings={self.crossings}", f"writhe={self.writhe}"]
        if self.euler_characteristic is not None:
            parts.append(f"χ={self.euler_characteristic}")
        if self.genus is not None:
            parts.append(f"genus={self.genus}")
        if self.alexander is not None:
            parts.append(f"Δ={self.alexander}")
        parts.append(f"f={self.kauffman_f}" if self.f_computed else f"f {self.kauffman_status}")
        if self.jones is not None:
            parts.append(f"V={self.jones}")
        return ", ".join(parts)


def _bracket_fields(
    diagram: PlanarDiagram,
    max_crossings: Optional[int],
    method: Optional[str],
    skip: Iterable[str],
) -> Dict[str, object]:
    if "kauffman" in skip:
        return {"kauffman_status": "disabled"}
    try:
        f = normalized_f(diagram, max_crossings=max_crossings, method=method)
    except CrossingLimitExceeded as e:
        logger.warning(f"bracket skipped: {e}")
        return {"kauffman_status": f"skipped: crossing limit ({e.crossings} > {e.limit})"}
    fields: Dict[str, object] = {"kauffman_f": f, "kauffman_status": "computed"}
    if "jones" not in skip:
        fields["jones"] = jones_from_f(f)
    return fields


def full_report(
    source: str,
    subject: Union[BraidWord, GridDiagram],
    max_crossings: Optional[int] = None,
    method: Optional[str] = None,
    skip: Iterable[str] = (),
) -> InvariantReport:
    """
    Assemble every invariant available for one representation.

    Braid sources get χ, genus (positive words only) and Alexander; the grid
    gets components and f from its own planar diagram and writhe.
    """
    skip = set(skip)
    unknown = skip - set(SKIPPABLE)
    if unknown:
        raise LinkInputError(f"cannot skip {sorted(unknown)}; choose from {list(SKIPPABLE)}")

    if isinstance(subject, GridDiagram):
        if source != "grid":
            raise LinkInputError(f"a grid diagram cannot be reported as source {source!r}")
        diagram = grid_to_planar(subject)
        fields: Dict[str, object] = {
            "components": grid_components(subject),
            "crossings": len(diagram.crossings),
            "writhe": diagram.writhe,
        }
    else:
        if source == "grid":
            raise LinkInputError("a braid word cannot be reported as source 'grid'")
        diagram = closure_planar(subject)
        fields = {
            "components": closure_components(subject),
            "crossings": len(subject),
            "writhe": exponent_sum(subject),
        }
        if subject.is_positive:
            euler = positive_braid_euler(subject)
            pieces = seifert_surface_components(subject)
            fields["euler_characteristic"] = euler
            fields["surface_components"] = pieces
            fields["genus"] = genus_from_euler(euler, fields["components"], pieces)
        if "alexander" not in skip:
            fields["alexander"] = alexander(subject)

    fields.update(_bracket_fields(diagram, max_crossings, method, skip))
    report = InvariantReport(source=source, **fields)
    logger.info(f"✓ {source}: {report.summary()}")
    return report
