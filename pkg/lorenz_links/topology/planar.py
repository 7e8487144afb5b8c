# CHECKPOINT_3_PLANAR_DIAGRAMS
"""
Planar Diagrams
===============
Oriented link diagrams as crossings wired together by arc ids.

Every arc runs from the outgoing slot of one crossing to the incoming slot of
the next, so each arc id is used exactly once as an ``*_in`` slot and once as
an ``*_out`` slot. Components that meet no crossing are counted in
``free_loops``.
"""

from typing import Dict, List, NamedTuple, Optional, Tuple

from lorenz_links.topology.errors import InvariantError

Vector = Tuple[int, int]


class Crossing(NamedTuple):
    """One crossing: the arcs entering/leaving on each strand, and its sign"""

    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int
    location: Optional[Tuple[int, int]] = None

    @property
    def slots(self) -> Tuple[int, int, int, int]:
        """Slot order used by the state sum: under_in, over_in, under_out, over_out"""
        return (self.under_in, self.over_in, self.under_out, self.over_out)


class PlanarDiagram(NamedTuple):
    crossings: Tuple[Crossing, ...]
    free_loops: int = 0

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    @property
    def components(self) -> int:
        """Follow each arc through its crossings until the loop closes"""
        successor: Dict[int, int] = {}
        for c in self.crossings:
            successor[c.over_in] = c.over_out
            successor[c.under_in] = c.under_out
        seen = set()
        loops = 0
        for arc in successor:
            if arc in seen:
                continue
            loops += 1
            while arc not in seen:
                seen.add(arc)
                arc = successor[arc]
        return loops + self.free_loops


def crossing_sign(over: Vector, under: Vector) -> int:
    """
    +1 iff rotating the under direction by +90° (counterclockwise) gives the
    over direction, −1 iff it gives the opposite direction.
    """
    rotated = (-under[1], under[0])
    if rotated == over:
        return 1
    if rotated == (-over[0], -over[1]):
        return -1
    raise InvariantError(f"strands {over} and {under} are not perpendicular unit directions")


def check_wiring(diagram: PlanarDiagram) -> None:
    """Raise InvariantError unless every arc is used once as in and once as out"""
    ins: List[int] = []
    outs: List[int] = []
    for c in diagram.crossings:
        ins.extend((c.over_in, c.under_in))
        outs.extend((c.over_out, c.under_out))
    expected = list(range(diagram.arc_count))
    if sorted(ins) != expected or sorted(outs) != expected:
        raise InvariantError("planar diagram arcs are not wired as a 4-valent graph")
