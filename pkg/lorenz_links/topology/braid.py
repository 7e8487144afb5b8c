# CHECKPOINT_4_BRAIDS
"""
Braid Words
===========
Signed Artin words, the T-link word, the Lorenz permutation braid and the
quantities read off their closures.

Letters are signed generator indices: ``+i`` is σ_i, ``-i`` is σ_i^{-1}.
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from lorenz_links.topology.errors import InvariantError, LinkInputError
from lorenz_links.topology.lorenz_core import Shuffle, TLinkParams, _build, cycle_count
from lorenz_links.topology.planar import Crossing, PlanarDiagram


class BraidWord(BaseModel):
    """A word in the braid group on ``strands`` strands"""

    model_config = ConfigDict(frozen=True)

    strands: int
    letters: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def validate_letters(self) -> "BraidWord":
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(f"generator {letter} out of range for {self.strands} strands")
        return self

    @property
    def is_positive(self) -> bool:
        return all(letter > 0 for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_text(self) -> str:
        """s1 s2 s1' form; the empty word prints as an empty string"""
        return " ".join(f"s{abs(x)}" + ("'" if x < 0 else "") for x in self.letters)

    def __str__(self) -> str:
        return self.to_text() or "(empty)"


def make_braid(strands: int, letters) -> BraidWord:
    return _build(BraidWord, strands=strands, letters=tuple(letters))


# ============================================
# Constructions
# ============================================

def tlink_word(t: TLinkParams) -> BraidWord:
    """(σ1…σ_{p_1−1})^{q_1} … (σ1…σ_{p_s−1})^{q_s} on p_s strands"""
    letters: List[int] = []
    for p, q in t.pairs:
        letters.extend(list(range(1, p)) * q)
    return make_braid(t.strands, letters)


def lorenz_word(sigma: Shuffle) -> BraidWord:
    """
    Canonical positive permutation braid of a shuffle.

    For i = k down to 1 the strand starting at i crosses over to position
    σ(i), emitting σ_i σ_{i+1} … σ_{σ(i)−1}.
    """
    letters: List[int] = []
    for i in range(sigma.k, 0, -1):
        letters.extend(range(i, sigma(i)))
    return make_braid(sigma.n, letters)


def stabilize(w: BraidWord) -> BraidWord:
    """Markov stabilization: append σ_n on n+1 strands (same closure)"""
    return make_braid(w.strands + 1, w.letters + (w.strands,))


# ============================================
# Closure Data
# ============================================

def braid_permutation(w: BraidWord) -> Tuple[int, ...]:
    """Final position (1-based) of the strand starting at each position"""
    at = list(range(1, w.strands + 1))  # at[p] = strand currently in position p+1
    for letter in w.letters:
        i = abs(letter)
        at[i - 1], at[i] = at[i], at[i - 1]
    images = [0] * w.strands
    for position, strand in enumerate(at, start=1):
        images[strand - 1] = position
    return tuple(images)


def closure_components(w: BraidWord) -> int:
    return cycle_count(braid_permutation(w))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in w.letters)


def crossing_pairs(w: BraidWord) -> Dict[Tuple[int, int], int]:
    """How many times each pair of strands (by starting position) crosses"""
    at = list(range(1, w.strands + 1))
    counts: Dict[Tuple[int, int], int] = {}
    for letter in w.letters:
        i = abs(letter)
        pair = tuple(sorted((at[i - 1], at[i])))
        counts[pair] = counts.get(pair, 0) + 1
        at[i - 1], at[i] = at[i], at[i - 1]
    return counts


def is_permutation_braid(w: BraidWord) -> bool:
    """Positive, and every pair of strands crosses at most once"""
    return w.is_positive and all(count == 1 for count in crossing_pairs(w).values())


def closure_planar(w: BraidWord) -> PlanarDiagram:
    """
    Planar diagram of the braid closure.

    Strands run upward; for σ_i the strand in position i passes over to
    position i+1, for σ_i^{-1} the strand in position i+1 passes over to i.
    The closure joins the top of every position to its bottom.
    """
    position_arc = list(range(w.strands))
    next_arc = w.strands
    raw: List[Tuple[int, int, int, int, int]] = []
    for letter in w.letters:
        i = abs(letter)
        left, right = position_arc[i - 1], position_arc[i]
        new_left, new_right = next_arc, next_arc + 1
        next_arc += 2
        if letter > 0:
            raw.append((left, new_right, right, new_left, 1))
        else:
            raw.append((right, new_left, left, new_right, -1))
        position_arc[i - 1], position_arc[i] = new_left, new_right

    closing = {}
    free_loops = 0
    for start, end in enumerate(position_arc):
        if end == start:
            free_loops += 1
        else:
            closing[end] = start

    # compact arc ids in order of first use
    labels: Dict[int, int] = {}

    def label(arc: int) -> int:
        arc = closing.get(arc, arc)
        if arc not in labels:
            labels[arc] = len(labels)
        return labels[arc]

    crossings = tuple(
        Crossing(label(oi), label(oo), label(ui), label(uo), sign) for oi, oo, ui, uo, sign in raw
    )
    return PlanarDiagram(crossings=crossings, free_loops=free_loops)


# ============================================
# Positive Braid Surfaces
# ============================================

def positive_braid_euler(w: BraidWord) -> int:
    """Euler characteristic of the Bennequin surface: strands − crossings"""
    if not w.is_positive:
        raise LinkInputError("the Bennequin surface formula needs a positive braid word")
    return w.strands - len(w.letters)


def seifert_surface_components(w: BraidWord) -> int:
    """The Bennequin surface splits once for every generator missing from w"""
    present = {abs(letter) for letter in w.letters}
    return 1 + sum(1 for j in range(1, w.strands) if j not in present)


def genus_from_euler(euler: int, components: int, surface_components: int = 1) -> int:
    """g = (2b − μ − χ) / 2 for a surface with b pieces and μ boundary circles"""
    twice_genus = 2 * surface_components - components - euler
    if twice_genus % 2 or twice_genus < 0:
        raise InvariantError(
            f"no orientable surface has χ={euler} with {components} boundary components "
            f"and {surface_components} pieces"
        )
    return twice_genus // 2
