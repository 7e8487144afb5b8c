# CHECKPOINT_2_LORENZ_CORE
"""
Lorenz Vectors, Shuffles and T-link Parameters
==============================================
Value types for the three parameterizations of a Lorenz link and the exact
conversions between them.

A shuffle is a permutation of {1..n} increasing on {1..k} and on {k+1..n}
with no fixed points. Its Lorenz vector is ⟨σ(1)−1, …, σ(k)−k⟩, and the run
length encoding of that vector gives the T-link parameters
((p_1,q_1),…,(p_s,q_s)).
"""

import random
from itertools import groupby
from typing import Optional, Sequence, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from lorenz_links.topology.errors import LinkInputError

ModelT = TypeVar("ModelT", bound=BaseModel)


# ============================================
# Domain Types
# ============================================

class LorenzVector(BaseModel):
    """Nondecreasing sequence of positive integers ⟨v_1, …, v_k⟩"""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("a Lorenz vector needs at least one entry")
        if any(entry < 1 for entry in v):
            raise ValueError(f"entries must be >= 1, got {list(v)}")
        for left, right in zip(v, v[1:]):
            if left > right:
                raise ValueError(f"entries must be nondecreasing, but {left} > {right}")
        return v

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return format_vector(self)


class TLinkParams(BaseModel):
    """Parameters ((p_1,q_1),…,(p_s,q_s)) of the T-link T((p_1,q_1),…)"""

    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Tuple[int, int], ...]

    @field_validator("pairs")
    @classmethod
    def validate_pairs(cls, v: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        if not v:
            raise ValueError("T-link parameters need at least one (p, q) pair")
        for p, q in v:
            if p < 1 or q < 1:
                raise ValueError(f"p and q must be >= 1, got ({p},{q})")
        for (p_left, _), (p_right, _) in zip(v, v[1:]):
            if p_left >= p_right:
                raise ValueError(f"p must be strictly increasing, but {p_left} >= {p_right}")
        return v

    @property
    def strands(self) -> int:
        """Strand count p_s of the T-braid"""
        return self.pairs[-1][0]

    @property
    def twist_count(self) -> int:
        """Σ q_j, which equals the length k of the Lorenz vector"""
        return sum(q for _, q in self.pairs)

    @property
    def is_torus(self) -> bool:
        """A single pair is the torus link T(p, q)"""
        return len(self.pairs) == 1

    def __str__(self) -> str:
        return format_tlink(self)


class Shuffle(BaseModel):
    """Fixpoint-free shuffle σ ∈ S_n with split index k"""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    images: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_shuffle(self) -> "Shuffle":
        n, k, images = self.n, self.k, self.images
        if not 1 <= k < n:
            raise ValueError(f"split index must satisfy 1 <= k < n, got k={k}, n={n}")
        if len(images) != n or sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images must be a permutation of 1..{n}, got {list(images)}")
        first, second = images[:k], images[k:]
        if any(a >= b for a, b in zip(first, first[1:])):
            raise ValueError(f"σ(1..{k}) must be increasing, got {list(first)}")
        if any(a >= b for a, b in zip(second, second[1:])):
            raise ValueError(f"σ({k + 1}..{n}) must be increasing, got {list(second)}")
        for i, image in enumerate(images, start=1):
            if image == i:
                raise ValueError(f"σ has a fixed point at {i}")
            # forced by the two conditions above; checked so a bad constructor fails loudly
            if (i <= k) != (image > i):
                raise ValueError(f"σ({i}) = {image} is on the wrong side of the diagonal")
        return self

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def cycles(self) -> int:
        return cycle_count(self.images)


# ============================================
# Helpers
# ============================================

def _build(model: Type[ModelT], **fields) -> ModelT:
    """Construct a model, turning validation failures into LinkInputError"""
    try:
        return model(**fields)
    except ValidationError as e:
        message = e.errors()[0]["msg"].removeprefix("Value error, ")
        raise LinkInputError(f"invalid {model.__name__}: {message}") from e


def make_vector(entries: Sequence[int]) -> LorenzVector:
    return _build(LorenzVector, entries=tuple(entries))


def make_tlink(pairs: Sequence[Tuple[int, int]]) -> TLinkParams:
    return _build(TLinkParams, pairs=tuple((int(p), int(q)) for p, q in pairs))


def make_shuffle(images: Sequence[int], k: int) -> Shuffle:
    return _build(Shuffle, n=len(images), k=k, images=tuple(images))


def cycle_count(perm: Sequence[int]) -> int:
    """Number of cycles of a permutation given as 1-based images"""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
    return cycles


# ============================================
# Conversions
# ============================================

def compress(v: LorenzVector) -> TLinkParams:
    """Run-length encode ⟨p_1^{q_1}, …, p_s^{q_s}⟩ into ((p_1,q_1), …)"""
    return make_tlink([(p, len(list(run))) for p, run in groupby(v.entries)])


def decompress(t: TLinkParams) -> LorenzVector:
    """Expand ((p_1,q_1), …) back into the Lorenz vector"""
    return make_vector([p for p, q in t.pairs for _ in range(q)])


def shuffle_from_vector(v: LorenzVector) -> Shuffle:
    """
    The shuffle whose Lorenz vector is v.

    σ(i) = i + v_i for i ≤ k, n = k + v_k, and σ(k+1..n) enumerates the
    remaining values in increasing order.
    """
    k = v.k
    first = [i + entry for i, entry in enumerate(v.entries, start=1)]
    n = k + v.entries[-1]
    used = set(first)
    second = [value for value in range(1, n + 1) if value not in used]
    return make_shuffle(first + second, k)


def vector_from_shuffle(sigma: Shuffle) -> LorenzVector:
    return make_vector([sigma(i) - i for i in range(1, sigma.k + 1)])


def lorenz_strand_count(t: TLinkParams) -> int:
    """Strand count of the Lorenz braid: Σ q_j + p_s"""
    return t.twist_count + t.strands


def random_vector(rng: Optional[random.Random] = None, max_length: int = 8, max_entry: int = 6) -> LorenzVector:
    """k uniform in [1, max_length], entries sorted uniform draws from [1, max_entry]"""
    rng = rng or random.Random()
    k = rng.randint(1, max_length)
    return make_vector(sorted(rng.randint(1, max_entry) for _ in range(k)))


# ============================================
# Text Forms
# ============================================

def format_vector(v: LorenzVector, compressed: bool = True) -> str:
    """⟨3^4,5^3⟩ (compressed) or ⟨3,3,3,3,5,5,5⟩"""
    if not compressed:
        return "⟨" + ",".join(str(e) for e in v.entries) + "⟩"
    parts = []
    for p, run in groupby(v.entries):
        q = len(list(run))
        parts.append(str(p) if q == 1 else f"{p}^{q}")
    return "⟨" + ",".join(parts) + "⟩"


def format_pairs(t: TLinkParams) -> str:
    """(3,4),(5,3)"""
    return ",".join(f"({p},{q})" for p, q in t.pairs)


def format_tlink(t: TLinkParams) -> str:
    """T((3,4),(5,3))"""
    return f"T({format_pairs(t)})"
