"""Exhaustive enumeration of small Lorenz vectors"""

from typing import Iterator, List, Tuple

from lorenz_links.topology.errors import LinkInputError
from lorenz_links.topology.lorenz_core import LorenzVector, make_vector


def _nondecreasing(length: int, limit: int, low: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing tuples of the given length, entries >= low, sum <= limit, lexicographic"""
    if length == 0:
        yield ()
        return
    # the remaining entries are at least `first`, so first * length <= limit
    for first in range(low, limit // length + 1):
        for rest in _nondecreasing(length - 1, limit - first, first):
            yield (first,) + rest


def enumerate_vectors(max_sum: int) -> List[LorenzVector]:
    """Every Lorenz vector with entry sum <= max_sum, by length then lexicographically"""
    if max_sum < 1:
        raise LinkInputError(f"max sum must be >= 1, got {max_sum}")
    return [
        make_vector(entries)
        for length in range(1, max_sum + 1)
        for entries in _nondecreasing(length, max_sum, 1)
    ]
