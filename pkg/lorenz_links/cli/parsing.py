"""
Input Parsing
=============
Text forms accepted on the command line and by the API:

- Lorenz vector: ``3^4,5^3`` or ``3,3,3,3,5,5,5``, optionally wrapped in ⟨…⟩ or <…>
- T-link parameters: ``(3,4),(5,3)``, optionally wrapped in T(…)
- Braid word: ``s1 s2 s1'`` (``'`` or ``^-1`` marks an inverse) or signed integers ``1 2 -1``

Whitespace is ignored everywhere.
"""

import re
from typing import List, Optional, Tuple

from lorenz_links.topology.braid import BraidWord, make_braid
from lorenz_links.topology.errors import LinkInputError
from lorenz_links.topology.lorenz_core import LorenzVector, TLinkParams, make_tlink, make_vector

VECTOR_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?")
PAIR = r"\((\d+),(\d+)\)"
TLINK_TEXT = re.compile(rf"{PAIR}(?:,{PAIR})*")
BRAID_TOKEN = re.compile(r"(?:[sσ](\d+)(\^-1|')?|(-?\d+))")


def _squeeze(text: str) -> str:
    return re.sub(r"\s+", "", text or "")


def _check_limit(value: int, limit: Optional[int], what: str) -> None:
    if limit is not None and value > limit:
        raise LinkInputError(f"{what} exceeds the limit of {limit}")


def _unwrap(text: str, prefix: str, suffix: str) -> str:
    if text.startswith(prefix) and text.endswith(suffix):
        return text[len(prefix): len(text) - len(suffix)]
    return text


def parse_vector_spec(text: str, max_strands: Optional[int] = None) -> LorenzVector:
    """
    ``3^4,5^3`` → ⟨3,3,3,3,5,5,5⟩.

    With ``max_strands`` the Lorenz braid strand count k + v_k is checked
    before any entries are expanded.
    """
    body = _squeeze(text)
    body = _unwrap(_unwrap(body, "⟨", "⟩"), "<", ">")
    if not body:
        raise LinkInputError("empty Lorenz vector")
    entries: List[int] = []
    k, largest = 0, 0
    for token in body.split(","):
        match = VECTOR_TOKEN.fullmatch(token)
        if not match:
            raise LinkInputError(f"cannot parse vector entry {token!r}; expected p or p^q")
        value, repeat = int(match.group(1)), match.group(2)
        count = 1 if repeat is None else int(repeat)
        if count < 1:
            raise LinkInputError(f"repeat count must be >= 1 in {token!r}")
        k, largest = k + count, max(largest, value)
        _check_limit(k + largest, max_strands, "Lorenz braid strand count")
        entries.extend([value] * count)
    return make_vector(entries)


def parse_tlink_spec(text: str, max_strands: Optional[int] = None) -> TLinkParams:
    """``(3,4),(5,3)`` → ((3,4),(5,3))"""
    body = _unwrap(_squeeze(text), "T(", ")")
    if not TLINK_TEXT.fullmatch(body):
        raise LinkInputError(f"cannot parse T-link parameters {text!r}; expected (p,q),(p,q),...")
    pairs: List[Tuple[int, int]] = [(int(p), int(q)) for p, q in re.findall(PAIR, body)]
    if max_strands is not None:
        strands = sum(q for _, q in pairs) + max(p for p, _ in pairs)
        _check_limit(strands, max_strands, "Lorenz braid strand count")
    return make_tlink(pairs)


def parse_braid_text(
    text: str,
    strands: Optional[int] = None,
    max_strands: Optional[int] = None,
    max_letters: Optional[int] = None,
) -> BraidWord:
    """
    Parse a braid word. Without ``strands`` the word lives on one more strand
    than its largest generator index.
    """
    letters: List[int] = []
    for token in re.split(r"[\s,]+", (text or "").strip()):
        if not token:
            continue
        match = BRAID_TOKEN.fullmatch(token)
        if not match:
            raise LinkInputError(f"cannot parse braid letter {token!r}; expected s<i>, s<i>' or a signed integer")
        if match.group(3) is not None:
            letter = int(match.group(3))
        else:
            letter = int(match.group(1)) * (-1 if match.group(2) else 1)
        if letter == 0:
            raise LinkInputError("generator index 0 does not exist")
        letters.append(letter)
        _check_limit(len(letters), max_letters, "braid length")
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    _check_limit(strands, max_strands, "strand count")
    return make_braid(strands, letters)
