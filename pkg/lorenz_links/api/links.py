# CHECKPOINT_10_API_INTEGRATION
"""
Link API Endpoints
==================
REST endpoints for showing, verifying and reporting on single links.
"""

from typing import List, Literal, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field, model_validator

from lorenz_links.cli.parsing import parse_braid_text, parse_tlink_spec, parse_vector_spec
from lorenz_links.config import settings
from lorenz_links.topology.errors import LinkInputError
from lorenz_links.topology.invariants import InvariantReport, full_report
from lorenz_links.topology.lorenz_core import LorenzVector, decompress
from lorenz_links.topology.pipeline import (
    BraidRecord,
    InstanceResult,
    build_representations,
    show_document,
    verify_vector,
)
from lorenz_links.utils.logger import get_logger

logger = get_logger("links_api")
router = APIRouter(prefix="/links", tags=["links"])

Skippable = Literal["jones", "alexander", "kauffman"]


# ============================================
# Request/Response Models
# ============================================

class LinkRequest(BaseModel):
    """A link given by exactly one of its Lorenz vector or T-link parameters"""
    vector: Optional[str] = Field(default=None, description='Lorenz vector, e.g. "3^4,5^3"')
    tlink: Optional[str] = Field(default=None, description='T-link parameters, e.g. "(3,4),(5,3)"')

    @model_validator(mode="after")
    def exactly_one_source(self) -> "LinkRequest":
        if (self.vector is None) == (self.tlink is None):
            raise ValueError("give exactly one of vector or tlink")
        return self

    def lorenz_vector(self) -> LorenzVector:
        """Parsed link; LinkInputError above API_MAX_STRANDS"""
        if self.vector is not None:
            return parse_vector_spec(self.vector, max_strands=settings.API_MAX_STRANDS)
        return decompress(parse_tlink_spec(self.tlink, max_strands=settings.API_MAX_STRANDS))


class ShowRequest(LinkRequest):
    include_svg: bool = False


class ShowResponse(BaseModel):
    vector: List[int]
    vector_text: str
    tlink: List[List[int]]
    tlink_text: str
    shuffle: List[int]
    braids: dict[str, BraidRecord]
    lorenz_strands: int
    grid: str
    svg: Optional[str] = None


class InvariantOptions(BaseModel):
    max_bracket_crossings: Optional[int] = Field(default=None, ge=0)
    bracket_method: Optional[Literal["frontier", "states"]] = None
    skip: List[Skippable] = []


class VerifyRequest(LinkRequest, InvariantOptions):
    pass


class ReportRequest(InvariantOptions):
    braid: str = Field(..., description="Braid word, e.g. \"s1 s2 s1'\"")
    strands: Optional[int] = Field(default=None, ge=1)


# ============================================
# Link Endpoints
# ============================================

@router.post("/show", response_model=ShowResponse)
def show_link(request: ShowRequest):
    """Vector, T-link parameters, both braid words and the grid diagram."""
    try:
        reps = build_representations(request.lorenz_vector())
    except LinkInputError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return show_document(reps, include_svg=request.include_svg)


@router.post("/verify", response_model=InstanceResult)
def verify_link(request: VerifyRequest):
    """Cross-check the Lorenz braid, T-braid and grid of one link."""
    try:
        v = request.lorenz_vector()
    except LinkInputError as e:
        raise HTTPException(status_code=400, detail=str(e))
    logger.info(f"Verifying via API: {v}")
    return verify_vector(
        v,
        max_crossings=request.max_bracket_crossings,
        method=request.bracket_method,
        skip=request.skip,
    )


@router.post("/report", response_model=InvariantReport)
def report_braid(request: ReportRequest):
    """Invariants of the closure of an arbitrary braid."""
    try:
        word = parse_braid_text(
            request.braid,
            request.strands,
            max_strands=settings.API_MAX_STRANDS,
            max_letters=settings.API_MAX_LETTERS,
        )
    except LinkInputError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return full_report(
        "braid",
        word,
        max_crossings=request.max_bracket_crossings,
        method=request.bracket_method,
        skip=request.skip,
    )
