# CHECKPOINT_10_API_INTEGRATION
"""
Battery API Endpoint
====================
Exhaustive verification over small Lorenz vectors.
"""

from typing import List, Literal, Optional

from fastapi import APIRouter, HTTPException, Query

from lorenz_links.cli.enumeration import enumerate_vectors
from lorenz_links.config import settings
from lorenz_links.topology.pipeline import BatteryResult, run_battery
from lorenz_links.utils.logger import get_logger

logger = get_logger("battery_api")
router = APIRouter(prefix="/battery", tags=["battery"])


@router.get("", response_model=BatteryResult)
def run_battery_endpoint(
    max_sum: int = Query(default=5, ge=1, description="Largest entry sum"),
    max_bracket_crossings: Optional[int] = Query(default=None, ge=0),
    skip: List[Literal["jones", "alexander", "kauffman"]] = Query(default=[]),
):
    """Verify every Lorenz vector whose entries sum to at most max_sum."""
    if max_sum > settings.API_BATTERY_MAX_SUM:
        raise HTTPException(
            status_code=400,
            detail=f"max_sum above {settings.API_BATTERY_MAX_SUM} is only available from the CLI",
        )
    logger.info(f"Battery via API: max_sum={max_sum}")
    return run_battery(enumerate_vectors(max_sum), max_sum, max_crossings=max_bracket_crossings, skip=skip)
