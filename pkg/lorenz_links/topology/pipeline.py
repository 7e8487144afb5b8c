# CHECKPOINT_9_VERIFICATION_PIPELINE
"""
Verification Pipeline
=====================
Builds the three representations of a Lorenz link and checks that they
describe the same oriented link:
- Lorenz braid: the positive permutation braid of the shuffle
- T-braid: the T-link word on p_s strands
- Grid: the diagonal grid diagram of the shuffle
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from lorenz_links.topology.braid import (
    BraidWord,
    braid_permutation,
    is_permutation_braid,
    lorenz_word,
    tlink_word,
)
from lorenz_links.topology.grid import GridDiagram, build_grid, render_ascii, render_svg
from lorenz_links.topology.invariants import InvariantReport, equal_up_to_units, full_report
from lorenz_links.topology.lorenz_core import (
    LorenzVector,
    Shuffle,
    TLinkParams,
    compress,
    decompress,
    format_tlink,
    format_vector,
    lorenz_strand_count,
    make_vector,
    shuffle_from_vector,
    vector_from_shuffle,
)
from lorenz_links.utils.logger import get_logger

logger = get_logger("pipeline")


# ============================================
# Result Models
# ============================================

class BraidRecord(BaseModel):
    strands: int
    letters: List[int]
    text: str = ""

    @classmethod
    def of(cls, w: BraidWord) -> "BraidRecord":
        return cls(strands=w.strands, letters=list(w.letters), text=w.to_text())


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class InstanceResult(BaseModel):
    """Everything computed for one Lorenz vector, and the verdict"""

    vector: List[int]
    tlink: List[Tuple[int, int]]
    braids: Dict[str, BraidRecord]
    invariants: Dict[str, InvariantReport]
    checks: List[CheckResult] = []
    verified: bool
    mismatch_detail: Optional[str] = None
    warnings: List[str] = []


class BatteryResult(BaseModel):
    max_sum: int
    instances: List[InstanceResult]
    passed: int
    failed: int
    first_mismatch: Optional[str] = None


class Representations(BaseModel):
    """The parameterizations of one Lorenz link and the objects built from them"""

    model_config = ConfigDict(frozen=True)

    vector: LorenzVector
    tlink: TLinkParams
    shuffle: Shuffle
    lorenz: BraidWord
    tbraid: BraidWord
    grid: GridDiagram


def build_representations(v: LorenzVector) -> Representations:
    sigma = shuffle_from_vector(v)
    t = compress(v)
    return Representations(
        vector=v,
        tlink=t,
        shuffle=sigma,
        lorenz=lorenz_word(sigma),
        tbraid=tlink_word(t),
        grid=build_grid(sigma),
    )


def show_document(reps: Representations, include_svg: bool = False) -> Dict[str, Any]:
    """JSON-ready description of the representations (the `show` output)"""
    return {
        "vector": list(reps.vector.entries),
        "vector_text": format_vector(reps.vector),
        "tlink": [list(pair) for pair in reps.tlink.pairs],
        "tlink_text": format_tlink(reps.tlink),
        "shuffle": list(reps.shuffle.images),
        "braids": {
            "lorenz": BraidRecord.of(reps.lorenz).model_dump(),
            "tlink": BraidRecord.of(reps.tbraid).model_dump(),
        },
        "lorenz_strands": lorenz_strand_count(reps.tlink),
        "grid": render_ascii(reps.grid),
        "svg": render_svg(reps.grid) if include_svg else None,
    }


# ============================================
# Pipeline
# ============================================

class VerificationPipeline:
    """
    Three-stage verification of one instance:
    1. Build - shuffle, both braid words and the grid diagram
    2. Report - invariants from each representation independently
    3. Compare - structural identities and invariant equality
    """

    def __init__(
        self,
        max_crossings: Optional[int] = None,
        method: Optional[str] = None,
        skip: Iterable[str] = (),
    ):
        self.max_crossings = max_crossings
        self.method = method
        self.skip = tuple(sorted(set(skip)))

    def reports(self, reps: Representations) -> Dict[str, InvariantReport]:
        options = {"max_crossings": self.max_crossings, "method": self.method, "skip": self.skip}
        return {
            "lorenz-braid": full_report("lorenz-braid", reps.lorenz, **options),
            "t-braid": full_report("t-braid", reps.tbraid, **options),
            "grid": full_report("grid", reps.grid, **options),
        }

    def compare(
        self, reps: Representations, reports: Dict[str, InvariantReport]
    ) -> Tuple[List[CheckResult], List[str]]:
        checks: List[CheckResult] = []
        warnings: List[str] = []

        def check(name: str, passed: bool, detail: str = "") -> None:
            checks.append(CheckResult(name=name, passed=bool(passed), detail="" if passed else detail))

        v, t, sigma = reps.vector, reps.tlink, reps.shuffle
        lorenz, tbraid, grid = reports["lorenz-braid"], reports["t-braid"], reports["grid"]

        check(
            "roundtrip",
            decompress(t) == v and vector_from_shuffle(sigma) == v,
            f"conversions of {format_vector(v)} do not round-trip",
        )

        permutation = braid_permutation(reps.lorenz)
        check(
            "lorenz-permutation",
            permutation == sigma.images and is_permutation_braid(reps.lorenz),
            f"Lorenz braid permutation {list(permutation)} differs from σ = {list(sigma.images)} "
            f"or repeats a crossing",
        )

        difference = len(reps.lorenz) - len(reps.tbraid)
        check("word-length", difference == v.k, f"word lengths differ by {difference}, expected k = {v.k}")

        expected_euler = t.strands + v.k - sum(p * q for p, q in t.pairs)
        check(
            "euler-characteristic",
            lorenz.euler_characteristic == tbraid.euler_characteristic == expected_euler,
            f"χ: lorenz {lorenz.euler_characteristic}, t-braid {tbraid.euler_characteristic}, "
            f"expected {expected_euler}",
        )

        check(
            "components",
            lorenz.components == tbraid.components == grid.components == sigma.cycles,
            f"components: lorenz {lorenz.components}, t-braid {tbraid.components}, "
            f"grid {grid.components}, cycles of σ {sigma.cycles}",
        )

        check("genus", lorenz.genus == tbraid.genus, f"genus: lorenz {lorenz.genus}, t-braid {tbraid.genus}")

        if "alexander" in self.skip:
            warnings.append("Alexander comparison disabled")
        else:
            check(
                "alexander",
                equal_up_to_units(lorenz.alexander, tbraid.alexander),
                f"Δ: lorenz {lorenz.alexander}, t-braid {tbraid.alexander}",
            )

        check(
            "grid-positive",
            grid.writhe == grid.crossings,
            f"grid has {grid.crossings} crossings but writhe {grid.writhe}",
        )

        computed = {name: r.kauffman_f for name, r in reports.items() if r.f_computed}
        for name, r in reports.items():
            if not r.f_computed:
                warnings.append(f"{name}: bracket {r.kauffman_status}")
        values = list(computed.values())
        if len(values) < 2:
            warnings.append("fewer than two sources computed f; bracket comparison not performed")
        else:
            check(
                "kauffman-f",
                all(value == values[0] for value in values),
                "f: " + "; ".join(f"{name} {value}" for name, value in computed.items()),
            )
        return checks, warnings

    def verify(self, v: LorenzVector) -> InstanceResult:
        logger.info(f"Verifying {format_vector(v)} = {format_tlink(compress(v))}")
        reps = build_representations(v)
        reports = self.reports(reps)
        checks, warnings = self.compare(reps, reports)
        for warning in warnings:
            logger.warning(f"{format_vector(v)}: {warning}")

        failures = [c for c in checks if not c.passed]
        mismatch = f"{failures[0].name}: {failures[0].detail}" if failures else None
        if mismatch:
            logger.error(f"✗ {format_vector(v)} mismatch - {mismatch}")
        else:
            logger.info(f"✓ {format_vector(v)} verified ({len(checks)} checks)")

        return InstanceResult(
            vector=list(v.entries),
            tlink=list(reps.tlink.pairs),
            braids={"lorenz": BraidRecord.of(reps.lorenz), "tlink": BraidRecord.of(reps.tbraid)},
            invariants=reports,
            checks=checks,
            verified=not failures,
            mismatch_detail=mismatch,
            warnings=warnings,
        )


# ============================================
# Convenience Functions
# ============================================

def verify_vector(v: LorenzVector, **options) -> InstanceResult:
    """Verify one instance given by its Lorenz vector"""
    return VerificationPipeline(**options).verify(v)


def verify_tlink(t: TLinkParams, **options) -> InstanceResult:
    """Verify one instance given by its T-link parameters"""
    return VerificationPipeline(**options).verify(decompress(t))


def _verify_entries(entries: Tuple[int, ...], options: Dict[str, Any]) -> InstanceResult:
    return verify_vector(make_vector(entries), **options)


def run_battery(
    vectors: Sequence[LorenzVector],
    max_sum: int,
    jobs: int = 1,
    **options,
) -> BatteryResult:
    """Verify every vector; results keep the order of ``vectors`` for any job count"""
    logger.info(f"Running battery: {len(vectors)} instances, max sum {max_sum}, {jobs} job(s)")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_verify_entries, [v.entries for v in vectors], [options] * len(vectors))
            )
    else:
        pipeline = VerificationPipeline(**options)
        results = [pipeline.verify(v) for v in vectors]

    failed = [r for r in results if not r.verified]
    first = None
    if failed:
        first = f"{format_vector(make_vector(failed[0].vector))}: {failed[0].mismatch_detail}"
    logger.info(f"✓ Battery done: {len(results) - len(failed)} passed, {len(failed)} failed")
    return BatteryResult(
        max_sum=max_sum,
        instances=results,
        passed=len(results) - len(failed),
        failed=len(failed),
        first_mismatch=first,
    )
