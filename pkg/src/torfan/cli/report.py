"""
The aggregated analysis record printed by `torfan analyze`.

Every field is an integer, boolean, string or a container of those, so the JSON
form is canonical once keys are sorted.
"""

import json
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from torfan.constants import COMPLETENESS, EXIT_CODE, PRESENTATION_KIND
from torfan.errors import DisconnectedFan, NotSmoothFan, TopologyError
from torfan.fan import Fan, check_complete, check_smooth, is_flag_like, primitive_collections
from torfan.pi1 import Pi1Report, analyze_pi1, connectedness, verify_presentation
from torfan.topology import (
    is_arrangement_abelian_k_pi_1,
    is_aspherical,
    pi1_arrangement,
)
from torfan.topology import arrangement as build_arrangement
from torfan.util.logging import get_logger

logger = get_logger(__name__)

TORSION_NOTE = "every torsion element of pi_1 has order 2"


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class FanSummary(_Record):
    dim: int
    ray_count: int
    cone_counts: Dict[int, int]


class ValidationSummary(_Record):
    smooth: bool
    smooth_witness: Optional[Tuple[int, ...]] = None
    complete: bool
    flag_like: bool
    primitive_collections: List[Tuple[int, ...]]


class ConnectivitySummary(_Record):
    connected: bool
    component_count: int


class PresentationSummary(_Record):
    generator_count: int
    relator_count: int
    verified: bool


class Pi1Summary(_Record):
    basis: Tuple[int, ...]
    permutation: Tuple[int, ...]
    basis_is_pairwise_conical: bool
    abelian: Optional[bool] = None
    case: Optional[str] = None
    failed_step: Optional[int] = None
    structure: Optional[str] = None
    abelianization: str
    full: PresentationSummary
    simplified: Optional[PresentationSummary] = None
    torsion_note: str = TORSION_NOTE


class ArrangementSummary(_Record):
    subspaces: List[Tuple[int, ...]]
    codimensions: List[int]
    k_pi_1: bool
    abelian_k_pi_1: bool
    normal_generator_count: int
    free_abelian_rank: Optional[int] = None


class AnalysisReport(_Record):
    fan_summary: FanSummary
    validation: ValidationSummary
    aspherical: bool
    connectivity: ConnectivitySummary
    pi1: Optional[Pi1Summary] = None
    arrangement: Optional[ArrangementSummary] = None
    warnings: List[str] = []
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2)


def _summarize_pi1(fan: Fan, report: Pi1Report) -> Pi1Summary:
    full = report.presentation_full
    summary = {
        "basis": report.basis.basis_ray_indices,
        "permutation": report.basis.permutation,
        "basis_is_pairwise_conical": report.basis.basis_is_pairwise_conical,
        "abelianization": report.abelianization.describe(),
        "full": PresentationSummary(
            generator_count=len(full.generators),
            relator_count=len(full.relators),
            verified=verify_presentation(fan, PRESENTATION_KIND.FULL).passed,
        ),
    }
    if report.abelian is not None:
        summary["abelian"] = report.abelian.abelian
        summary["case"] = report.abelian.case.value
        summary["failed_step"] = report.abelian.step
    if report.structure is not None:
        summary["structure"] = report.structure.describe()
    if report.presentation_simplified is not None:
        simplified = report.presentation_simplified
        summary["simplified"] = PresentationSummary(
            generator_count=len(simplified.generators),
            relator_count=len(simplified.relators),
            verified=verify_presentation(fan, PRESENTATION_KIND.SIMPLIFIED).passed,
        )
    return Pi1Summary(**summary)


def _summarize_arrangement(fan: Fan, warnings: List[str]) -> Optional[ArrangementSummary]:
    try:
        subspace_arrangement = build_arrangement(fan)
        group = pi1_arrangement(fan)
    except TopologyError as e:
        warnings.append(f"arrangement skipped: {e}")
        return None
    warnings.extend(subspace_arrangement.warnings)
    codimensions = [s.codimension for s in subspace_arrangement.subspaces]
    return ArrangementSummary(
        subspaces=[s.zero_coordinates for s in subspace_arrangement.subspaces],
        codimensions=codimensions,
        k_pi_1=all(c == 2 for c in codimensions),
        abelian_k_pi_1=is_arrangement_abelian_k_pi_1(fan),
        normal_generator_count=len(group.normal_generators),
        free_abelian_rank=group.free_abelian_rank,
    )


def build_report(fan: Fan) -> Tuple[AnalysisReport, EXIT_CODE]:
    smoothness = check_smooth(fan)
    flag_like = is_flag_like(fan)
    connected, components = connectedness(fan)
    warnings: List[str] = []
    report = {
        "fan_summary": FanSummary(
            dim=fan.dim, ray_count=fan.ray_count, cone_counts=fan.cone_counts()
        ),
        "validation": ValidationSummary(
            smooth=smoothness.smooth,
            smooth_witness=smoothness.witness,
            complete=check_complete(fan) is COMPLETENESS.COMPLETE,
            flag_like=flag_like,
            primitive_collections=primitive_collections(fan),
        ),
        "aspherical": is_aspherical(fan),
        "connectivity": ConnectivitySummary(
            connected=connected, component_count=components
        ),
        "warnings": warnings,
    }

    exit_code = EXIT_CODE.SUCCESS
    if not smoothness.smooth:
        report["error"] = str(NotSmoothFan(smoothness.witness))
        exit_code = EXIT_CODE.SEMANTIC_FAILURE
    elif not connected:
        report["error"] = str(DisconnectedFan(components))
        exit_code = EXIT_CODE.SEMANTIC_FAILURE
        report["arrangement"] = _summarize_arrangement(fan, warnings)
    else:
        report["pi1"] = _summarize_pi1(fan, analyze_pi1(fan))
        report["arrangement"] = _summarize_arrangement(fan, warnings)

    if exit_code is not EXIT_CODE.SUCCESS:
        logger.info("analysis incomplete", error=report["error"])
    return AnalysisReport(**report), exit_code


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


def render_text(report: AnalysisReport) -> str:
    summary = report.fan_summary
    validation = report.validation
    lines = [
        f"fan: dim {summary.dim}, {summary.ray_count} rays, cones by dimension "
        + ", ".join(f"{k}:{v}" for k, v in summary.cone_counts.items()),
        f"smooth: {_flag(validation.smooth)}"
        + (f" (witness {list(validation.smooth_witness)})" if validation.smooth_witness else ""),
        f"complete: {_flag(validation.complete)}",
        f"flag_like: {_flag(validation.flag_like)}",
        "primitive collections: "
        + (" ".join(str(list(c)) for c in validation.primitive_collections) or "none"),
        f"aspherical: {_flag(report.aspherical)}",
        f"connected: {_flag(report.connectivity.connected)}"
        f" (components: {report.connectivity.component_count})",
    ]
    if report.pi1 is not None:
        pi1 = report.pi1
        lines += [
            f"pi1 basis: {list(pi1.basis)} permutation: {list(pi1.permutation)}",
            f"pi1 abelian: {_flag(pi1.abelian)}" + (f" ({pi1.case})" if pi1.case else ""),
            f"pi1 structure: {pi1.structure or 'n/a'}",
            f"pi1 abelianization: {pi1.abelianization}",
            f"full presentation: {pi1.full.generator_count} generators, "
            f"{pi1.full.relator_count} relators, verified {_flag(pi1.full.verified)}",
        ]
        if pi1.simplified is not None:
            lines.append(
                f"simplified presentation: {pi1.simplified.generator_count} generators, "
                f"{pi1.simplified.relator_count} relators, "
                f"verified {_flag(pi1.simplified.verified)}"
            )
        lines.append(f"note: {pi1.torsion_note}")
    if report.arrangement is not None:
        arrangement = report.arrangement
        lines += [
            "arrangement: "
            + (
                " ".join(
                    f"{list(s)}/codim {c}"
                    for s, c in zip(arrangement.subspaces, arrangement.codimensions)
                )
                or "empty"
            ),
            f"arrangement K(pi,1): {_flag(arrangement.k_pi_1)}",
            f"arrangement abelian K(pi,1): {_flag(arrangement.abelian_k_pi_1)}",
        ]
    lines += [f"warning: {w}" for w in report.warnings]
    if report.error:
        lines.append(f"error: {report.error}")
    return "\n".join(lines)
