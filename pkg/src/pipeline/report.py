"""Pipeline reports in machine ("vtr-1") and human form."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from src.config import settings


class PipelineStatus(Enum):
    COMPLETED = "completed"
    EXHAUSTED = "exhausted"


@dataclass
class PipelineReport:
    status: PipelineStatus
    input: Dict[str, Any]
    diagonals: Dict[str, Any]
    cover: Optional[Dict[str, Any]] = None
    exhaustion: Optional[Dict[str, Any]] = None
    triangulation: Optional[Dict[str, Any]] = None
    certificate: Optional[Dict[str, Any]] = None
    timings: Dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        record = {
            "format": settings.REPORT_FORMAT,
            "status": self.status.value,
            "input": self.input,
            "diagonals": self.diagonals,
        }
        for key in ("cover", "exhaustion", "triangulation", "certificate"):
            value = getattr(self, key)
            if value is not None:
                record[key] = value
        if timings:
            record["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return record

    def to_text(self, timings: bool = False) -> str:
        lines: List[str] = [
            f"Complex: {self.input.get('name') or '(unnamed)'}  dim {self.input.get('dim')}  "
            f"{self.input.get('polyhedra')} polyhedra  {self.input.get('vertex_classes')} vertex classes",
            f"Input cells with at most one ideal vertex: {'yes' if self.input.get('at_most_one_ideal_vertex') else 'no'}",
            f"Diagonals: {self.diagonals.get('total')} total, {self.diagonals.get('returning')} returning",
        ]
        if self.cover is not None:
            lines.append(f"Cover: degree {self.cover.get('degree')} ({self.cover.get('mode', 'none')})")
        if self.status == PipelineStatus.EXHAUSTED:
            ex = self.exhaustion or {}
            lines.append(f"Search exhausted ({ex.get('reason')}) after degrees {ex.get('degrees_tried')}")
            if ex.get("checkpoint"):
                lines.append(f"Resume with: {ex['checkpoint']}")
        if self.triangulation is not None:
            histogram = ", ".join(f"{k}: {v}" for k, v in self.triangulation["ideal_vertex_histogram"].items())
            lines.append(f"Triangulation: {self.triangulation['simplices']} simplices")
            lines.append(f"Ideal vertices per simplex: {histogram}")
        if self.certificate is not None:
            lines.append(f"Certificate: {'passed' if self.certificate['passed'] else 'FAILED'}")
            lines.extend(f"  - {reason}" for reason in self.certificate["failures"])
        if timings and self.timings:
            lines.append("Timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in self.timings.items()))
        return "\n".join(lines) + "\n"
