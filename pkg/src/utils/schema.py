"""Pydantic models for the "vtc-1" complex files and "vtr-1" reports."""

import json
import logging
import re
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import pydantic
from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Rational

from src.config import settings
from src.core.complex import FacetPairing, Polyhedron, PolyhedralComplex, Provenance, VertexTag
from src.core.errors import InputError

logger = logging.getLogger(__name__)

FRACTION = re.compile(r"^-?\d+(/[1-9]\d*)?$")

Tag = Literal["ideal", "hyperideal"]


class ProvenanceModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    polyhedron: int = Field(ge=0)
    vertices: List[int]


class PolyhedronModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str = ""
    dim: int = Field(ge=1)
    vertices: List[Union[Tuple[str, Tag], Tuple[str, Tag, List[str]]]]
    facets: List[List[int]]
    provenance: Optional[ProvenanceModel] = None

    @field_validator("vertices")
    @classmethod
    def check_coordinates(cls, vertices):
        with_coords = [len(v) == 3 for v in vertices]
        if any(with_coords) and not all(with_coords):
            raise ValueError("either every vertex has coordinates or none does")
        for v in vertices:
            if len(v) == 3:
                for value in v[2]:
                    if not FRACTION.match(value):
                        raise ValueError(f"coordinate '{value}' is not an exact fraction p/q")
        return vertices


class PairingModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    src: Tuple[int, int]
    dst: Tuple[int, int]
    map: List[Tuple[int, int]]


class ComplexDocument(BaseModel):
    """Top level of a "vtc-1" file. Triangulations add the last three keys."""
    model_config = ConfigDict(extra="forbid")

    format: Literal["vtc-1"]
    name: str = ""
    dim: int = Field(ge=1)
    free_boundary: bool = False
    polyhedra: List[PolyhedronModel]
    pairings: List[PairingModel]
    base_fingerprint: Optional[str] = None
    ordering: Optional[List[int]] = None
    certificate: Optional[Dict[str, Any]] = None


class ReportDocument(BaseModel):
    """Top level of a "vtr-1" report."""
    model_config = ConfigDict(extra="forbid")

    format: Literal["vtr-1"]
    status: Literal["completed", "exhausted"]
    input: Dict[str, Any]
    diagonals: Dict[str, Any]
    cover: Optional[Dict[str, Any]] = None
    exhaustion: Optional[Dict[str, Any]] = None
    triangulation: Optional[Dict[str, Any]] = None
    certificate: Optional[Dict[str, Any]] = None
    timings: Dict[str, float] = {}


def parse_document(text: str) -> ComplexDocument:
    try:
        return ComplexDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise InputError(f"Complex file is not valid JSON: {e}")
    except pydantic.ValidationError as e:
        raise InputError(f"Complex file does not match {settings.COMPLEX_FORMAT}: {e}")


def complex_from_document(doc: ComplexDocument) -> PolyhedralComplex:
    polyhedra = []
    for p in doc.polyhedra:
        coords = None
        if p.vertices and len(p.vertices[0]) == 3:
            coords = tuple(tuple(Rational(value) for value in v[2]) for v in p.vertices)
        provenance = None
        if p.provenance is not None:
            provenance = Provenance(p.provenance.polyhedron, tuple(p.provenance.vertices))
        polyhedra.append(Polyhedron(
            dim=p.dim,
            facets=tuple(tuple(f) for f in p.facets),
            tags=tuple(VertexTag(v[1]) for v in p.vertices),
            labels=tuple(v[0] for v in p.vertices),
            coords=coords,
            label=p.label,
            provenance=provenance,
        ))
    pairings = [
        FacetPairing(tuple(pr.src), tuple(pr.dst), tuple(tuple(m) for m in pr.map))
        for pr in doc.pairings
    ]
    return PolyhedralComplex(doc.dim, polyhedra, pairings, free_boundary=doc.free_boundary, label=doc.name)


def parse_complex(text: str) -> PolyhedralComplex:
    return complex_from_document(parse_document(text))


def complex_to_document(complex: PolyhedralComplex, **extra) -> Dict[str, Any]:
    polyhedra = []
    for poly in complex.polyhedra:
        vertices = []
        for v in range(poly.num_vertices):
            entry = [poly.vertex_label(v), poly.tags[v].value]
            if poly.coords is not None:
                entry.append([str(c) for c in poly.coords[v]])
            vertices.append(entry)
        record = {
            "label": poly.label,
            "dim": poly.dim,
            "vertices": vertices,
            "facets": [list(f) for f in poly.facets],
        }
        if poly.provenance is not None:
            record["provenance"] = {
                "polyhedron": poly.provenance.polyhedron,
                "vertices": list(poly.provenance.vertices),
            }
        polyhedra.append(record)

    document = {
        "format": settings.COMPLEX_FORMAT,
        "name": complex.label,
        "dim": complex.dim,
        "free_boundary": complex.free_boundary,
        "polyhedra": polyhedra,
        "pairings": [
            {"src": list(pr.source), "dst": list(pr.target), "map": [list(m) for m in pr.vertex_map]}
            for pr in complex.pairings
        ],
    }
    document.update({k: v for k, v in extra.items() if v is not None})
    return document


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def validate_report(document: Dict[str, Any]) -> ReportDocument:
    try:
        return ReportDocument.model_validate(document)
    except pydantic.ValidationError as e:
        raise InputError(f"Report does not match {settings.REPORT_FORMAT}: {e}")
