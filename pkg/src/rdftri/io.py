"""JSON interchange format for triangulations.

A file holds ``dim``, ``vertices`` and ``facets`` plus optional ``coloring``,
``lifting`` (``base`` and optionally ``eps``, as ``"p/q"`` strings),
``facet_description`` (``normals`` and ``offsets`` of ``A x + b >= 0``) and
``volume`` (normalized volume of the hull). Serialization is canonical: keys
sorted, facets sorted, no whitespace, so reading and writing a file
reproduces it byte for byte.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from .complex import Triangulation
from .errors import TriangulationError
from .lattice import PointConfiguration
from .lifting import TwoLevelLifting


class FileFormatError(TriangulationError):
    """Input that does not describe a valid triangulation; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


@lru_cache(maxsize=None)
def schema() -> dict:
    text = resources.files("rdftri").joinpath("schemas/triangulation.schema.json").read_text()
    return json.loads(text)


def _rational(text: str) -> str:
    x = Fraction(text)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def to_document(K: Triangulation) -> dict:
    doc = {
        "dim": K.dim,
        "vertices": [list(p) for p in K.config.points],
        "facets": K.facets.tolist(),
    }
    if K.coloring is not None:
        doc["coloring"] = list(K.coloring)
    if K.lifting is not None:
        lift = {"base": [_rational(x) for x in K.lifting.base]}
        if not K.lifting.single_level:
            lift["eps"] = [_rational(x) for x in K.lifting.eps]
        doc["lifting"] = lift
    if K.config.facets is not None:
        doc["facet_description"] = {
            "normals": [list(n) for n, _ in K.config.facets],
            "offsets": [b for _, b in K.config.facets],
        }
    if K.config.volume is not None:
        doc["volume"] = K.config.volume
    return doc


def dumps(K: Triangulation) -> str:
    return canonical_json(to_document(K))


def _field_path(error: jsonschema.ValidationError) -> str:
    return "/".join(str(p) for p in error.absolute_path) or "<root>"


def from_document(doc) -> Triangulation:
    try:
        jsonschema.validate(doc, schema())
    except jsonschema.ValidationError as exc:
        raise FileFormatError(_field_path(exc), exc.message) from None
    dim = doc["dim"]
    desc = doc.get("facet_description")
    facets = None
    if desc is not None:
        if len(desc["normals"]) != len(desc["offsets"]):
            raise FileFormatError("facet_description", "normals and offsets differ in length")
        facets = tuple(zip(desc["normals"], desc["offsets"]))
    try:
        config = PointConfiguration(dim, tuple(map(tuple, doc["vertices"])), facets, doc.get("volume"))
    except ValueError as exc:
        raise FileFormatError("vertices", str(exc)) from None
    lifting = None
    if "lifting" in doc:
        try:
            base = [Fraction(x) for x in doc["lifting"]["base"]]
            eps = [Fraction(x) for x in doc["lifting"]["eps"]] if "eps" in doc["lifting"] else None
            lifting = TwoLevelLifting(base, eps)
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError("lifting", str(exc)) from None
    if "coloring" in doc and len(doc["coloring"]) != len(config):
        raise FileFormatError("coloring", f"expected {len(config)} entries, got {len(doc['coloring'])}")
    if lifting is not None and len(lifting) != len(config):
        raise FileFormatError("lifting", f"expected {len(config)} entries, got {len(lifting)}")
    try:
        return Triangulation(config, doc["facets"], coloring=doc.get("coloring"), lifting=lifting)
    except (ValueError, IndexError, TriangulationError) as exc:
        raise FileFormatError("facets", str(exc)) from None


def loads(text: str) -> Triangulation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError("<json>", str(exc)) from None
    return from_document(doc)


def read(path: str) -> Triangulation:
    """Read a triangulation file; ``"-"`` reads standard input."""
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise FileFormatError(path, exc.strerror or str(exc)) from None


def write(K: Triangulation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(K))
