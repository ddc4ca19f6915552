"""
Germ documents:

    {"name": ..., "vertices": [{"id", "genus", "self_intersection"}],
     "edges": [[id, id], ...], "branches": [{"id", "coefficient", "attach"}]}

Repeated edges encode several intersection points of the same two curves.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from ..errors import InputError
from ..surface.graph import ResolutionGraph, create_resolution_graph
from .rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)


def _require(document: Mapping[str, Any], key: str, kind: type, where: str) -> Any:
    if key not in document:
        raise InputError(f"{where}: missing key {key!r}")
    value = document[key]
    if kind is int and isinstance(value, bool):
        raise InputError(f"{where}.{key}: expected an integer")
    if not isinstance(value, kind):
        raise InputError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def read_document(path: Union[str, Path]) -> Dict[str, Any]:
    """Load a JSON object from ``path``; any failure is an InputError."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as error:
        raise InputError(f"cannot read {path}: {error.strerror}") from error
    except json.JSONDecodeError as error:
        raise InputError(f"{path}: malformed JSON ({error.msg} at line {error.lineno})") from error
    if not isinstance(document, dict):
        raise InputError(f"{path}: top level must be an object")
    return document


def is_germ_document(document: Mapping[str, Any]) -> bool:
    return "vertices" in document


def parse_germ(document: Mapping[str, Any]) -> ResolutionGraph:
    """
    Build a validated germ from a parsed document.

    Raises:
        InputError: on schema violations
        InvalidGraph, NotAGerm: when the graph itself is rejected
    """
    name = _require(document, "name", str, "germ")
    vertices = []
    for position, entry in enumerate(_require(document, "vertices", list, "germ")):
        where = f"vertices[{position}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected an object")
        vertices.append(
            (
                _require(entry, "id", str, where),
                _require(entry, "genus", int, where),
                _require(entry, "self_intersection", int, where),
            )
        )

    edges = []
    for position, entry in enumerate(document.get("edges", [])):
        if not (isinstance(entry, list) and len(entry) == 2 and all(isinstance(end, str) for end in entry)):
            raise InputError(f"edges[{position}]: expected a pair of vertex ids")
        edges.append((entry[0], entry[1]))

    branches = []
    for position, entry in enumerate(document.get("branches", [])):
        where = f"branches[{position}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected an object")
        coefficient = parse_rational(entry.get("coefficient", "0"), field=f"{where}.coefficient")
        branches.append((_require(entry, "id", str, where), coefficient, _require(entry, "attach", str, where)))

    return create_resolution_graph(name, vertices=vertices, edges=edges, branches=branches)


def load_germ(path: Union[str, Path]) -> ResolutionGraph:
    graph = parse_germ(read_document(path))
    logger.info("loaded germ %s from %s", graph.name, path)
    return graph


def germ_to_document(graph: ResolutionGraph) -> Dict[str, Any]:
    """The inverse of ``parse_germ``."""
    edges: List[List[str]] = [[first, second] for first, second in graph.edges]
    return {
        "name": graph.name,
        "vertices": [
            {"id": vertex.id, "genus": vertex.genus, "self_intersection": vertex.self_intersection}
            for vertex in graph.vertices
        ],
        "edges": edges,
        "branches": [
            {"id": branch.id, "coefficient": format_rational(branch.coefficient), "attach": branch.attach}
            for branch in graph.branches
        ],
    }


def dump_germ(graph: ResolutionGraph) -> str:
    return json.dumps(germ_to_document(graph), indent=2) + "\n"
