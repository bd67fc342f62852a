"""TOML input files for graphs, germs, and fibrations.

All numbers must be decimal integers; a float literal anywhere is a
ParseError, so exactness is preserved end to end. Schemas:

graph::

    vertices = [3, 2, 2]            # e_j, curve E_j has E_j^2 = -e_j
    edges = [[0, 1], [1, 2]]        # 0-based vertex pairs
    branches = [{vertex = 0, mult = 2, inter = 1}, {vertex = 2, mult = 4}]

germ::

    contact = [[0, 1, 2]]           # optional; omitted pairs are generic
    branches = [{kind = "cusp", p = 2, q = 5, mult = 2},
                {kind = "smooth", mult = 7}]

fibration::

    baseGenus = 1
    fibers = [{point = "c", components = [[1, 2], [1, 1]]}]
"""

from __future__ import annotations

from pathlib import Path

import tomli

from .dualgraph import DualGraph
from .errors import ParseError
from .germs import GermBranch, GermConfig, cusp_branch, smooth_branch
from .orbibase import FiberData, FibrationData


def _reject_floats(value, path: str) -> None:
    if isinstance(value, float):
        raise ParseError(f"{path}: float literals are not accepted, "
                         "all numbers must be integers")
    if isinstance(value, dict):
        for k, v in value.items():
            _reject_floats(v, f"{path}.{k}" if path else str(k))
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _reject_floats(v, f"{path}[{i}]")


def load_document(path: str | Path) -> dict:
    try:
        with open(path, "rb") as handle:
            doc = tomli.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except tomli.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    _reject_floats(doc, "")
    return doc


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing required key '{key}'")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}")
    return value


def _int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer")
    return value


def _int_pair(value, where: str) -> tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"{where}: expected a pair of integers")
    return _int(value[0], f"{where}[0]"), _int(value[1], f"{where}[1]")


def parse_graph(doc: dict, where: str = "graph") -> DualGraph:
    vertices = [_int(v, f"{where}.vertices[{i}]")
                for i, v in enumerate(_require(doc, "vertices", list, where))]
    edges = [_int_pair(e, f"{where}.edges[{i}]")
             for i, e in enumerate(doc.get("edges", []))]
    branches = []
    for i, b in enumerate(doc.get("branches", [])):
        bw = f"{where}.branches[{i}]"
        if not isinstance(b, dict):
            raise ParseError(f"{bw}: expected a table")
        branches.append({
            "vertex": _int(_require(b, "vertex", int, bw), f"{bw}.vertex"),
            "mult": _int(_require(b, "mult", int, bw), f"{bw}.mult"),
            "inter": _int(b.get("inter", 1), f"{bw}.inter"),
        })
    try:
        return DualGraph.make(vertices, edges, branches)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def parse_germ(doc: dict, where: str = "germ") -> GermConfig:
    branches: list[GermBranch] = []
    for i, b in enumerate(_require(doc, "branches", list, where)):
        bw = f"{where}.branches[{i}]"
        if not isinstance(b, dict):
            raise ParseError(f"{bw}: expected a table")
        kind = _require(b, "kind", str, bw)
        mult = _int(_require(b, "mult", int, bw), f"{bw}.mult")
        try:
            if kind == "smooth":
                branches.append(smooth_branch(mult))
            elif kind == "cusp":
                p = _int(_require(b, "p", int, bw), f"{bw}.p")
                q = _int(_require(b, "q", int, bw), f"{bw}.q")
                branches.append(cusp_branch(p, q, mult))
            else:
                raise ParseError(f"{bw}.kind: expected 'smooth' or 'cusp', got {kind!r}")
        except ValueError as exc:
            raise ParseError(f"{bw}: {exc}") from exc
    contacts = {}
    for i, entry in enumerate(doc.get("contact", [])):
        cw = f"{where}.contact[{i}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"{cw}: expected [i, j, t]")
        a, b_, t = (_int(x, f"{cw}[{k}]") for k, x in enumerate(entry))
        if not (0 <= a < len(branches) and 0 <= b_ < len(branches)) or a == b_:
            raise ParseError(f"{cw}: invalid branch pair ({a}, {b_})")
        contacts[(a, b_)] = t
    try:
        return GermConfig.make(branches, contacts)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def parse_fibration(doc: dict, where: str = "fibration") -> FibrationData:
    genus = _int(_require(doc, "baseGenus", int, where), f"{where}.baseGenus")
    fibers = []
    for i, f in enumerate(doc.get("fibers", [])):
        fw = f"{where}.fibers[{i}]"
        if not isinstance(f, dict):
            raise ParseError(f"{fw}: expected a table")
        point = _require(f, "point", str, fw)
        comps = [_int_pair(c, f"{fw}.components[{k}]")
                 for k, c in enumerate(_require(f, "components", list, fw))]
        try:
            fibers.append((point, FiberData.make(comps)))
        except ValueError as exc:
            raise ParseError(f"{fw}: {exc}") from exc
    try:
        return FibrationData.make(genus, fibers)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc
