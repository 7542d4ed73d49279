"""
JSON interchange documents for Hopf algebras, representations, twists,
cocycles, comodules and group-like lists.

Scalars are written in the canonical scalar grammar; indices are 0-based;
omitted sparse entries are zero. Every document carries the conductor of
its field.
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

from config import JSON_INDENT, REPORT_ENCODING
from src.data.session import SessionConfig
from src.field.cyclotomic import CyclotomicContext
from src.field.parsing import format_scalar, parse_scalar
from src.hopf.algebra import AlgebraData
from src.hopf.structure import HopfAlgebraData
from src.image.representation import Representation
from src.linalg.matrix import Matrix, Vector
from src.pointed.grouplikes import GroupLikeSet
from src.tannaka.comodule import Comodule, make_comodule
from src.twisting.cocycle import Cocycle, make_cocycle
from src.twisting.twist import TwistElement, make_twist
from src.utils.error_handling import ConfigurationException, DimensionMismatch, validate_config


logger = logging.getLogger(__name__)

HOPF_KEYS = ["conductor", "dim", "labels", "mult", "unit", "comult", "counit", "antipode"]
ALGEBRA_KEYS = ["dim", "labels", "mult", "unit"]
REPRESENTATION_KEYS = ["algebra", "matrix"]


# Files

def read_document(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding=REPORT_ENCODING) as handle:
            document = json.load(handle)
    except FileNotFoundError:
        raise ConfigurationException(f"No such file: {path}")
    except json.JSONDecodeError as e:
        raise ConfigurationException(f"{path} is not valid JSON: {e}")
    logger.debug(f"Read {path}")
    return document


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(document, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def write_document(document: Dict[str, Any], path: str):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding=REPORT_ENCODING) as handle:
        handle.write(dumps(document))
    logger.info(f"Wrote {path}")


# Scalars and vectors

def _scalar(ctx: CyclotomicContext, value) -> Any:
    if isinstance(value, bool):
        raise ConfigurationException(f"boolean {value} used as a scalar")
    if isinstance(value, int):
        return ctx.rational(value)
    if isinstance(value, str):
        return parse_scalar(value, ctx)
    raise ConfigurationException(f"cannot read scalar {value!r}")


def vector_to_list(v: Sequence) -> List[str]:
    return [format_scalar(x) for x in v]


def vector_from_list(ctx: CyclotomicContext, values: Sequence, dim: int) -> Vector:
    if not isinstance(values, list) or len(values) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}")
    return tuple(_scalar(ctx, x) for x in values)


def _sparse(ctx: CyclotomicContext, entries, arity: int, dim: int, name: str) -> List[tuple]:
    if not isinstance(entries, list):
        raise ConfigurationException(f"{name} must be a list of entries")
    result = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise ConfigurationException(f"{name} entry {entry!r} must have {arity} indices and a scalar")
        *indices, value = entry
        if any(not isinstance(i, int) or not 0 <= i < dim for i in indices):
            raise DimensionMismatch(f"{name} entry {entry!r} has an index outside 0..{dim - 1}")
        result.append((*indices, _scalar(ctx, value)))
    return result


def _entries(tensor, prefix=()) -> list:
    """Nonzero entries of a nested structure tensor as [indices..., scalar]."""
    result = []
    for i, part in enumerate(tensor):
        if isinstance(part, tuple):
            result.extend(_entries(part, prefix + (i,)))
        elif part:
            result.append([*prefix, i, format_scalar(part)])
    return result


# Algebras and Hopf algebras

def algebra_to_document(a: AlgebraData) -> Dict[str, Any]:
    return {
        "dim": a.dim,
        "labels": list(a.labels),
        "mult": _entries(a.mult),
        "unit": vector_to_list(a.unit),
    }


def algebra_from_document(ctx: CyclotomicContext, document: Dict[str, Any]) -> AlgebraData:
    validate_config(document, ALGEBRA_KEYS)
    d = document["dim"]
    labels = document["labels"]
    if len(labels) != d:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {d}")
    mult = _sparse(ctx, document["mult"], 3, d, "mult")
    return AlgebraData.from_sparse(ctx, labels, mult, vector_from_list(ctx, document["unit"], d))


def hopf_to_document(h: HopfAlgebraData) -> Dict[str, Any]:
    document = {"conductor": h.ctx.conductor}
    document.update(algebra_to_document(h.algebra))
    document["comult"] = _entries(h.comult)
    document["counit"] = vector_to_list(h.counit)
    document["antipode"] = [[i, j, format_scalar(h.antipode.get(i, j))]
                            for i in range(h.dim) for j in range(h.dim) if h.antipode.get(i, j)]
    return document


def hopf_from_document(document: Dict[str, Any], session: SessionConfig,
                       source: str = "hopf document") -> HopfAlgebraData:
    validate_config(document, HOPF_KEYS)
    ctx = session.register(source, document["conductor"])
    d = document["dim"]
    labels = document["labels"]
    if len(labels) != d:
        raise DimensionMismatch(f"{len(labels)} labels for dimension {d}")
    return HopfAlgebraData.from_sparse(
        ctx, labels,
        _sparse(ctx, document["mult"], 3, d, "mult"),
        vector_from_list(ctx, document["unit"], d),
        _sparse(ctx, document["comult"], 3, d, "comult"),
        vector_from_list(ctx, document["counit"], d),
        _sparse(ctx, document["antipode"], 2, d, "antipode"),
    )


def load_hopf(path: str, session: SessionConfig) -> HopfAlgebraData:
    return hopf_from_document(read_document(path), session, path)


# Representations

def representation_to_document(r: Representation, hopf_reference: Optional[str] = None) -> Dict[str, Any]:
    """The Hopf algebra is inlined unless a file reference is given."""
    m = r.matrix
    return {
        "conductor": r.ctx.conductor,
        "hopf": hopf_reference if hopf_reference is not None else hopf_to_document(r.source),
        "algebra": algebra_to_document(r.target),
        "matrix": [[i, j, format_scalar(m.get(i, j))]
                   for i in range(m.rows) for j in range(m.cols) if m.get(i, j)],
    }


def representation_from_document(document: Dict[str, Any], session: SessionConfig,
                                 source: str = "representation document",
                                 base_dir: str = "",
                                 hopf: Optional[HopfAlgebraData] = None) -> Representation:
    """
    Read a representation; an explicitly given Hopf algebra replaces the
    document's own "hopf" entry.
    """
    validate_config(document, REPRESENTATION_KEYS if hopf is not None else REPRESENTATION_KEYS + ["hopf"])
    if "conductor" in document:
        session.register(source, document["conductor"])
    reference = document.get("hopf")
    if hopf is not None:
        h = hopf
    elif isinstance(reference, str):
        path = reference if os.path.isabs(reference) else os.path.join(base_dir, reference)
        h = load_hopf(path, session)
    else:
        h = hopf_from_document(reference, session, f"{source} (hopf)")
    ctx = h.ctx
    algebra = algebra_from_document(ctx, document["algebra"])
    rows = [[ctx.zero] * h.dim for _ in range(algebra.dim)]
    for entry in document["matrix"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ConfigurationException(f"matrix entry {entry!r} must be [row, col, scalar]")
        i, j, value = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < algebra.dim and 0 <= j < h.dim):
            raise DimensionMismatch(f"matrix entry {entry!r} outside {algebra.dim}x{h.dim}")
        rows[i][j] = rows[i][j] + _scalar(ctx, value)
    return Representation(h, algebra, Matrix.from_rows(ctx, rows, h.dim))


def load_representation(path: str, session: SessionConfig,
                        hopf: Optional[HopfAlgebraData] = None) -> Representation:
    return representation_from_document(read_document(path), session, path, os.path.dirname(path), hopf)


# Twists and cocycles

def twist_to_document(t: TwistElement) -> Dict[str, Any]:
    return {
        "conductor": t.host.ctx.conductor,
        "omega": [[key[0], key[1], format_scalar(c)] for key, c in sorted(t.omega_tensor.items())],
        "omega_inv": [[key[0], key[1], format_scalar(c)] for key, c in sorted(t.omega_inv_tensor.items())],
    }


def twist_from_document(host: HopfAlgebraData, document: Dict[str, Any], session: SessionConfig,
                        source: str = "twist document") -> TwistElement:
    validate_config(document, ["omega"])
    if "conductor" in document:
        session.register(source, document["conductor"])
    ctx = host.ctx

    def tensor(entries, name):
        result = {}
        for i, j, c in _sparse(ctx, entries, 2, host.dim, name):
            result[(i, j)] = result.get((i, j), ctx.zero) + c
        return {key: value for key, value in result.items() if value}

    omega_inv = tensor(document["omega_inv"], "omega_inv") if "omega_inv" in document else None
    return make_twist(host, tensor(document["omega"], "omega"), omega_inv)


def _matrix_rows(m: Matrix) -> List[List[str]]:
    return [vector_to_list(m.row(i)) for i in range(m.rows)]


def cocycle_to_document(c: Cocycle) -> Dict[str, Any]:
    return {
        "conductor": c.host.ctx.conductor,
        "sigma": _matrix_rows(c.sigma),
        "sigma_inv": _matrix_rows(c.sigma_inv),
    }


def cocycle_from_document(host: HopfAlgebraData, document: Dict[str, Any], session: SessionConfig,
                          source: str = "cocycle document") -> Cocycle:
    validate_config(document, ["sigma"])
    if "conductor" in document:
        session.register(source, document["conductor"])
    ctx = host.ctx

    def square(rows, name):
        if not isinstance(rows, list) or len(rows) != host.dim:
            raise DimensionMismatch(f"{name} must be a {host.dim}x{host.dim} matrix")
        return [vector_from_list(ctx, row, host.dim) for row in rows]

    sigma_inv = square(document["sigma_inv"], "sigma_inv") if "sigma_inv" in document else None
    return make_cocycle(host, square(document["sigma"], "sigma"), sigma_inv)


# Comodules and group-likes

def comodule_to_document(u: Comodule) -> Dict[str, Any]:
    return {
        "name": u.name,
        "dim": u.dim,
        "self_dual": u.self_dual,
        "coefficients": [[i, j, vector_to_list(u.coefficient(i, j))]
                         for i in range(u.dim) for j in range(u.dim)],
    }


def comodule_from_document(host: HopfAlgebraData, document: Dict[str, Any]) -> Comodule:
    validate_config(document, ["dim", "coefficients"])
    n = document["dim"]
    zero = (host.ctx.zero,) * host.dim
    coefficients = [[zero] * n for _ in range(n)]
    for entry in document["coefficients"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ConfigurationException(f"coefficient entry must be [i, j, vector], got {entry!r}")
        i, j, vector = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
            raise DimensionMismatch(f"coefficient index ({i}, {j}) outside a {n}-dimensional comodule")
        coefficients[i][j] = vector_from_list(host.ctx, vector, host.dim)
    return make_comodule(host, coefficients, document.get("name", "U"), bool(document.get("self_dual", False)))


def comodules_to_document(host: HopfAlgebraData, comodules: Sequence[Comodule]) -> Dict[str, Any]:
    return {
        "conductor": host.ctx.conductor,
        "comodules": [comodule_to_document(u) for u in comodules],
    }


def comodules_from_document(host: HopfAlgebraData, document: Dict[str, Any], session: SessionConfig,
                            source: str = "comodule document") -> List[Comodule]:
    """Accepts a list document or a single comodule document."""
    if "conductor" in document:
        session.register(source, document["conductor"])
    if "comodules" in document:
        return [comodule_from_document(host, entry) for entry in document["comodules"]]
    return [comodule_from_document(host, document)]


def grouplikes_to_document(gl: GroupLikeSet) -> Dict[str, Any]:
    return {
        "conductor": gl.host.ctx.conductor,
        "complete": gl.complete,
        "grouplikes": [vector_to_list(g) for g in gl.elements],
    }


def vectors_from_document(host: HopfAlgebraData, document: Dict[str, Any], session: SessionConfig,
                          source: str = "group-like document") -> List[Vector]:
    validate_config(document, ["grouplikes"])
    if "conductor" in document:
        session.register(source, document["conductor"])
    return [vector_from_list(host.ctx, v, host.dim) for v in document["grouplikes"]]
