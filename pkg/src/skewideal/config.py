"""JSON job descriptions for the command line tool.

Field elements may be written as a native integer code (sum c_i p^i), a
coordinate list [c_0, ..., c_{k-1}] over F_p, or a string "0", "1", "a",
"a^k".  Algebra elements are coordinate lists of field elements or text
such as "a x^4 + x + 1"; generators are lists of algebra elements
(ascending in z) or Ore polynomial text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any

from .algebra import Algebra, AlgebraElement, AlgebraError, construct_algebra
from .field import FiniteField, make_field
from .maps import LinearMap, construct_map
from .ore import OrePolynomial, OreRing
from .poly import Poly
from .separability import STRATEGIES
from .textio import parse_algebra_element, parse_ore, parse_scalar


class ConfigError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


@dataclass
class JobConfig:
    field: FiniteField
    algebra: Algebra
    sigma: LinearMap
    delta: LinearMap | None
    ring: OreRing
    generators: list[OrePolynomial]
    strategy: str = "auto"
    j: int = 1
    base_strategy: str = "matrix-units"
    pairs: list[tuple[AlgebraElement, AlgebraElement]] | None = None
    document: dict = dc_field(default_factory=dict)


def _need(doc: dict, key: str, path: str):
    if not isinstance(doc, dict):
        raise ConfigError(path, "expected an object")
    if key not in doc:
        raise ConfigError(f"{path}.{key}" if path else key, "missing")
    return doc[key]


def parse_field_element(F: FiniteField, raw: Any, path: str) -> int:
    try:
        if isinstance(raw, bool):
            raise ValueError("booleans are not field elements")
        if isinstance(raw, int):
            if not 0 <= raw < F.order:
                raise ValueError(f"code {raw} out of range for GF({F.order})")
            return raw
        if isinstance(raw, list):
            if len(raw) != F.k or any(not isinstance(c, int) or not 0 <= c < F.p for c in raw):
                raise ValueError(f"expected {F.k} coordinates in 0..{F.p - 1}")
            return F.from_coords(raw)
        if isinstance(raw, str):
            return parse_scalar(F, raw)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None
    raise ConfigError(path, f"cannot read a field element from {raw!r}")


def _field_list(F: FiniteField, raw: Any, path: str) -> list[int]:
    if not isinstance(raw, list):
        raise ConfigError(path, "expected a list")
    return [parse_field_element(F, c, f"{path}[{i}]") for i, c in enumerate(raw)]


def parse_algebra_value(A: Algebra, raw: Any, path: str) -> AlgebraElement:
    if isinstance(raw, str):
        try:
            return parse_algebra_element(A, raw)
        except ValueError as exc:
            raise ConfigError(path, str(exc)) from None
    coords = _field_list(A.field, raw, path)
    if len(coords) != A.dim:
        raise ConfigError(path, f"expected {A.dim} coordinates, got {len(coords)}")
    return A.element(coords)


def _algebra_spec(F: FiniteField, raw: Any, path: str) -> dict:
    if not isinstance(raw, dict):
        raise ConfigError(path, "expected an object")
    t = _need(raw, "type", path)
    spec = dict(raw)
    if t == "quotient":
        spec["modulus"] = Poly(F, _field_list(F, _need(raw, "modulus", path), f"{path}.modulus"), "x")
    elif t == "matrix":
        if raw.get("extension") is not None:
            spec["extension"] = Poly(F, _field_list(F, raw["extension"], f"{path}.extension"), "x")
    elif t == "direct_sum":
        comps = _need(raw, "components", path)
        if not isinstance(comps, list) or not comps:
            raise ConfigError(f"{path}.components", "expected a nonempty list")
        spec["components"] = [_algebra_spec(F, c, f"{path}.components[{i}]") for i, c in enumerate(comps)]
    elif t == "raw":
        consts = _need(raw, "constants", path)
        try:
            spec["constants"] = [[_field_list(F, v, f"{path}.constants[{i}][{j}]") for j, v in enumerate(row)]
                                 for i, row in enumerate(consts)]
        except TypeError:
            raise ConfigError(f"{path}.constants", "expected an n x n x n array") from None
        if raw.get("unit") is not None:
            spec["unit"] = _field_list(F, raw["unit"], f"{path}.unit")
    elif t not in ("group", "cyclic", "symmetric"):
        raise ConfigError(f"{path}.type", f"unknown algebra type {t!r}")
    return spec


def _map_spec(A: Algebra, raw: Any, path: str) -> dict:
    if not isinstance(raw, dict):
        raise ConfigError(path, "expected an object")
    t = _need(raw, "type", path)
    spec = dict(raw)
    if t == "matrix":
        cols = _need(raw, "columns", path)
        if not isinstance(cols, list) or len(cols) != A.dim:
            raise ConfigError(f"{path}.columns", f"expected {A.dim} columns")
        spec["columns"] = [parse_algebra_value(A, c, f"{path}.columns[{i}]").coords for i, c in enumerate(cols)]
    elif t == "inner":
        spec["unit"] = parse_algebra_value(A, _need(raw, "unit", path), f"{path}.unit")
    elif t == "inner_derivation":
        spec["element"] = parse_algebra_value(A, _need(raw, "element", path), f"{path}.element")
    elif t == "generator_image":
        spec["image"] = parse_algebra_value(A, _need(raw, "image", path), f"{path}.image")
    elif t == "block_shift":
        if A.kind != "direct_sum":
            raise ConfigError(path, "block_shift needs a direct_sum algebra")
        spec["block"] = _map_spec(A.info["components"][0], _need(raw, "block", path), f"{path}.block")
    elif t == "group_automorphism":
        perm = _need(raw, "perm", path)
        if sorted(perm) != list(range(A.dim)):
            raise ConfigError(f"{path}.perm", "expected a permutation of the group elements")
    elif t not in ("identity", "zero"):
        raise ConfigError(f"{path}.type", f"unknown map type {t!r}")
    return spec


def _generator(R: OreRing, raw: Any, path: str) -> OrePolynomial:
    if isinstance(raw, str):
        try:
            return parse_ore(R, raw)
        except ValueError as exc:
            raise ConfigError(path, str(exc)) from None
    if not isinstance(raw, list):
        raise ConfigError(path, "expected a list of coefficients or Ore polynomial text")
    return OrePolynomial(R, [parse_algebra_value(R.algebra, c, f"{path}[{i}]") for i, c in enumerate(raw)])


def parse_config(text: str | dict) -> JobConfig:
    """Validate a job document and build every object it describes."""
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError("", f"malformed JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict):
        raise ConfigError("", "top level must be an object")

    fs = _need(doc, "field", "")
    p = _need(fs, "p", "field")
    k = fs.get("k", 1) if isinstance(fs, dict) else 1
    if not isinstance(p, int) or not isinstance(k, int):
        raise ConfigError("field", "p and k must be integers")
    try:
        F = make_field(p, k, fs.get("modulus"))
    except ValueError as exc:
        raise ConfigError("field", str(exc)) from None

    try:
        A = construct_algebra(F, _algebra_spec(F, _need(doc, "algebra", ""), "algebra"))
    except AlgebraError as exc:
        raise ConfigError("algebra", str(exc)) from None

    try:
        sraw = doc.get("sigma")
        sigma = (construct_map(A, _map_spec(A, sraw, "sigma"), "automorphism")
                 if sraw is not None else LinearMap.identity(A))
    except AlgebraError as exc:
        raise ConfigError("sigma", str(exc)) from None
    delta = None
    if doc.get("delta") is not None:
        try:
            delta = construct_map(A, _map_spec(A, doc["delta"], "delta"), "derivation", sigma)
        except AlgebraError as exc:
            raise ConfigError("delta", str(exc)) from None
    R = OreRing(A, sigma, delta)

    sep = doc.get("separability") or {}
    if not isinstance(sep, dict):
        raise ConfigError("separability", "expected an object")
    strategy = sep.get("strategy", "auto")
    if strategy not in STRATEGIES:
        raise ConfigError("separability.strategy", f"unknown strategy {strategy!r}")
    base = sep.get("base", "matrix-units")
    if base not in STRATEGIES:
        raise ConfigError("separability.base", f"unknown strategy {base!r}")
    j = sep.get("j", 1)
    if not isinstance(j, int):
        raise ConfigError("separability.j", "expected an integer")
    pairs = None
    if sep.get("pairs") is not None:
        pairs = []
        for i, pr in enumerate(sep["pairs"]):
            if not isinstance(pr, list) or len(pr) != 2:
                raise ConfigError(f"separability.pairs[{i}]", "expected a pair [a, b]")
            pairs.append((parse_algebra_value(A, pr[0], f"separability.pairs[{i}][0]"),
                          parse_algebra_value(A, pr[1], f"separability.pairs[{i}][1]")))

    gens = _need(doc, "generators", "")
    if not isinstance(gens, list) or not gens:
        raise ConfigError("generators", "generators must be nonempty")
    G = [_generator(R, g, f"generators[{i}]") for i, g in enumerate(gens)]
    if all(g.is_zero() for g in G):
        raise ConfigError("generators", "all generators are zero")

    return JobConfig(F, A, sigma, delta, R, G, strategy, j, base, pairs, doc)


def load_config(path: str) -> JobConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
