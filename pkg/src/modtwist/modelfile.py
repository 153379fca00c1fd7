"""Parsing of finite Galois model files.

A model file is a JSON document:

    {
      "p": 3,
      "group": {"type": "permutation",
                "generators": {"s": [1, 0, 2], "t": [1, 2, 0]}},
      "rho":  {"s": [[0, 1], [1, 0]], "t": [[1, 1], [0, 1]]},
      "chi":  {"s": 2, "t": 1},
      "conj": "s",
      "characters": {"k": {"values": {"s": -1, "t": 1}, "field": -1}}
    }

The group is either permutation generators (lists mapping i -> g(i)) or an
explicit multiplication table:

    {"type": "table", "elements": ["e", "a"], "identity": "e",
     "table": {"e": {"e": "e", "a": "a"}, "a": {"e": "a", "a": "e"}},
     "generators": {"a": "a"}}

rho, chi and each character are given on the generators and extended
multiplicatively; the extensions are re-validated on the whole group.
"""
from __future__ import annotations

import json
from pathlib import Path

from .galmodel import (
    FiniteGaloisModel,
    FiniteGroup,
    QuadraticCharacter,
    _generator_words,
    validate_model,
)
from .projgroup import ProjMat


class ModelParseError(ValueError):
    pass


def _build_group(spec: dict) -> FiniteGroup:
    kind = spec.get("type")
    if kind == "permutation":
        gens = spec.get("generators")
        if not isinstance(gens, dict) or not gens:
            raise ModelParseError("group.generators must be a non-empty object")
        perms = {}
        for name, perm in gens.items():
            if not isinstance(perm, list) or sorted(perm) != list(range(len(perm))):
                raise ModelParseError(f"generator {name!r} is not a permutation")
            perms[name] = tuple(perm)
        return FiniteGroup.from_permutations(perms, name=spec.get("name", "G"))
    if kind == "table":
        for key in ("elements", "identity", "table"):
            if key not in spec:
                raise ModelParseError(f"group.{key} is required for table groups")
        elements = spec["elements"]
        table = spec["table"]
        try:
            grp = FiniteGroup.from_table(
                elements, table, spec["identity"], name=spec.get("name", "G")
            )
        except (KeyError, ValueError) as exc:
            raise ModelParseError(f"bad multiplication table: {exc}") from exc
        gen_map = spec.get("generators")
        if gen_map:
            grp.gens = dict(gen_map)
            try:
                grp.words = _generator_words(grp, grp.gens)
            except ValueError as exc:
                raise ModelParseError(str(exc)) from exc
        else:
            # every element is its own generator
            grp.gens = {str(x): x for x in elements}
            grp.words = _generator_words(grp, grp.gens)
        return grp
    raise ModelParseError(f"unknown group type {kind!r}")


def parse_model(source: str | Path) -> FiniteGaloisModel:
    """Parse a model file (path or raw JSON text) and validate it."""
    text = source
    if isinstance(source, Path):
        text = source.read_text()
    elif isinstance(source, str) and "\n" not in source and source.endswith(".json"):
        text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ModelParseError("model file must be a JSON object")
    for key in ("p", "group", "rho", "chi"):
        if key not in doc:
            raise ModelParseError(f"missing required key {key!r}")
    p = doc["p"]
    if not isinstance(p, int) or p < 3:
        raise ModelParseError(f"p must be an odd prime, got {p!r}")
    grp = _build_group(doc["group"])

    def as_projmat(name, mat):
        if (
            not isinstance(mat, list)
            or len(mat) != 2
            or any(len(row) != 2 or not all(isinstance(x, int) for x in row) for row in mat)
        ):
            raise ModelParseError(f"rho[{name!r}] is not a 2x2 integer matrix")
        try:
            return ProjMat(mat[0][0], mat[0][1], mat[1][0], mat[1][1], p)
        except ValueError as exc:
            raise ModelParseError(f"rho[{name!r}]: {exc}") from exc

    gen_names = set(grp.gens)
    for key in ("rho", "chi"):
        if not isinstance(doc[key], dict) or set(doc[key]) != gen_names:
            raise ModelParseError(f"{key} must be given on exactly the generators {sorted(gen_names)}")
    rho_gens = {name: as_projmat(name, mat) for name, mat in doc["rho"].items()}
    chi_gens = {}
    for name, val in doc["chi"].items():
        if not isinstance(val, int) or val % p == 0:
            raise ModelParseError(f"chi[{name!r}] must be an integer unit mod {p}")
        chi_gens[name] = val % p
    rho = grp.extend_generator_map(rho_gens, lambda a, b: a * b, ProjMat.identity(p))
    chi = grp.extend_generator_map(chi_gens, lambda a, b: a * b % p, 1)
    conj = None
    if "conj" in doc and doc["conj"] is not None:
        conj = _resolve_element(grp, doc["conj"])
    characters = {}
    for name, spec in (doc.get("characters") or {}).items():
        if not isinstance(spec, dict) or "values" not in spec:
            raise ModelParseError(f"character {name!r} needs a 'values' object")
        vals = spec["values"]
        if set(vals) != gen_names or any(v not in (1, -1) for v in vals.values()):
            raise ModelParseError(
                f"character {name!r} must give +-1 on exactly the generators"
            )
        full = grp.extend_generator_map(dict(vals), lambda a, b: a * b, 1)
        characters[name] = QuadraticCharacter(values=full, field=spec.get("field"))
    model = FiniteGaloisModel(
        group=grp, p=p, rho=rho, chi=chi, conj=conj, characters=characters
    )
    return model


def _resolve_element(grp: FiniteGroup, label):
    """Map a JSON label to a group element: generator name, or for table
    groups the element label itself."""
    if label in grp.gens:
        return grp.gens[label]
    for x in grp.elements:
        if x == label or str(x) == str(label):
            return x
    raise ModelParseError(f"unknown element label {label!r}")


def parse_and_validate(source: str | Path) -> FiniteGaloisModel:
    model = parse_model(source)
    errs = validate_model(model)
    if errs:
        raise ModelParseError("; ".join(errs))
    return model
