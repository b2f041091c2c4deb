"""Model and report files.

A model file is JSON::

    {"kind": "statespace", "name": "first-order",
     "matrices": {"A": [[-1.0]], "B": [[1.0]], "C": [[1.0]], "D": [[0.0]]}}

``kind`` is ``"statespace"`` (``A, B, C, D``; ``D`` optional) or
``"uncertain_plant"`` (``A, B1, B2, C1``).  NaN and infinity are rejected.
Floats are written with ``repr`` so a write/parse round trip is exact.
"""

import json
import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .exceptions import ModelParseError, NIForgeError
from .statespace import StateSpace, UncertainPlant

__all__ = ["ModelFile", "parse_model", "load_model", "dump_model",
           "save_model", "write_atomic", "to_jsonable"]

KINDS = {
    "statespace": (("A", "B", "C"), ("D",)),
    "uncertain_plant": (("A", "B1", "B2", "C1"), ()),
}


@dataclass
class ModelFile:
    kind: str
    name: str
    system: object

    def matrices(self):
        names = sum(KINDS[self.kind], ())
        return {k: getattr(self.system, k) for k in names}


def _reject_constant(token):
    raise ModelParseError(f"non-finite number {token!r} is not allowed")


def _matrix(value, where):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        value = [[value]]
    if not isinstance(value, list) or not value:
        raise ModelParseError("expected a non-empty 2-D array", where)
    if not all(isinstance(row, list) for row in value):
        raise ModelParseError("expected a list of rows", where)
    width = len(value[0])
    for i, row in enumerate(value):
        if len(row) != width:
            raise ModelParseError(
                f"row {i} has {len(row)} entries, expected {width}", where)
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ModelParseError(f"entry [{i}][{j}] is not a number",
                                      where)
            if not math.isfinite(x):
                raise ModelParseError(f"entry [{i}][{j}] is not finite", where)
    return np.array(value, dtype=float)


def parse_model(text, source="<string>"):
    """Parse model-file text into a :class:`ModelFile`."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ModelParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc
    except ModelParseError as exc:
        raise ModelParseError(str(exc), source) from exc
    if not isinstance(doc, dict):
        raise ModelParseError("top level must be an object", source)
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ModelParseError(f"unknown kind {kind!r}; expected one of "
                              f"{sorted(KINDS)}", f"{source}: kind")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ModelParseError("name must be a string", f"{source}: name")
    mats = doc.get("matrices")
    if not isinstance(mats, dict):
        raise ModelParseError("missing 'matrices' object", f"{source}: matrices")
    required, optional = KINDS[kind]
    unknown = set(mats) - set(required) - set(optional)
    if unknown:
        raise ModelParseError(f"unexpected matrices {sorted(unknown)}",
                              f"{source}: matrices")
    arrays = {}
    for key in required + optional:
        if key not in mats:
            if key in required:
                raise ModelParseError("missing matrix", f"{source}: matrices.{key}")
            continue
        arrays[key] = _matrix(mats[key], f"{source}: matrices.{key}")
    try:
        if kind == "statespace":
            system = StateSpace(**arrays)
        else:
            system = UncertainPlant(**arrays)
    except (NIForgeError, ValueError) as exc:
        raise ModelParseError(str(exc), f"{source}: matrices") from exc
    return ModelFile(kind, name, system)


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read(), source=str(path))


def dump_model(model):
    doc = {
        "kind": model.kind,
        "name": model.name,
        "matrices": {k: np.asarray(v, dtype=float).tolist()
                     for k, v in model.matrices().items()},
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def save_model(model, path):
    write_atomic(path, dump_model(model))


def write_atomic(path, text):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".niforge-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def to_jsonable(obj):
    """Convert numpy arrays/scalars and complex numbers for ``json.dumps``.

    Complex values become ``[re, im]`` pairs.
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    return obj
