"""JSON file formats for paths, leaf-function grids and matrices.

All numbers are written through Python's shortest round-trip float repr, so a
load/save cycle reproduces every value bit-for-bit (17 significant digits
suffice).  Schemas, with matrices flattened row-major:

* path file:      {"dim": d, "times": [...], "matrices": [[d*d floats], ...]}
* grid file:      {"grid_shape": [...], "values": [...]}
* quant file:     {"shift": s, "grid_shape": [...], "values": [...]}
* matrix file:    {"dim": d, "matrix": [d*d floats]}
* hermitian file: {"n": n, "real": [n*n floats], "imag": [n*n floats]}
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InputError
from .paths import SampledPath
from .prequant import LeafFunction, QuantElement


def _load_json(filename: str) -> dict:
    try:
        with open(filename) as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"{filename}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{filename}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{filename}: expected a JSON object at top level")
    return data


def _require(data: dict, key: str, filename: str):
    if key not in data:
        raise InputError(f"{filename}: missing required key {key!r}")
    return data[key]


def load_path(filename: str) -> SampledPath:
    data = _load_json(filename)
    dim = _require(data, "dim", filename)
    times = np.asarray(_require(data, "times", filename), dtype=float)
    rows = _require(data, "matrices", filename)
    try:
        mats = np.asarray(rows, dtype=float).reshape(len(times), dim, dim)
    except ValueError as exc:
        raise InputError(f"{filename}: matrices do not form "
                         f"{len(times)} x {dim} x {dim} samples ({exc})") from exc
    try:
        return SampledPath(times, mats)
    except InputError as exc:
        raise InputError(f"{filename}: {exc}") from exc


def save_path(path: SampledPath, filename: str) -> None:
    doc = {
        "dim": path.dim,
        "times": path.times.tolist(),
        "matrices": [m.reshape(-1).tolist() for m in path.matrices],
    }
    with open(filename, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_grid(filename: str) -> LeafFunction:
    data = _load_json(filename)
    shape = tuple(_require(data, "grid_shape", filename))
    values = np.asarray(_require(data, "values", filename), dtype=float)
    try:
        values = values.reshape(shape)
    except ValueError as exc:
        raise InputError(f"{filename}: values do not fill grid {shape} ({exc})") from exc
    normalized = abs(float(values.mean())) <= 1e-12
    return LeafFunction(values, normalized=normalized)


def save_grid(leaf: LeafFunction, filename: str) -> None:
    doc = {
        "grid_shape": list(leaf.grid_shape),
        "values": leaf.values.reshape(-1).tolist(),
    }
    with open(filename, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_quant_element(filename: str) -> QuantElement:
    """Read a quantomorphism element: a fiber shift plus a leaf function.

    A nonzero mean in the stored values is folded into the shift, since a
    constant leaf function acts as a fiber rotation.
    """
    data = _load_json(filename)
    shift = float(_require(data, "shift", filename))
    shape = tuple(_require(data, "grid_shape", filename))
    values = np.asarray(_require(data, "values", filename), dtype=float)
    try:
        values = values.reshape(shape)
    except ValueError as exc:
        raise InputError(f"{filename}: values do not fill grid {shape} ({exc})") from exc
    mean = float(values.mean())
    try:
        return QuantElement(shift + mean, LeafFunction(values - mean, normalized=True))
    except ValueError as exc:
        raise InputError(f"{filename}: {exc}") from exc


def save_quant_element(element: QuantElement, filename: str) -> None:
    doc = {
        "shift": element.shift,
        "grid_shape": list(element.func.grid_shape),
        "values": element.func.values.reshape(-1).tolist(),
    }
    with open(filename, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_matrix(filename: str) -> np.ndarray:
    data = _load_json(filename)
    dim = _require(data, "dim", filename)
    flat = np.asarray(_require(data, "matrix", filename), dtype=float)
    try:
        return flat.reshape(dim, dim)
    except ValueError as exc:
        raise InputError(f"{filename}: matrix is not {dim} x {dim} ({exc})") from exc


def load_hermitian(filename: str) -> np.ndarray:
    data = _load_json(filename)
    n = _require(data, "n", filename)
    re = np.asarray(_require(data, "real", filename), dtype=float)
    im = np.asarray(_require(data, "imag", filename), dtype=float)
    try:
        return re.reshape(n, n) + 1j * im.reshape(n, n)
    except ValueError as exc:
        raise InputError(f"{filename}: blocks are not {n} x {n} ({exc})") from exc
