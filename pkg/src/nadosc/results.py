"""Deterministic JSON/CSV output for spectra and check reports.

JSON keys are emitted in a fixed order, floats with 17 significant digits,
non-finite floats as null. Identical inputs give byte-identical files.
"""

import csv
import io
import math
from dataclasses import fields

import numpy as np

from .hamiltonian import SpectrumResult
from .report import CheckReport

FLOAT_FORMAT = ".17g"
CSV_HEADER = ("index", "eigenvalue", "converged")


def _encode(value, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f'{pad}{_encode(str(k), indent, level + 1)}: {_encode(v, indent, level + 1)}' for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        if len(value) == 0:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in value):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in value) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return format(v, FLOAT_FORMAT) if math.isfinite(v) else "null"
    if isinstance(value, str):
        return _quote(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _quote(text):
    out = ['"']
    for ch in text:
        if ch in '"\\':
            out.append("\\" + ch)
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def dumps(obj, indent=2):
    """Deterministic JSON text ending in a newline."""
    return _encode(obj, indent, 0) + "\n"


def params_dict(params):
    return {f.name: getattr(params, f.name) for f in fields(params)}


def spectrum_dict(result):
    vals = np.asarray(result.eigenvalues, dtype=float)
    return {
        "kind": "spectrum",
        "params": params_dict(result.params),
        "hermiticity_residual": result.hermiticity_residual,
        "eigenvalue_count": int(vals.size),
        "converged_count": result.converged_count,
        "eigenvalues": [float(v) for v in vals],
        "converged": None if result.converged is None else [bool(c) for c in result.converged],
    }


def report_dict(report):
    return {
        "kind": "report",
        "title": report.title,
        "passed": report.passed,
        "rows": [
            {"kind": r.kind, "name": r.name, "value": r.residual, "passed": r.passed, "note": r.note}
            for r in report.rows
        ],
    }


def to_json(result):
    if isinstance(result, SpectrumResult):
        return dumps(spectrum_dict(result))
    if isinstance(result, CheckReport):
        return dumps(report_dict(result))
    raise TypeError(f"cannot serialize {type(result).__name__}")


def to_csv(result):
    if not isinstance(result, SpectrumResult):
        raise TypeError("CSV output is defined for spectra only")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    conv = result.converged
    for k, v in enumerate(result.eigenvalues):
        flag = "" if conv is None else ("true" if conv[k] else "false")
        w.writerow((k, format(float(v), FLOAT_FORMAT), flag))
    return buf.getvalue()


def write_results(result, path, fmt="json", stdout=None):
    """Write ``result`` to ``path``; ``"-"`` means ``stdout``. OSError propagates."""
    text = to_json(result) if fmt == "json" else to_csv(result) if fmt == "csv" else None
    if text is None:
        raise ValueError(f"unknown format {fmt!r}")
    if path == "-":
        stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
