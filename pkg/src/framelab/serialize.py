"""Canonical JSON and CSV serialization.

Serialization is byte-deterministic so that identical inputs and
seeds produce identical files on every platform.  The rules: object
keys are sorted, floats are rendered with 17 significant digits
(which round-trips float64 exactly), negative zero collapses to 0,
complex numbers become [re, im] pairs, and non-finite numbers are
rejected.  Files end with a single newline.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import InputError
from .frames import Frame, FrameReport
from .gleason import FitResult, LadderReport, ScalingReport, VerificationReport
from .povm import MeasureCheckReport, Povm
from .waveforms import AmbiguityTable, CazacReport


def fmt_float(x: float) -> str:
    """Canonical text form of a float."""
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"cannot serialize non-finite number {x!r}")
    if x == 0.0:
        return "0"
    return format(x, ".17g")


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (np.bool_,)):
        _emit(bool(obj), out)
    elif isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(fmt_float(float(obj)))
    elif isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        out.append(f"[{fmt_float(z.real)},{fmt_float(z.imag)}]")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _emit(obj.tolist(), out)
    elif isinstance(obj, dict):
        out.append("{")
        first = True
        for key in sorted(obj.keys()):
            if not isinstance(key, str):
                raise InputError(f"JSON keys must be strings, got {key!r}")
            if not first:
                out.append(",")
            first = False
            out.append(json.dumps(key))
            out.append(":")
            _emit(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _emit(item, out)
        out.append("]")
    else:
        raise InputError(f"cannot serialize object of type {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Render ``obj`` as canonical JSON (no trailing newline)."""
    pieces: list[str] = []
    _emit(obj, pieces)
    return "".join(pieces)


def write_json(path, obj) -> None:
    Path(path).write_text(canonical_json(obj) + "\n", encoding="utf-8")


def load_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_json(text)


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# vectors and matrices


def _vector_to_json(v: np.ndarray, field: str):
    if field == "R":
        return [float(x) for x in np.asarray(v).real]
    return [[float(x.real), float(x.imag)] for x in np.asarray(v)]


def _vector_from_json(item, field: str, what: str) -> np.ndarray:
    if not isinstance(item, list):
        raise InputError(f"{what}: expected a list, got {type(item).__name__}")
    if field == "R":
        try:
            return np.array([float(x) for x in item], dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise InputError(f"{what}: bad real entry ({exc})") from exc
    entries = []
    for x in item:
        if isinstance(x, (int, float)) and not isinstance(x, bool):
            entries.append(complex(float(x), 0.0))
            continue
        if (
            not isinstance(x, list)
            or len(x) != 2
            or not all(isinstance(part, (int, float)) for part in x)
        ):
            raise InputError(
                f"{what}: complex entries must be numbers or [re, im] pairs"
            )
        entries.append(complex(float(x[0]), float(x[1])))
    return np.array(entries, dtype=np.complex128)


def matrix_to_json(m: np.ndarray):
    a = np.asarray(m, dtype=np.complex128)
    return [[[float(x.real), float(x.imag)] for x in row] for row in a]


def matrix_from_json(item, what: str) -> np.ndarray:
    if not isinstance(item, list) or not item:
        raise InputError(f"{what}: expected a nonempty list of rows")
    rows = [_vector_from_json(row, "C", what) for row in item]
    width = rows[0].shape[0]
    if any(r.shape[0] != width for r in rows):
        raise InputError(f"{what}: ragged rows")
    return np.array(rows, dtype=np.complex128)


# ---------------------------------------------------------------------------
# frames


def frame_to_json(f: Frame) -> dict:
    return {
        "dim": f.dim,
        "field": f.field,
        "vectors": [_vector_to_json(row, f.field) for row in f.vectors],
    }


def frame_from_json(obj) -> Frame:
    if not isinstance(obj, dict):
        raise InputError("frame: expected a JSON object")
    for key in ("dim", "field", "vectors"):
        if key not in obj:
            raise InputError(f"frame: missing key {key!r}")
    field = obj["field"]
    if field not in ("R", "C"):
        raise InputError(f"frame: field must be 'R' or 'C', got {field!r}")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"frame: bad dimension {dim!r}")
    vex = obj["vectors"]
    if not isinstance(vex, list) or not vex:
        raise InputError("frame: vectors must be a nonempty list")
    rows = [_vector_from_json(v, field, f"frame vector {i}") for i, v in enumerate(vex)]
    for i, r in enumerate(rows):
        if r.shape[0] != dim:
            raise InputError(
                f"frame vector {i} has length {r.shape[0]}, expected {dim}"
            )
    return Frame(np.array(rows), field)


# ---------------------------------------------------------------------------
# povms


def povm_to_json(p: Povm) -> dict:
    return {
        "dim": p.dim,
        "effects": [matrix_to_json(p.effects[j]) for j in range(len(p))],
        "partition": p.partition,
    }


def povm_from_json(obj) -> Povm:
    if not isinstance(obj, dict):
        raise InputError("povm: expected a JSON object")
    for key in ("dim", "effects"):
        if key not in obj:
            raise InputError(f"povm: missing key {key!r}")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"povm: bad dimension {dim!r}")
    effects_json = obj["effects"]
    if not isinstance(effects_json, list) or not effects_json:
        raise InputError("povm: effects must be a nonempty list")
    effects = []
    for j, e in enumerate(effects_json):
        mat = matrix_from_json(e, f"effect {j}")
        if mat.shape != (dim, dim):
            raise InputError(
                f"effect {j} has shape {mat.shape}, expected ({dim}, {dim})"
            )
        effects.append(mat)
    partition = obj.get("partition")
    if partition is not None:
        if not isinstance(partition, list) or not all(
            isinstance(g, list) and all(isinstance(i, int) for i in g)
            for g in partition
        ):
            raise InputError("povm: partition must be a list of integer lists")
    return Povm(np.array(effects), partition)


# ---------------------------------------------------------------------------
# sequences


def sequence_to_json(u: np.ndarray) -> dict:
    a = np.asarray(u, dtype=np.complex128)
    return {
        "length": int(a.shape[0]),
        "entries": [[float(x.real), float(x.imag)] for x in a],
    }


def sequence_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise InputError("sequence: expected a JSON object")
    for key in ("length", "entries"):
        if key not in obj:
            raise InputError(f"sequence: missing key {key!r}")
    length = obj["length"]
    if not isinstance(length, int) or length < 1:
        raise InputError(f"sequence: bad length {length!r}")
    entries = _vector_from_json(obj["entries"], "C", "sequence entries")
    if entries.shape[0] != length:
        raise InputError(
            f"sequence claims length {length} but has {entries.shape[0]} entries"
        )
    return entries


def sniff_kind(obj) -> str:
    """Classify a loaded JSON object as frame, povm, or sequence."""
    if isinstance(obj, dict):
        if "vectors" in obj:
            return "frame"
        if "effects" in obj:
            return "povm"
        if "entries" in obj:
            return "sequence"
    raise InputError("unrecognized JSON object (not a frame, povm, or sequence)")


# ---------------------------------------------------------------------------
# reports


def frame_report_to_json(r: FrameReport) -> dict:
    return {
        "num_vectors": r.num_vectors,
        "dim": r.dim,
        "field": r.field,
        "lower_bound": r.lower_bound,
        "upper_bound": r.upper_bound,
        "is_tight": r.is_tight,
        "is_parseval": r.is_parseval,
        "is_unit_norm": r.is_unit_norm,
        "is_equiangular": r.is_equiangular,
        "common_angle": r.common_angle,
        "coherence": r.coherence,
        "welch_bound": r.welch_bound,
        "frame_potential": r.frame_potential,
    }


def verification_report_to_json(r: VerificationReport) -> dict:
    def witness(w):
        frame, total = w
        return {"frame": frame_to_json(frame), "sum": total}

    return {
        "kind": r.kind,
        "dim": r.dim,
        "field": r.field,
        "n": r.n,
        "trials": r.trials,
        "seed": r.seed,
        "tol": r.tol,
        "mean_weight": r.mean_weight,
        "max_deviation": r.max_deviation,
        "passed": r.passed,
        "witness_low": witness(r.witness_low),
        "witness_high": witness(r.witness_high),
    }


def fit_result_to_json(r: FitResult) -> dict:
    return {
        "operator": matrix_to_json(np.asarray(r.operator)),
        "weight": r.weight,
        "residual": r.residual,
        "verdict": r.verdict,
        "samples": r.samples,
        "seed": r.seed,
    }


def ladder_report_to_json(r: LadderReport) -> dict:
    return {
        "kind": r.kind,
        "dim": r.dim,
        "degrees": r.degrees,
        "weights": r.weights,
        "passed": r.passed,
        "g_at_zero": r.g_at_zero,
        "increments": r.increments,
        "increments_ok": r.increments_ok,
        "trials": r.trials,
        "seed": r.seed,
        "tol": r.tol,
    }


def cazac_report_to_json(r: CazacReport) -> dict:
    return {
        "length": r.length,
        "tol": r.tol,
        "ca_deviation": r.ca_deviation,
        "zac_peak": r.zac_peak,
        "ca_ok": r.ca_ok,
        "zac_ok": r.zac_ok,
        "ok": r.ok,
    }


def measure_report_to_json(r: MeasureCheckReport) -> dict:
    return {
        "trials": r.trials,
        "n_family": r.n_family,
        "seed": r.seed,
        "identity_deviation": r.identity_deviation,
        "range_min": r.range_min,
        "range_max": r.range_max,
        "additivity_deviation": r.additivity_deviation,
        "passed": r.passed,
        "witness": None if r.witness is None else povm_to_json(r.witness),
    }


def scaling_report_to_json(r: ScalingReport) -> dict:
    witness = None
    if r.witness is not None:
        witness = {
            "x": [complex(v) for v in np.asarray(r.witness["x"], dtype=np.complex128)],
            "alpha": complex(r.witness["alpha"]),
            "lhs": complex(r.witness["lhs"]),
            "rhs": complex(r.witness["rhs"]),
        }
    return {
        "samples": r.samples,
        "seed": r.seed,
        "max_deviation": r.max_deviation,
        "passed": r.passed,
        "witness": witness,
    }


# ---------------------------------------------------------------------------
# csv


def ambiguity_to_csv(table: AmbiguityTable) -> str:
    """Magnitude grid as CSV, row m per line, columns n = 0..d-1."""
    mags = table.magnitudes()
    lines = [",".join(fmt_float(x) for x in row) for row in mags]
    return "\n".join(lines) + "\n"
