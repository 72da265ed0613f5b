"""Exact JSON persistence for scenes and verification reports.

Rationals serialize as canonical ``"p/q"`` strings, never as floating
point JSON numbers, so files are lossless and byte-deterministic.  The
parser rejects any coordinate that is not in lowest terms with a positive
denominator: round trips are the identity on both sides.

Report files deliberately omit wall-clock timings; their bytes are a pure
function of the input and the tool version.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .checks import SuiteReport
from .geom import Circle, Point
from .scene import Scene

SCENE_FORMAT = "brocard-scenes/1"
REPORT_FORMAT = "brocard-report/1"
TOOL_VERSION = "0.1.0"


class SceneFormatError(ValueError):
    """The file is not a well-formed scene document."""


def rational_to_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise SceneFormatError(f"rational must be a string, got {type(text).__name__}")
    num_s, _, den_s = text.partition("/")
    try:
        num = int(num_s)
        den = int(den_s) if den_s else 1
    except ValueError as exc:
        raise SceneFormatError(f"malformed rational {text!r}") from exc
    if den <= 0:
        raise SceneFormatError(f"rational {text!r} must have a positive denominator")
    if gcd(abs(num), den) != 1:
        raise SceneFormatError(f"rational {text!r} is not in lowest terms")
    return Fraction(num, den)


def _point_to_json(p: Point) -> List[str]:
    return [rational_to_str(p.x), rational_to_str(p.y)]


def _point_from_json(data: Any, where: str) -> Point:
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise SceneFormatError(f"{where}: point must be a two-element array")
    return Point(rational_from_str(data[0]), rational_from_str(data[1]))


_POINT_FIELDS = ("a", "b", "c", "o", "a1", "a2", "b1", "b2", "c1", "c2")


def scene_to_dict(s: Scene) -> Dict[str, Any]:
    out: Dict[str, Any] = {name: _point_to_json(getattr(s, name)) for name in _POINT_FIELDS}
    out["gamma"] = {
        "d": rational_to_str(s.gamma.d),
        "e": rational_to_str(s.gamma.e),
        "f": rational_to_str(s.gamma.f),
    }
    out["classical"] = s.classical
    out["strict_segments"] = s.strict_segments
    return out


def scene_from_dict(data: Any, where: str = "scene") -> Scene:
    if not isinstance(data, dict):
        raise SceneFormatError(f"{where}: expected an object")
    missing = [k for k in (*_POINT_FIELDS, "gamma") if k not in data]
    if missing:
        raise SceneFormatError(f"{where}: missing fields {', '.join(missing)}")
    gamma = data["gamma"]
    if not isinstance(gamma, dict) or set(gamma) != {"d", "e", "f"}:
        raise SceneFormatError(f"{where}: gamma must carry exactly d, e, f")
    points = {name: _point_from_json(data[name], f"{where}.{name}") for name in _POINT_FIELDS}
    return Scene(
        gamma=Circle(*(rational_from_str(gamma[k]) for k in ("d", "e", "f"))),
        classical=bool(data.get("classical", False)),
        strict_segments=bool(data.get("strict_segments", False)),
        **points,
    )


def _canonical_bytes(document: Any) -> bytes:
    return (json.dumps(document, sort_keys=True, indent=2) + "\n").encode("utf-8")


def scene_digest(s: Scene) -> str:
    blob = json.dumps(scene_to_dict(s), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def scenes_to_document(
    scenes: Sequence[Scene], provenance: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    return {
        "format": SCENE_FORMAT,
        "provenance": provenance or {},
        "scenes": [scene_to_dict(s) for s in scenes],
    }


def scenes_from_document(doc: Any) -> Tuple[List[Scene], Dict[str, Any]]:
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a JSON object")
    if doc.get("format") != SCENE_FORMAT:
        raise SceneFormatError(f"unsupported scene format {doc.get('format')!r}")
    raw = doc.get("scenes")
    if not isinstance(raw, list) or not raw:
        raise SceneFormatError("scene document carries no scenes")
    scenes = [scene_from_dict(item, f"scenes[{i}]") for i, item in enumerate(raw)]
    prov = doc.get("provenance") or {}
    return scenes, prov


def write_scene_file(path: str, scenes: Sequence[Scene], provenance: Optional[Dict[str, Any]] = None) -> None:
    with open(path, "wb") as fh:
        fh.write(_canonical_bytes(scenes_to_document(scenes, provenance)))


def read_scene_file(path: str) -> Tuple[List[Scene], Dict[str, Any]]:
    with open(path, "rb") as fh:
        try:
            doc = json.loads(fh.read().decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SceneFormatError(f"{path}: {exc}") from exc
    return scenes_from_document(doc)


def report_to_dict(
    reports: Sequence[SuiteReport], input_digest: str
) -> Dict[str, Any]:
    """Reports keyed by scene index; timing fields are omitted on purpose so
    the bytes depend only on input and version."""
    scenes = []
    totals = {"pass": 0, "fail": 0, "degenerate": 0}
    for index, report in enumerate(reports):
        checks = []
        for result in report.results:
            checks.append(
                {
                    "id": result.check_id,
                    "status": result.status,
                    "assertions": [
                        {
                            "label": a.label,
                            "ok": a.ok,
                            "witnesses": [rational_to_str(w) for w in a.witnesses],
                        }
                        for a in result.assertions
                    ],
                    "notes": list(result.notes),
                }
            )
        counts = report.counts
        scenes.append(
            {
                "index": index,
                "digest": report.scene_digest,
                "checks": checks,
                "counts": {
                    "pass": counts["PASS"],
                    "fail": counts["FAIL"],
                    "degenerate": counts["DEGENERATE"],
                },
            }
        )
        totals["pass"] += counts["PASS"]
        totals["fail"] += counts["FAIL"]
        totals["degenerate"] += counts["DEGENERATE"]
    return {
        "format": REPORT_FORMAT,
        "tool_version": TOOL_VERSION,
        "input_digest": input_digest,
        "scenes": scenes,
        "summary": totals,
    }


def write_report_file(path: str, reports: Sequence[SuiteReport], input_digest: str) -> None:
    with open(path, "wb") as fh:
        fh.write(_canonical_bytes(report_to_dict(reports, input_digest)))


def file_digest(path: str) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()
