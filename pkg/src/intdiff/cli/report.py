"""Command reports and their table / JSON / CSV renderings."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, is_dataclass
from fractions import Fraction

from ..exact import GaussianRational
from ..integrate.extrapolate import ConvergenceRow

CSV_COLUMNS = ("step", "parameter", "estimate", "delta_prev", "bound")


@dataclass
class Report:
    command: str
    input: str
    route: str
    value: complex | None = None
    display: str | None = None
    diagnostics: dict = field(default_factory=dict)
    rows: tuple = ()
    oracle: dict | None = None
    verified: bool = False
    error: str | None = None


def decimal(x) -> str:
    """Shortest round-tripping decimal text of a float."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def complex_json(z) -> dict:
    z = complex(z)
    return {"re": decimal(z.real), "im": decimal(z.imag)}


def jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (float,)):
        return decimal(v)
    if isinstance(v, (complex, GaussianRational)):
        return complex_json(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, ConvergenceRow):
        return row_dict(v)
    if is_dataclass(v):
        return jsonable(v.__dict__)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return str(v)


def row_dict(r: ConvergenceRow) -> dict:
    return {"step": str(r.step), "parameter": decimal(r.parameter),
            "estimate": complex_json(r.estimate), "delta_prev": decimal(r.delta_prev),
            "bound": decimal(r.bound)}


def to_json(rep: Report) -> str:
    diag = dict(rep.diagnostics)
    diag["steps"] = [row_dict(r) for r in rep.rows]
    out = {
        "value": complex_json(rep.value) if rep.value is not None else None,
        "route": rep.route,
        "diagnostics": jsonable(diag),
        "oracle": jsonable(rep.oracle),
        "verified": rep.verified,
    }
    if rep.display is not None:
        out["display"] = rep.display
    if rep.error is not None:
        out["error"] = rep.error
    return json.dumps(out, indent=2)


def _estimate_text(z) -> str:
    z = complex(z)
    return decimal(z.real) if z.imag == 0 else f"{decimal(z.real)}{'+' if z.imag >= 0 else '-'}{decimal(abs(z.imag))}i"


def to_csv(rep: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rep.rows:
        w.writerow([r.step, decimal(r.parameter), _estimate_text(r.estimate),
                    decimal(r.delta_prev), decimal(r.bound)])
    return buf.getvalue()


def to_table(rep: Report) -> str:
    lines = [f"command : {rep.command}", f"input   : {rep.input}", f"route   : {rep.route}"]
    if rep.value is not None:
        lines.append(f"value   : {_estimate_text(rep.value)}")
    if rep.display is not None:
        lines.append(f"result  : {rep.display}")
    if rep.error is not None:
        lines.append(f"error   : {rep.error}")
    for k, v in rep.diagnostics.items():
        if k == "steps" or v is None:
            continue
        j = jsonable(v)
        text = j if isinstance(j, str) else json.dumps(j)
        lines.append(f"  {k}: {text}")
    if rep.oracle:
        lines.append("oracle  : value {} (delta {})".format(
            _estimate_text(rep.oracle["value"]), decimal(rep.oracle["delta"])))
    lines.append(f"verified: {'yes' if rep.verified else 'no'}")
    if rep.rows:
        lines.append("")
        lines.append(f"{'step':>4}  {'parameter':>14}  {'estimate':>26}  {'delta_prev':>11}  {'bound':>11}")
        for r in rep.rows:
            lines.append(f"{r.step:>4}  {r.parameter:>14.6g}  {_estimate_text(r.estimate):>26}  "
                         f"{r.delta_prev:>11.3e}  {r.bound:>11.3e}")
    return "\n".join(lines)


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(rep)
    if fmt == "csv":
        return to_csv(rep)
    return to_table(rep)
