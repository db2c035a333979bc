"""Machine-readable run reports: rows of {experiment, params, residual,
tolerance, pass}, serialized to CSV (fixed schema, byte-deterministic for a
fixed config and seed) and JSON (embeds the resolved config)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ReportRow:
    experiment: str
    params: dict
    residual: float
    tolerance: float
    passed: bool


def check_le(experiment: str, params: dict, residual: float, tol: float) -> ReportRow:
    """Row passing when residual <= tol."""
    p = dict(params)
    p["check"] = "max<=tol"
    return ReportRow(experiment, p, float(residual), float(tol), bool(residual <= tol))


def check_ge(experiment: str, params: dict, value: float, floor: float) -> ReportRow:
    """Row passing when value >= floor (witness / necessity probes)."""
    p = dict(params)
    p["check"] = "min>=tol"
    return ReportRow(experiment, p, float(value), float(floor), bool(value >= floor))


def all_pass(rows) -> bool:
    return all(r.passed for r in rows)


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, complex):
        return f"{v.real!r}{'+' if v.imag >= 0 else '-'}{abs(v.imag)!r}j"
    return str(v)


def params_string(params: dict) -> str:
    # the CSV schema is a fixed five-column row: keep the field comma-free
    text = ";".join(f"{k}={_fmt_value(params[k])}" for k in sorted(params))
    return text.replace(",", "|")


def rows_to_csv(rows) -> str:
    lines = ["experiment,params,residual,tolerance,pass"]
    for r in rows:
        lines.append(",".join([
            r.experiment,
            params_string(r.params),
            repr(r.residual),
            repr(r.tolerance),
            "true" if r.passed else "false",
        ]))
    return "\n".join(lines) + "\n"


def rows_to_json(rows, config: dict) -> str:
    payload = {
        "config": config,
        "rows": [
            {
                "experiment": r.experiment,
                "params": {k: _fmt_value(v) for k, v in sorted(r.params.items())},
                "residual": r.residual,
                "tolerance": r.tolerance,
                "pass": r.passed,
            }
            for r in rows
        ],
    }
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def write_report(rows, out_base: str, config: dict):
    """Write <out_base>.csv and <out_base>.json; returns the two paths."""
    base = Path(out_base)
    if base.suffix in (".csv", ".json"):
        base = base.with_suffix("")
    base.parent.mkdir(parents=True, exist_ok=True)
    csv_path = base.with_suffix(".csv")
    json_path = base.with_suffix(".json")
    csv_path.write_text(rows_to_csv(rows), encoding="utf-8")
    json_path.write_text(rows_to_json(rows, config), encoding="utf-8")
    return csv_path, json_path
