"""Parameter sweeps over (B, T) and their CSV / JSON files.

Files carry a run manifest: ``#``-prefixed ``key: value`` comment lines at the
top of a CSV, or a ``manifest`` object in JSON.  Floats are written with 17
significant digits, so reading a file back gives the exact doubles.
"""

import configparser
import csv
import io
import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .entanglement import concurrence_zero_T, thermal_concurrence
from .ring import RingParams, flip_field, ground_state_limit
from .teleport import (
    QUADRATURE_NODES,
    average_fidelity_closed,
    average_fidelity_zero_T,
    input_state,
    outcome_probabilities_closed,
    quantum_advantage,
    run_protocol,
)

QUANTITIES = ("concurrence", "avg_fidelity", "advantage", "probabilities")
FORMATS = ("csv", "json")


@dataclass
class SweepSpec:
    J: float
    B_range: tuple
    T_range: tuple
    quantities: tuple = ("concurrence", "avg_fidelity")
    output_format: str = "csv"
    output_path: str = "-"
    units: str = "J"
    theta: float = 0.0

    def __post_init__(self):
        self.B_range = _check_range("B", self.B_range)
        self.T_range = _check_range("T", self.T_range)
        self.quantities = tuple(self.quantities)
        if not self.quantities:
            raise ValueError("at least one quantity is required")
        unknown = set(self.quantities) - set(QUANTITIES)
        if unknown:
            raise ValueError(f"unknown quantities: {sorted(unknown)}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.units not in ("J", "absolute"):
            raise ValueError("units must be 'J' or 'absolute'")
        if self.T_range[0] < 0:
            raise ValueError("temperatures must be non-negative")

    def values(self, which):
        start, stop, count = self.B_range if which == "B" else self.T_range
        return np.linspace(start, stop, count) if count > 1 else np.array([start])

    def scale(self):
        """Energy unit applied to B and T: ``|J|`` in J units (1 if J = 0)."""
        return abs(self.J) if self.units == "J" and self.J != 0 else 1.0


def _check_range(name, r):
    start, stop, count = r
    start, stop, count = float(start), float(stop), int(count)
    if count < 1:
        raise ValueError(f"{name} range needs count >= 1")
    if start > stop:
        raise ValueError(f"{name} range needs start <= stop")
    return (start, stop, count)


def columns(quantities):
    cols = ["J", "B", "T"]
    for q in quantities:
        cols.extend(["p1", "p2", "p3", "p4"] if q == "probabilities" else [q])
    return cols


def _zero_T_probabilities(J, B, theta):
    chi = ground_state_limit(J, abs(B))
    if B < 0:
        chi = flip_field(chi)
    return tuple(out.probability for out in run_protocol(input_state(theta, 0.0), chi))


def evaluate_point(J, B, T, quantities, theta=0.0):
    """Requested quantities at one physical point, as a dict.

    ``T = 0`` uses the exact zero-temperature branches; ``|B|`` is used there
    since both concurrence and average fidelity are even in the field.
    """
    out = {}
    zero = T == 0
    p = None if zero else RingParams.from_temperature(J, B, T)
    for q in quantities:
        if q == "concurrence":
            out[q] = concurrence_zero_T(J, abs(B)) if zero else thermal_concurrence(p)
        elif q == "avg_fidelity":
            out[q] = average_fidelity_zero_T(J, abs(B)) if zero else average_fidelity_closed(p)
        elif q == "advantage":
            out[q] = average_fidelity_zero_T(J, abs(B)) > 2.0 / 3.0 if zero else quantum_advantage(p)
        elif q == "probabilities":
            probs = _zero_T_probabilities(J, B, theta) if zero else outcome_probabilities_closed(p, theta)
            out.update(zip(("p1", "p2", "p3", "p4"), probs))
        else:
            raise ValueError(f"unknown quantity {q!r}")
    return out


def run_sweep(spec):
    """Rows ordered by B index, then T index.  B and T are echoed in the sweep's own units."""
    scale = spec.scale()
    cols = columns(spec.quantities)
    rows = []
    for b in spec.values("B"):
        for t in spec.values("T"):
            values = evaluate_point(spec.J, b * scale, t * scale, spec.quantities, spec.theta)
            rows.append([spec.J, float(b), float(t)] + [values[c] for c in cols[3:]])
    return cols, rows


def manifest(spec, timestamp=None):
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    params = asdict(spec)
    params.pop("output_path")
    return {
        "tool": "xxring",
        "version": __version__,
        "timestamp": timestamp,
        "parameters": params,
        "quadrature_nodes": QUADRATURE_NODES,
        "tolerances": {"thermal_state": 1e-10, "concurrence": 1e-9, "avg_fidelity": 1e-8},
    }


def _fmt(x):
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    return "%.17g" % x


def dumps_csv(cols, rows, meta):
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def dumps_json(cols, rows, meta):
    rows = [[bool(x) if isinstance(x, np.bool_) else x for x in row] for row in rows]
    return json.dumps({"manifest": meta, "columns": cols, "rows": rows}, indent=1) + "\n"


def loads_csv(text):
    """Parse a sweep CSV into ``(columns, rows, manifest)``."""
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(": ")
            meta[key] = json.loads(value)
        elif line.strip():
            body.append(line)
    reader = csv.reader(body)
    cols = next(reader)
    rows = []
    for rec in reader:
        rows.append([bool(int(v)) if c == "advantage" else float(v) for c, v in zip(cols, rec)])
    return cols, rows, meta


def loads_json(text):
    doc = json.loads(text)
    return doc["columns"], doc["rows"], doc["manifest"]


def write_sweep(spec, timestamp=None):
    """Run ``spec`` and write it to ``spec.output_path`` (``'-'`` returns the text instead)."""
    cols, rows = run_sweep(spec)
    meta = manifest(spec, timestamp)
    text = (dumps_csv if spec.output_format == "csv" else dumps_json)(cols, rows, meta)
    if spec.output_path in ("-", None, ""):
        return text
    with open(spec.output_path, "w", newline="") as fh:
        fh.write(text)
    return None


def read_sweep(path):
    with open(path) as fh:
        text = fh.read()
    return loads_json(text) if text.lstrip().startswith("{") else loads_csv(text)


CONFIG_KEYS = {
    "J": float,
    "B_start": float,
    "B_stop": float,
    "B_count": int,
    "T_start": float,
    "T_stop": float,
    "T_count": int,
    "quantities": lambda s: tuple(q.strip() for q in s.split(",") if q.strip()),
    "format": str,
    "out": str,
    "units": str,
    "theta": float,
}


def load_config(path):
    """Read a ``key = value`` (or JSON) sweep configuration into a plain dict."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        raw = {k: str(v) if not isinstance(v, list) else ",".join(v) for k, v in json.loads(text).items()}
    else:
        parser = configparser.ConfigParser(delimiters=("=",), comment_prefixes=("#", ";"))
        parser.optionxform = str
        parser.read_string("[sweep]\n" + text)
        raw = dict(parser["sweep"])
    unknown = set(raw) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return {k: CONFIG_KEYS[k](v) for k, v in raw.items()}

