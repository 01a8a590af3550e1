"""TCL fleet model: physical parameters per load, derived discrete-dynamics
coefficients, and the linearized thermal-storage recursion

    x_t = gamma * x_{t-1} + delta * u_t

with gamma = exp(-dt / (r_th * c_th)) and delta = (1 - gamma) * r_th * c_th.

Units: powers kW, energies kWh, temperatures degC, times hours.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import InvalidParameterError, SchemaError

__all__ = [
    "TclParams",
    "TclDerived",
    "Fleet",
    "FleetArrays",
    "LimitViolation",
    "derive_coefficients",
    "simulate_tcl",
    "check_tcl_limits",
    "fleet_from_dict",
    "load_fleet",
    "synthesize_fleet",
]

LIMIT_TOL = 1e-9  # absolute tolerance used by check_tcl_limits


@dataclass(frozen=True)
class TclParams:
    """Physical parameters of one thermostatically controlled load."""

    id: str
    p_b: float            # baseline power keeping the set-point, kW
    p_m: float            # rated power, kW
    theta_r: float        # set-point temperature, degC
    delta_theta: float    # dead-band half-width, degC
    c_th: float           # thermal capacitance, kWh/degC
    r_th: float           # thermal resistance, degC/kW
    eta: float            # coefficient of performance
    f: float | None = None  # optional per-TCL energy-capacity override, kWh

    def __post_init__(self):
        for name in ("p_b", "delta_theta", "c_th", "r_th", "eta"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0):
                raise InvalidParameterError(name, f"must be > 0, got {value!r}")
        if not self.p_m > self.p_b:
            raise InvalidParameterError("p_m", f"must exceed p_b={self.p_b}, got {self.p_m!r}")
        if self.f is not None and not self.f > 0:
            raise InvalidParameterError("f", f"override must be > 0, got {self.f!r}")


@dataclass(frozen=True)
class TclDerived:
    """Coefficients derived from one TCL's physical parameters."""

    gamma: float   # per-step dissipation factor, in (0, 1] for dt >= 0
    delta: float   # input gain, degC*kWh/kW scaling of the recursion
    a: float       # thermal rate 1 / (r_th * c_th), 1/h
    b: float       # input factor eta / c_th, degC/kWh
    f: float       # per-TCL energy capacity, kWh
    x_max: float   # thermal-storage bound delta_theta * c_th / eta, kWh


@dataclass(frozen=True)
class LimitViolation:
    t: int         # 0-based step index
    kind: str      # power_low | power_high | state_low | state_high
    value: float
    bound: float


def derive_coefficients(tcl: TclParams, dt: float) -> TclDerived:
    """Derive the discrete-dynamics coefficients for one TCL.

    dt = 0 yields the zero-interval limit gamma = 1, delta = 0.
    """
    if not (isinstance(dt, (int, float)) and dt >= 0):
        raise InvalidParameterError("dt", f"must be >= 0, got {dt!r}")
    tau = tcl.r_th * tcl.c_th  # thermal time constant, hours
    gamma = math.exp(-dt / tau)
    delta = (1.0 - gamma) * tau
    x_max = tcl.delta_theta * tcl.c_th / tcl.eta
    f = tcl.f if tcl.f is not None else x_max
    return TclDerived(
        gamma=gamma,
        delta=delta,
        a=1.0 / tau,
        b=tcl.eta / tcl.c_th,
        f=f,
        x_max=x_max,
    )


def simulate_tcl(derived: TclDerived, x0: float, u: Sequence[float]) -> np.ndarray:
    """Run the storage recursion; returns x_1..x_T. No clamping is applied --
    detecting violations is the caller's job (see check_tcl_limits)."""
    u = np.asarray(u, dtype=float)
    out = np.empty(u.shape[0])
    x = float(x0)
    for t in range(u.shape[0]):
        x = derived.gamma * x + derived.delta * u[t]
        out[t] = x
    return out


def check_tcl_limits(
    tcl: TclParams,
    derived: TclDerived,
    u: Sequence[float],
    x: Sequence[float],
) -> list[LimitViolation]:
    """List every step where u leaves [-p_b, p_m - p_b] or x leaves
    [-x_max, x_max], with absolute tolerance 1e-9. Bounds are closed."""
    u = np.asarray(u, dtype=float)
    x = np.asarray(x, dtype=float)
    if u.shape != x.shape:
        raise InvalidParameterError("u/x", f"length mismatch: {u.shape} vs {x.shape}")
    u_lo, u_hi = -tcl.p_b, tcl.p_m - tcl.p_b
    violations: list[LimitViolation] = []
    for t in range(u.shape[0]):
        if u[t] < u_lo - LIMIT_TOL:
            violations.append(LimitViolation(t, "power_low", float(u[t]), u_lo))
        elif u[t] > u_hi + LIMIT_TOL:
            violations.append(LimitViolation(t, "power_high", float(u[t]), u_hi))
        if x[t] < -derived.x_max - LIMIT_TOL:
            violations.append(LimitViolation(t, "state_low", float(x[t]), -derived.x_max))
        elif x[t] > derived.x_max + LIMIT_TOL:
            violations.append(LimitViolation(t, "state_high", float(x[t]), derived.x_max))
    return violations


@dataclass(frozen=True)
class FleetArrays:
    """Vectorized view of a fleet's parameters and derived coefficients."""

    p_b: np.ndarray
    u_min: np.ndarray   # -p_b
    u_max: np.ndarray   # p_m - p_b
    gamma: np.ndarray
    delta: np.ndarray
    a: np.ndarray
    x_max: np.ndarray
    f: np.ndarray


@dataclass(frozen=True)
class Fleet:
    """An ordered array of TCLs sharing one schedule interval.

    Ordering is stable: index i is the contract for network coupling rows.
    """

    tcls: tuple[TclParams, ...]
    dt: float  # schedule interval, hours

    def __post_init__(self):
        object.__setattr__(self, "tcls", tuple(self.tcls))
        if not self.tcls:
            raise InvalidParameterError("tcls", "fleet must be non-empty")
        if not (isinstance(self.dt, (int, float)) and self.dt > 0):
            raise InvalidParameterError("dt", f"must be > 0, got {self.dt!r}")

    @property
    def size(self) -> int:
        return len(self.tcls)

    def derived(self) -> tuple[TclDerived, ...]:
        return tuple(derive_coefficients(tcl, self.dt) for tcl in self.tcls)

    def arrays(self) -> FleetArrays:
        der = self.derived()
        p_b = np.array([t.p_b for t in self.tcls])
        return FleetArrays(
            p_b=p_b,
            u_min=-p_b,
            u_max=np.array([t.p_m - t.p_b for t in self.tcls]),
            gamma=np.array([d.gamma for d in der]),
            delta=np.array([d.delta for d in der]),
            a=np.array([d.a for d in der]),
            x_max=np.array([d.x_max for d in der]),
            f=np.array([d.f for d in der]),
        )


_TCL_REQUIRED = ("id", "p_b", "p_m", "theta_r", "delta_theta", "c_th", "r_th", "eta")
_TCL_OPTIONAL = ("f",)


def _require_number(obj: dict, key: str, where: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: field {key!r} must be a number, got {value!r}")
    return float(value)


def fleet_from_dict(obj: object) -> Fleet:
    """Build a Fleet from the documented JSON structure. Unknown fields are
    rejected; see SCHEMAS.md."""
    if not isinstance(obj, dict):
        raise SchemaError(f"fleet file: expected a JSON object, got {type(obj).__name__}")
    extra = set(obj) - {"dt_hours", "tcls"}
    if extra:
        raise SchemaError(f"fleet file: unknown top-level fields {sorted(extra)}")
    for key in ("dt_hours", "tcls"):
        if key not in obj:
            raise SchemaError(f"fleet file: missing top-level field {key!r}")
    dt = _require_number(obj, "dt_hours", "fleet file")
    records = obj["tcls"]
    if not isinstance(records, list) or not records:
        raise SchemaError("fleet file: 'tcls' must be a non-empty array")
    tcls = []
    seen_ids: set[str] = set()
    for idx, rec in enumerate(records):
        where = f"tcls[{idx}]"
        if not isinstance(rec, dict):
            raise SchemaError(f"{where}: expected an object")
        extra = set(rec) - set(_TCL_REQUIRED) - set(_TCL_OPTIONAL)
        if extra:
            raise SchemaError(f"{where}: unknown fields {sorted(extra)}")
        missing = [k for k in _TCL_REQUIRED if k not in rec]
        if missing:
            raise SchemaError(f"{where}: missing fields {missing}")
        tcl_id = rec["id"]
        if not isinstance(tcl_id, str) or not tcl_id:
            raise SchemaError(f"{where}: 'id' must be a non-empty string")
        if tcl_id in seen_ids:
            raise SchemaError(f"{where}: duplicate id {tcl_id!r}")
        seen_ids.add(tcl_id)
        kwargs = {k: _require_number(rec, k, where) for k in _TCL_REQUIRED[1:]}
        if "f" in rec:
            kwargs["f"] = _require_number(rec, "f", where)
        try:
            tcls.append(TclParams(id=tcl_id, **kwargs))
        except InvalidParameterError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    try:
        return Fleet(tcls=tuple(tcls), dt=dt)
    except InvalidParameterError as exc:
        raise SchemaError(f"fleet file: {exc}") from exc


def load_fleet(path: str | Path) -> Fleet:
    """Load and validate a fleet JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return fleet_from_dict(obj)


def synthesize_fleet(
    n: int,
    dt: float = 1.0 / 6.0,
    seed: int | None = 0,
    rng: np.random.Generator | None = None,
) -> Fleet:
    """Generate a heterogeneous cooling fleet with realistic ranges.

    Baseline power follows from the steady-state balance against a hot
    ambient (32 degC); rated power is a 2x-3.5x multiple of baseline.
    Useful for tests and demos; no claim of matching any published fleet.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    tcls = []
    for i in range(n):
        c_th = rng.uniform(1.5, 3.0)
        r_th = rng.uniform(1.5, 2.5)
        eta = rng.uniform(2.2, 3.0)
        delta_theta = rng.uniform(0.3, 0.7)
        theta_r = rng.uniform(22.0, 26.0)
        p_b = (32.0 - theta_r) / (eta * r_th)
        p_m = p_b * rng.uniform(2.0, 3.5)
        tcls.append(
            TclParams(
                id=f"tcl-{i:04d}",
                p_b=p_b,
                p_m=p_m,
                theta_r=theta_r,
                delta_theta=delta_theta,
                c_th=c_th,
                r_th=r_th,
                eta=eta,
            )
        )
    return Fleet(tcls=tuple(tcls), dt=dt)
