"""Frequency-dependent material database.

Materials are named records of (frequency, relative permittivity,
conductivity) samples plus a frequency-independent relative permeability.
Lookups interpolate eps_r and sigma linearly in frequency between samples
and refuse to extrapolate: measured low-THz material data is scarce and
silent extrapolation is the dominant error source.  A record with a single
sample is treated as frequency-constant.

The file format is a JSON array:

    [{"name": "plaster", "mu_r": 1.0,
      "samples": [{"freq_hz": 1.0e11, "eps_r": 4.0, "sigma": 0.1}, ...]}]

Built-in records (vacuum, air, pec1e9) are always present and can be
overridden by user entries of the same name.
"""

from __future__ import annotations

import json
import math
import os
from bisect import bisect_right
from dataclasses import dataclass, field

from .constants import EPS_0, MU_0
from .errors import MaterialLoadError
from .media import Medium

__all__ = [
    "MaterialSample",
    "MaterialRecord",
    "MaterialDB",
    "builtin_records",
    "load_materials",
    "params_at",
]


@dataclass(frozen=True)
class MaterialSample:
    freq_hz: float
    eps_r: float
    sigma: float


@dataclass(frozen=True)
class MaterialRecord:
    """One material: name, mu_r, and >= 1 samples strictly increasing in frequency."""

    name: str
    samples: tuple[MaterialSample, ...]
    mu_r: float = 1.0

    def __post_init__(self) -> None:
        if not self.name:
            raise MaterialLoadError("material record has an empty name")
        if not (math.isfinite(self.mu_r) and self.mu_r > 0.0):
            raise MaterialLoadError(f"material '{self.name}': mu_r must be finite and > 0")
        if len(self.samples) < 1:
            raise MaterialLoadError(f"material '{self.name}': needs at least one sample")
        for s in self.samples:
            for attr in ("freq_hz", "eps_r", "sigma"):
                if not math.isfinite(getattr(s, attr)):
                    raise MaterialLoadError(
                        f"material '{self.name}': non-finite {attr} in sample"
                    )
            if s.freq_hz <= 0.0:
                raise MaterialLoadError(f"material '{self.name}': freq_hz must be > 0")
            if s.eps_r <= 0.0:
                raise MaterialLoadError(f"material '{self.name}': eps_r must be > 0")
            if s.sigma < 0.0:
                raise MaterialLoadError(f"material '{self.name}': sigma must be >= 0")
        freqs = [s.freq_hz for s in self.samples]
        if any(b <= a for a, b in zip(freqs, freqs[1:])):
            raise MaterialLoadError(
                f"material '{self.name}': sample frequencies must be strictly increasing"
            )

    @property
    def freq_min(self) -> float:
        return self.samples[0].freq_hz

    @property
    def freq_max(self) -> float:
        return self.samples[-1].freq_hz


def builtin_records() -> tuple[MaterialRecord, ...]:
    """The always-available reference media.

    air uses the dielectric constant 1.0006; pec1e9 is a near-perfect
    conductor surrogate (sigma = 1e9 S/m) that keeps every kernel on the
    ordinary lossy-medium code path instead of a special infinite case.
    """

    def constant(eps_r, sigma):
        return (MaterialSample(freq_hz=1.0, eps_r=eps_r, sigma=sigma),)

    return (
        MaterialRecord(name="vacuum", samples=constant(1.0, 0.0)),
        MaterialRecord(name="air", samples=constant(1.0006, 0.0)),
        MaterialRecord(name="pec1e9", samples=constant(1.0, 1.0e9)),
    )


@dataclass(frozen=True)
class MaterialDB:
    """Case-insensitively indexed, immutable collection of material records."""

    records: dict[str, MaterialRecord] = field(default_factory=dict)

    def names(self) -> list[str]:
        return sorted(r.name for r in self.records.values())

    def get(self, name: str) -> MaterialRecord:
        try:
            return self.records[name.lower()]
        except KeyError:
            raise MaterialLoadError(
                f"unknown material '{name}' (available: {', '.join(self.names())})"
            ) from None

    def params_at(self, name: str, freq_hz: float) -> Medium:
        return params_at(self, name, freq_hz)


def _record_from_obj(obj: object, index: int) -> MaterialRecord:
    if not isinstance(obj, dict):
        raise MaterialLoadError(f"entry {index}: expected an object, got {type(obj).__name__}")
    unknown = set(obj) - {"name", "mu_r", "samples"}
    if unknown:
        raise MaterialLoadError(f"entry {index}: unknown fields {sorted(unknown)}")
    try:
        name = obj["name"]
        raw_samples = obj["samples"]
    except KeyError as exc:
        raise MaterialLoadError(f"entry {index}: missing required field {exc}") from None
    if not isinstance(name, str):
        raise MaterialLoadError(f"entry {index}: 'name' must be a string")
    mu_r = obj.get("mu_r", 1.0)
    if not isinstance(mu_r, (int, float)) or isinstance(mu_r, bool):
        raise MaterialLoadError(f"material '{name}': 'mu_r' must be a number")
    if not isinstance(raw_samples, list):
        raise MaterialLoadError(f"material '{name}': 'samples' must be an array")
    samples = []
    for k, s in enumerate(raw_samples):
        if not isinstance(s, dict):
            raise MaterialLoadError(f"material '{name}': sample {k} is not an object")
        missing = {"freq_hz", "eps_r", "sigma"} - set(s)
        if missing:
            raise MaterialLoadError(
                f"material '{name}': sample {k} missing fields {sorted(missing)}"
            )
        extra = set(s) - {"freq_hz", "eps_r", "sigma"}
        if extra:
            raise MaterialLoadError(
                f"material '{name}': sample {k} has unknown fields {sorted(extra)}"
            )
        vals = {}
        for key in ("freq_hz", "eps_r", "sigma"):
            v = s[key]
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise MaterialLoadError(f"material '{name}': sample {k} field '{key}' not a number")
            vals[key] = float(v)
        samples.append(MaterialSample(**vals))
    return MaterialRecord(name=name, samples=tuple(samples), mu_r=float(mu_r))


def load_materials(source: str | os.PathLike | None = None) -> MaterialDB:
    """Build a database from built-ins plus an optional user source.

    source may be None (built-ins only), a path to a JSON file, or inline
    JSON text (recognized by a leading '[').  User entries override
    built-ins; duplicate names within the user source are an error.
    """
    records = {r.name.lower(): r for r in builtin_records()}
    if source is not None:
        if isinstance(source, str) and source.lstrip().startswith("["):
            text, origin = source, "<inline>"
        else:
            origin = os.fspath(source)
            try:
                with open(origin, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise MaterialLoadError(f"cannot read material file {origin}: {exc}") from exc
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MaterialLoadError(
                f"{origin}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
        if not isinstance(doc, list):
            raise MaterialLoadError(f"{origin}: top level must be an array of material objects")
        seen = set()
        for i, obj in enumerate(doc):
            rec = _record_from_obj(obj, i)
            key = rec.name.lower()
            if key in seen:
                raise MaterialLoadError(f"{origin}: duplicate material name '{rec.name}'")
            seen.add(key)
            records[key] = rec
    return MaterialDB(records=records)


def params_at(db: MaterialDB, name: str, freq_hz: float) -> Medium:
    """Constitutive parameters of a named material at one frequency.

    Single-sample records are frequency-constant; otherwise eps_r and sigma
    are interpolated linearly and queries outside [freq_min, freq_max] are
    rejected with the valid range in the message.
    """
    rec = db.get(name)
    if not (math.isfinite(freq_hz) and freq_hz > 0.0):
        raise MaterialLoadError(f"query frequency must be finite and > 0, got {freq_hz}")
    if len(rec.samples) == 1:
        s = rec.samples[0]
        return Medium(mu=rec.mu_r * MU_0, eps=s.eps_r * EPS_0, sigma=s.sigma)
    if not (rec.freq_min <= freq_hz <= rec.freq_max):
        raise MaterialLoadError(
            f"material '{rec.name}': frequency {freq_hz:g} Hz outside sampled range "
            f"[{rec.freq_min:g}, {rec.freq_max:g}] Hz (no extrapolation)"
        )
    freqs = [s.freq_hz for s in rec.samples]
    # segment index such that freqs[i] <= freq_hz; exact-knot queries return
    # that sample's values bit-exactly
    i = bisect_right(freqs, freq_hz) - 1
    if i == len(rec.samples) - 1:
        s = rec.samples[-1]
        return Medium(mu=rec.mu_r * MU_0, eps=s.eps_r * EPS_0, sigma=s.sigma)
    lo, hi = rec.samples[i], rec.samples[i + 1]
    t = (freq_hz - lo.freq_hz) / (hi.freq_hz - lo.freq_hz)
    eps_r = lo.eps_r + (hi.eps_r - lo.eps_r) * t
    sigma = lo.sigma + (hi.sigma - lo.sigma) * t
    return Medium(mu=rec.mu_r * MU_0, eps=eps_r * EPS_0, sigma=sigma)
