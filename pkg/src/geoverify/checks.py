"""Named verification checks with deterministic sampling and reports.

Each registered check certifies one quantitative claim about the
geometry by sweeping residuals over sampled points and reporting the
worst value found.  A check passes when its ``max_residual`` is below
the configured threshold; checks whose claim is an *inequality* (a
witness must exceed some margin) report 0.0 when the claim holds and
1.0 when it does not, so the same pass rule applies.

Sampling is counter-based: the stream for point ``i`` of check ``name``
is seeded by (seed, name, i), so reports are reproducible and adding a
check never perturbs another check's points.
"""

from __future__ import annotations

import json
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import harmonic, soliton, tables
from .chart import FrameVector, Point, constant_frame_field, coordinate_field, frame_field
from .curvature import coercivity_check, frame_connection, ricci_frame, riemann_frame_table, scalar_curvature
from .harmonic import CorollaryFamily, corollary_field
from .soliton import SolitonParams

__all__ = [
    "ConfigError",
    "UnknownCheck",
    "Box",
    "RunConfig",
    "CheckReport",
    "CHECK_NAMES",
    "run_suite",
    "run_all",
]


class ConfigError(Exception):
    """Invalid run configuration (bad box, tolerance, or point count)."""


class UnknownCheck(Exception):
    """Requested check name is not registered."""


@dataclass(frozen=True)
class Box:
    """Sampling bounds; the default keeps every expression well conditioned."""

    xmin: float = -2.0
    xmax: float = 2.0
    ymin: float = -2.0
    ymax: float = 2.0
    smin: float = -2.0
    smax: float = 2.0
    tmin: float = 0.5
    tmax: float = 2.0

    def validate(self):
        pairs = [
            (self.xmin, self.xmax),
            (self.ymin, self.ymax),
            (self.smin, self.smax),
            (self.tmin, self.tmax),
        ]
        for lo, hi in pairs:
            if not lo <= hi:
                raise ConfigError(f"empty sampling interval [{lo}, {hi}]")
        if not self.tmin > 0.0:
            raise ConfigError(f"sampling box must respect t > 0, got tmin = {self.tmin}")

    def lows(self):
        return np.array([self.xmin, self.ymin, self.smin, self.tmin])

    def highs(self):
        return np.array([self.xmax, self.ymax, self.smax, self.tmax])


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    points: int = 100
    tol: float = 1e-9
    box: Box = field(default_factory=Box)
    soliton_params: Optional[SolitonParams] = None
    output: Optional[str] = None  # path for reports; None means stdout

    def validate(self):
        if self.points < 1:
            raise ConfigError(f"points must be >= 1, got {self.points}")
        if not self.tol > 0.0:
            raise ConfigError(f"tol must be > 0, got {self.tol}")
        self.box.validate()


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    points_sampled: int
    max_residual: float
    threshold: float
    passed: bool
    witness_point: tuple[float, float, float, float]
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "check_name": self.check_name,
                "points_sampled": self.points_sampled,
                "max_residual": self.max_residual,
                "threshold": self.threshold,
                "pass": self.passed,
                "witness_point": list(self.witness_point),
                "elapsed_ms": self.elapsed_ms,
            }
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.check_name}: {status}  max_residual={self.max_residual:.3e}  "
            f"threshold={self.threshold:.1e}  points={self.points_sampled}  "
            f"witness={tuple(round(c, 6) for c in self.witness_point)}"
        )


def _rng(seed: int, name: str, index: int) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFF, zlib.crc32(name.encode()), index])


def _sample_point(cfg: RunConfig, name: str, index: int) -> Point:
    u = _rng(cfg.seed, name, index).uniform(cfg.box.lows(), cfg.box.highs())
    return Point(*u)


def _sample_params(cfg: RunConfig, name: str, index: int, require_c123: bool = False) -> SolitonParams:
    rng = _rng(cfg.seed, name + "/params", index)
    c = rng.uniform(-3.0, 3.0, 5)
    while require_c123 and float(np.max(np.abs(c[:3]))) < 0.1:
        c = rng.uniform(-3.0, 3.0, 5)
    return SolitonParams(*c)


class _Tracker:
    """Running maximum with the point that attained it."""

    def __init__(self):
        self.max_residual = 0.0
        self.witness = (0.0, 0.0, 0.0, 1.0)

    def update(self, value: float, p: Point):
        if value >= self.max_residual:
            self.max_residual = float(value)
            self.witness = p.astuple()


def _check_lemma1(cfg: RunConfig):
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "lemma1", i)
        tr.update(np.max(np.abs(frame_connection(p) - tables.CONNECTION_TABLE)), p)
    return cfg.points, tr


def _check_lemma2(cfg: RunConfig):
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "lemma2", i)
        err = max(
            float(np.max(np.abs(ricci_frame(p) - tables.RICCI_FRAME))),
            abs(scalar_curvature(p) - tables.SCALAR_CURVATURE),
        )
        tr.update(err, p)
    return cfg.points, tr


def _check_riemc(cfg: RunConfig):
    expected = tables.full_curvature_tensor()
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "riemc", i)
        tr.update(np.max(np.abs(riemann_frame_table(p) - expected)), p)
    return cfg.points, tr


def _check_theorem1(cfg: RunConfig):
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "theorem1", i)
        params = cfg.soliton_params or _sample_params(cfg, "theorem1", i)
        xi = soliton.soliton_field(params)
        res = soliton.soliton_residual(xi, params.lam, p)
        tr.update(np.max(np.abs(res)), p)
    return cfg.points, tr


def _grid_points(box: Box, n: int = 5):
    axes = [np.linspace(lo, hi, n) for lo, hi in zip(box.lows(), box.highs())]
    for x in axes[0]:
        for y in axes[1]:
            for s in axes[2]:
                for t in axes[3]:
                    yield Point(x, y, s, t)


def _check_nongradient(cfg: RunConfig):
    tr = _Tracker()
    # exact closedness defect of the c3 member: (d xi-flat)_st = 1/(2 t^3)
    xi3 = soliton.soliton_field(SolitonParams(c3=1.0))
    for i in range(cfg.points):
        p = _sample_point(cfg, "nongradient", i)
        d = soliton.closedness_defect(xi3, p)
        tr.update(abs(d[5] - 1.0 / (2.0 * p.t**3)), p)

    # every sampled member with (c1,c2,c3) != 0 must fail closedness somewhere
    # on the grid; the defect is affine in the constants, so evaluate a basis
    grid = list(_grid_points(cfg.box))
    base = soliton.soliton_field(SolitonParams())
    directions = [soliton.soliton_field(SolitonParams(**{f"c{k}": 1.0})) for k in range(1, 6)]
    defect0 = np.array([soliton.closedness_defect(base, p) for p in grid])
    ddefect = np.array(
        [[soliton.closedness_defect(f, p) for p in grid] for f in directions]
    )  # [k, point, component]
    ddefect -= defect0[None, :, :]
    n_params = 20
    for j in range(n_params):
        params = _sample_params(cfg, "nongradient", j, require_c123=True)
        d = defect0 + np.tensordot(np.array(params.constants()), ddefect, axes=1)
        best = int(np.argmax(np.max(np.abs(d), axis=1)))
        witness_defect = float(np.max(np.abs(d[best])))
        if witness_defect <= 1e-3:
            tr.update(1.0, grid[best])
    return cfg.points + len(grid), tr


def _check_harmonic_components(cfg: RunConfig):
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "harmonic-components", i)
        params = cfg.soliton_params or _sample_params(cfg, "harmonic-components", i)
        xi = soliton.soliton_field(params)
        err = max(abs(soliton.scalar_laplacian(f, p)) for f in xi.components)
        tr.update(err, p)
    return cfg.points, tr


def _polynomial_field(coeffs: np.ndarray):
    """Frame field whose components are quadratic polynomials in (s, t)."""

    def make(c):
        return lambda x, y, s, t: (
            c[0] + c[1] * s + c[2] * t + c[3] * s * s + c[4] * s * t + c[5] * t * t
        )

    return frame_field(*(make(coeffs[k]) for k in range(4)))


def _check_theorem3(cfg: RunConfig):
    weights = np.array([1.0, 1.0, 2.0, 2.0])
    tr = _Tracker()
    for i in range(cfg.points):
        p = _sample_point(cfg, "theorem3", i)
        coeffs = _rng(cfg.seed, "theorem3/fields", i).uniform(-1.0, 1.0, (4, 6))
        X = _polynomial_field(coeffs)
        lap = harmonic.rough_laplacian(X, p)
        eqs = harmonic.harmonic_section_equations(X, p)
        tr.update(np.max(np.abs(lap - weights * eqs)), p)
    return cfg.points, tr


def _perturbed_power_field(slot: int, exponent: float):
    zero = lambda x, y, s, t: 0.0
    comps = [zero, zero, zero, zero]
    comps[slot - 1] = lambda x, y, s, t: t**exponent
    return coordinate_field(*comps)


def _check_corollary(cfg: RunConfig):
    tr = _Tracker()
    pts = [_sample_point(cfg, "corollary", i) for i in range(cfg.points)]
    count = 0
    for fam_index in (1, 2, 3, 4):
        for i, p in enumerate(pts):
            c1, c2 = _rng(cfg.seed, f"corollary/c{fam_index}", i).uniform(-3.0, 3.0, 2)
            X = corollary_field(CorollaryFamily(fam_index, c1, c2))
            tr.update(np.max(np.abs(harmonic.harmonic_section_residual(X, p))), p)
            count += 1

    # the power-law exponents are forced: a shifted exponent must leave a
    # visible residual somewhere
    for slot in (3, 4):
        for exponent in (harmonic.EXPONENT_PLUS, harmonic.EXPONENT_MINUS):
            X = _perturbed_power_field(slot, exponent + 0.01)
            worst = 0.0
            worst_p = pts[0]
            for p in pts:
                r = float(np.max(np.abs(harmonic.harmonic_section_residual(X, p))))
                if r > worst:
                    worst, worst_p = r, p
                count += 1
            if worst <= 1e-3:
                tr.update(1.0, worst_p)
    return count, tr


def _check_harmonic_map_witnesses(cfg: RunConfig):
    tr = _Tracker()
    pts = [_sample_point(cfg, "harmonic-map-witnesses", i) for i in range(cfg.points)]
    count = 0

    zero_field = constant_frame_field([0.0, 0.0, 0.0, 0.0])
    for p in pts[: min(10, len(pts))]:
        tv = harmonic.harmonic_map_residual(zero_field, p)
        tr.update(tv.max_component(), p)
        count += 1

    witnesses = [corollary_field(CorollaryFamily(k, 1.0, 0.0)) for k in (1, 2, 3, 4)]
    witnesses += [corollary_field(CorollaryFamily(k, 0.0, 1.0)) for k in (1, 2, 3, 4)]
    witnesses += [constant_frame_field(np.eye(4)[k]) for k in range(4)]
    for X in witnesses:
        best = 0.0
        best_p = pts[0]
        for p in pts:
            mag = harmonic.harmonic_map_residual(X, p).max_component()
            if mag > best:
                best, best_p = mag, p
            count += 1
        if best <= 1e-3:  # this field would wrongly pass as a harmonic map
            tr.update(1.0, best_p)

    # expanded quadratic identity for the last tension component
    for i, p in enumerate(pts):
        comp = _rng(cfg.seed, "harmonic-map-witnesses/const", i).uniform(-2.0, 2.0, 4)
        X = constant_frame_field(comp)
        t4 = harmonic.horizontal_tension(X, p)[3]
        expected = 2 * comp[0] ** 2 + 2 * comp[1] ** 2 + 8 * comp[2] ** 2 + 8 * comp[3] ** 2
        tr.update(abs(t4 - expected), p)
        count += 1
    return count, tr


def _check_coercivity(cfg: RunConfig):
    tr = _Tracker()
    count = 0
    for i in range(cfg.points):
        p = _sample_point(cfg, "coercivity", i)
        vs = _rng(cfg.seed, "coercivity/vectors", i).uniform(-3.0, 3.0, (10, 4))
        for row in vs:
            v = FrameVector(row)
            got = coercivity_check(p, v, soliton.SOLITON_LAMBDA)
            expected = 6.0 * (row[0] ** 2 + row[1] ** 2)
            tr.update(abs(got - expected), p)
            count += 1
    return count, tr


_REGISTRY: dict[str, Callable] = {
    "lemma1": _check_lemma1,
    "lemma2": _check_lemma2,
    "riemc": _check_riemc,
    "theorem1": _check_theorem1,
    "nongradient": _check_nongradient,
    "harmonic-components": _check_harmonic_components,
    "theorem3": _check_theorem3,
    "corollary": _check_corollary,
    "harmonic-map-witnesses": _check_harmonic_map_witnesses,
    "coercivity": _check_coercivity,
}

CHECK_NAMES = tuple(sorted(_REGISTRY))


def run_suite(name: str, cfg: RunConfig) -> CheckReport:
    """Run one registered check and report the worst residual found."""
    if name not in _REGISTRY:
        raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    cfg.validate()
    start = time.perf_counter()
    sampled, tracker = _REGISTRY[name](cfg)
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return CheckReport(
        check_name=name,
        points_sampled=sampled,
        max_residual=tracker.max_residual,
        threshold=cfg.tol,
        passed=tracker.max_residual < cfg.tol,
        witness_point=tracker.witness,
        elapsed_ms=elapsed_ms,
    )


def run_all(cfg: RunConfig) -> list[CheckReport]:
    """Run every registered check in name order."""
    cfg.validate()
    return [run_suite(name, cfg) for name in CHECK_NAMES]
