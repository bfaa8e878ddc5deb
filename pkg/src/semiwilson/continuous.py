"""Sampled floating-point checks of the continuous solution families (mu = 1).

Four groups are covered: the ax+b group with sigma(a, b) = (a, 2b), (C, +)
with sigma(z) = 2z, the Heisenberg group with sigma(x, y, z) = (x, 2y, 2z),
and the multiplicative interval (-1, 1) with sigma = id.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

DEFAULT_TOLERANCE = 1e-9
WIDE_TOLERANCE = 1e-7
AUTOMORPHISM_TOLERANCE = 1e-12
PERTURBATION = 1e-3

INTERVAL_FORMS = ("one", "abs", "signed")


class PreconditionViolated(ValueError):
    pass


@dataclass
class SampledCheck:
    name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    seed: int
    params: dict = field(default_factory=dict)
    perturbed: bool = False
    automorphism_max_error: float = 0.0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def _tolerance(tolerance: float | None, *params: complex) -> float:
    if tolerance is not None:
        return tolerance
    if any(abs(p) > 5 for p in params):
        return WIDE_TOLERANCE
    return DEFAULT_TOLERANCE


def _run(
    name: str,
    pairs: list,
    mul: Callable,
    sigma: Callable,
    f: Callable,
    g: Callable,
    close: Callable,
    tol: float,
    seed: int,
    params: dict,
    perturbed: bool,
) -> SampledCheck:
    worst = 0.0
    auto_err = 0.0
    for x, y in pairs:
        r = f(mul(x, y)) + f(mul(sigma(y), x)) - 2 * f(x) * g(y)
        worst = max(worst, abs(r))
        auto_err = max(auto_err, close(sigma(mul(x, y)), mul(sigma(x), sigma(y))))
    notes = ["mu = 1, so mu(x sigma(x)) = 1 holds identically"]
    if auto_err >= AUTOMORPHISM_TOLERANCE:
        raise AssertionError(f"{name}: sigma fails to be multiplicative at a sample ({auto_err:.3g})")
    return SampledCheck(name, len(pairs), worst, tol, worst < tol, seed, params, perturbed, auto_err, notes)


def _fmt(z: complex) -> list[float]:
    return [z.real, z.imag]


def check_axb(alpha: complex, lam: complex, samples: int = 1000, seed: int = 20240101,
              tolerance: float | None = None, perturb: bool = False) -> SampledCheck:
    if alpha == 0:
        raise PreconditionViolated("alpha must be nonzero")
    rng = np.random.default_rng(seed)
    a = np.exp(rng.uniform(-2, 2, size=(samples, 2)))
    b = rng.uniform(-3, 3, size=(samples, 2))
    pairs = [((a[i, 0], b[i, 0]), (a[i, 1], b[i, 1])) for i in range(samples)]

    def mul(p, q):
        return (p[0] * q[0], p[0] * q[1] + p[1])

    def power(p):
        return cmath.exp(lam * math.log(p[0]))

    shift = PERTURBATION if perturb else 0.0
    return _run(
        "axb", pairs, mul, lambda p: (p[0], 2 * p[1]),
        lambda p: alpha * power(p), lambda p: power(p) + shift,
        lambda p, q: max(abs(p[0] - q[0]), abs(p[1] - q[1])),
        _tolerance(tolerance, alpha, lam), seed,
        {"alpha": _fmt(alpha), "lambda": _fmt(lam)}, perturb,
    )


def check_complex_shift(alpha: complex, a: complex, samples: int = 1000, seed: int = 20240101,
                        tolerance: float | None = None, perturb: bool = False) -> SampledCheck:
    """With ``perturb`` the second exponential is dropped from g."""
    if alpha == 0:
        raise PreconditionViolated("alpha must be nonzero")
    rng = np.random.default_rng(seed)
    re = rng.uniform(-2, 2, size=(samples, 2))
    im = rng.uniform(-2, 2, size=(samples, 2))
    pairs = [(complex(re[i, 0], im[i, 0]), complex(re[i, 1], im[i, 1])) for i in range(samples)]

    def g(z):
        if perturb:
            return cmath.exp(a * z)
        return (cmath.exp(a * z) + cmath.exp(2 * a * z)) / 2

    check = _run(
        "complex", pairs, lambda z, w: z + w, lambda z: 2 * z,
        lambda z: alpha * cmath.exp(a * z), g, lambda p, q: abs(p - q),
        _tolerance(tolerance, alpha, a), seed,
        {"alpha": _fmt(alpha), "a": _fmt(a)}, perturb,
    )
    check.notes.append("odd continuous additive maps vanish here, so no additive part enters")
    return check


def heisenberg_mul(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2] + p[0] * q[1])


def check_heisenberg(alpha: complex, a: complex, b: complex, samples: int = 1000, seed: int = 20240101,
                     tolerance: float | None = None, perturb: bool = False) -> SampledCheck:
    """Points are (x, y, z) for the matrix [[1, x, z], [0, 1, y], [0, 0, 1]]."""
    if alpha == 0:
        raise PreconditionViolated("alpha must be nonzero")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-2, 2, size=(samples, 2, 3))
    pairs = [(tuple(pts[i, 0]), tuple(pts[i, 1])) for i in range(samples)]

    def chi(p, scale=1):
        return cmath.exp(a * p[0] + scale * b * p[1])

    shift = PERTURBATION if perturb else 0.0
    check = _run(
        "heisenberg", pairs, heisenberg_mul, lambda p: (p[0], 2 * p[1], 2 * p[2]),
        lambda p: alpha * chi(p), lambda p: (chi(p) + chi(p, 2)) / 2 + shift,
        lambda p, q: max(abs(u - v) for u, v in zip(p, q)),
        _tolerance(tolerance, alpha, a, b), seed,
        {"alpha": _fmt(alpha), "a": _fmt(a), "b": _fmt(b)}, perturb,
    )
    if b != 0:
        # chi o sigma^2 = exp(ax + 4by) differs from chi, so chi* cannot join f
        p = pairs[0][0]
        diff = abs(chi(p, 4) - chi(p))
        check.notes.append(f"chi o sigma^2 differs from chi at a sample point by {diff:.3g}")
    return check


def sigma_squared_gap(a: complex, b: complex, point: tuple[float, float, float]) -> float:
    x, y, _ = point
    return abs(cmath.exp(a * x + 4 * b * y) - cmath.exp(a * x + b * y))


def interval_character(form: str, power: complex) -> Callable[[float], complex]:
    if form == "one":
        return lambda t: 1.0
    if form not in INTERVAL_FORMS:
        raise ValueError(f"unknown form {form!r}")
    if power.real <= 0:
        raise PreconditionViolated("the exponent needs a positive real part")

    def chi(t: float) -> complex:
        if t == 0:
            return 0.0
        v = cmath.exp(power * math.log(abs(t)))
        return v if form == "abs" or t > 0 else -v

    return chi


def check_interval(c: complex, form: str = "abs", power: complex = 1.5, samples: int = 1000,
                   seed: int = 20240101, tolerance: float | None = None, perturb: bool = False) -> SampledCheck:
    if c == 0:
        raise PreconditionViolated("c must be nonzero")
    chi = interval_character(form, power)
    rng = np.random.default_rng(seed)
    t = rng.uniform(-1, 1, size=(samples, 2))
    t[0, 0] = 0.0
    if samples > 1:
        t[1, 1] = 0.0
    pairs = [(float(t[i, 0]), float(t[i, 1])) for i in range(samples)]
    shift = PERTURBATION if perturb else 0.0
    params = {"c": _fmt(c), "form": form, "power": _fmt(complex(power))}
    return _run(
        "interval", pairs, lambda x, y: x * y, lambda x: x,
        lambda x: c * chi(x), lambda x: chi(x) + shift, lambda p, q: abs(p - q),
        _tolerance(tolerance, c, power), seed, params, perturb,
    )


def run_examples(which: str = "all", samples: int = 1000, seed: int = 20240101,
                 tolerance: float | None = None, perturb: bool = False, **params) -> list[SampledCheck]:
    """The four checks with the parameter choices used as defaults by the CLI."""
    out = []
    if which in ("axb", "all"):
        out.append(check_axb(params.get("alpha", 2), params.get("lam", 1 + 1j), samples, seed, tolerance, perturb))
    if which in ("complex", "all"):
        out.append(check_complex_shift(params.get("alpha", 3), params.get("a", 0.5 - 0.25j), samples, seed, tolerance, perturb))
    if which in ("heisenberg", "all"):
        out.append(check_heisenberg(params.get("alpha", 1), params.get("a", 0.3), params.get("b", -0.7j), samples, seed, tolerance, perturb))
    if which in ("interval", "all"):
        out.append(check_interval(params.get("c", 2), params.get("form", "abs"), params.get("power", 1.5), samples, seed, tolerance, perturb))
    if not out:
        raise ValueError(f"unknown example {which!r}")
    return out
