"""Profile functions of surfaces of revolution in standard position.

A surface of revolution in standard position is the locus x^2 + y^2 = F(z),
|z| < q, with F strictly positive on the open interval (-q, q).  This module
holds the three profile representations (exact quadratic, general polynomial,
sampled data), their evaluation and differentiation, the text mini-language
parser, and the slab infimum phi(delta) = inf sqrt(F) over |z| <= q - delta.

All profiles are immutable after construction and safe to share across
threads or processes.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import InvalidDomain, NonPositiveProfile, OutOfDomain, ParseError

__all__ = [
    "QuadricParams",
    "Profile",
    "make_quadric_profile",
    "make_polynomial_profile",
    "make_sampled_profile",
    "parse_profile",
    "infimum_radius",
    "preset_lines",
    "SCAN_POINTS",
]

SCAN_POINTS = 4097

# Construction-time positivity scans stay this factor inside (-q, q).
_EDGE = 1.0 - 2.0 ** -20

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadricParams:
    """Coefficients (a, b, c) of a quadric generator F(z) = a z^2 + b z + c."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Profile:
    """A profile function F on (-q, q).

    kind is one of "quadratic", "polynomial", "sampled".  Quadratic and
    polynomial kinds carry ascending coefficients in ``coeffs``; the sampled
    kind carries the data table and a monotone piecewise-cubic interpolant.
    ``h`` is the step used for numeric differentiation of sampled profiles.
    """

    kind: str
    q: float
    h: float
    coeffs: np.ndarray | None = field(default=None, repr=False)
    sample_z: np.ndarray | None = field(default=None, repr=False)
    sample_f: np.ndarray | None = field(default=None, repr=False)
    _interp: object = field(default=None, repr=False, compare=False)

    def eval(self, z):
        """Value F(z).  Accepts scalars or arrays of z with |z| < q.

        Raises OutOfDomain outside the open interval and NonPositiveProfile
        if the value comes out <= 0 (re-checked on every call).
        """
        arr = np.asarray(z, dtype=float)
        if np.any(np.abs(arr) >= self.q):
            raise OutOfDomain(f"evaluation needs |z| < q = {self.q!r}")
        if self.kind == "sampled":
            val = self._interp(arr)
        else:
            val = _horner(self.coeffs, arr)
        if np.any(val <= 0.0):
            raise NonPositiveProfile("profile value <= 0 inside |z| < q")
        if arr.ndim == 0:
            return float(val)
        return val

    def derivative(self, z):
        """Derivative F'(z).

        Exact for quadratic and polynomial kinds.  The sampled kind returns
        the central difference of the interpolant with step
        min(h, (q - |z|) / 2) so the stencil never leaves the domain.
        """
        arr = np.asarray(z, dtype=float)
        if np.any(np.abs(arr) >= self.q):
            raise OutOfDomain(f"evaluation needs |z| < q = {self.q!r}")
        if self.kind != "sampled":
            n = len(self.coeffs)
            if n < 2:
                der = np.zeros_like(arr)
            else:
                dc = self.coeffs[1:] * np.arange(1, n)
                der = _horner(dc, arr)
        else:
            step = np.minimum(self.h, 0.5 * (self.q - np.abs(arr)))
            der = (self._interp(arr + step) - self._interp(arr - step)) / (2.0 * step)
        if arr.ndim == 0:
            return float(der)
        return der


def _horner(coeffs, z):
    acc = np.full_like(np.asarray(z, dtype=float), coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def _default_h(q, h):
    if h is None:
        return 1e-5 * q
    if h <= 0.0:
        raise InvalidDomain("derivative step h must be positive")
    return float(h)


def _check_q(q):
    if not (np.isfinite(q) and q > 0.0):
        raise InvalidDomain(f"q must be a positive finite real, got {q!r}")


def _scan_positive(profile):
    lim = profile.q * _EDGE
    profile.eval(np.linspace(-lim, lim, SCAN_POINTS))


def make_quadric_profile(params, q, h=None):
    """Profile F(z) = a z^2 + b z + c on (-q, q), positivity-scanned."""
    _check_q(q)
    coeffs = np.array([params.c, params.b, params.a], dtype=float)
    prof = Profile(kind="quadratic", q=float(q), h=_default_h(q, h), coeffs=coeffs)
    _scan_positive(prof)
    return prof


def make_polynomial_profile(coeffs, q, h=None):
    """Profile with ascending coefficients c0..cn, evaluated by Horner."""
    _check_q(q)
    arr = np.asarray(coeffs, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or not np.all(np.isfinite(arr)):
        raise InvalidDomain("polynomial coefficients must be a non-empty finite 1-d sequence")
    prof = Profile(kind="polynomial", q=float(q), h=_default_h(q, h), coeffs=arr.copy())
    _scan_positive(prof)
    return prof


def make_sampled_profile(z, f, q=None, h=None):
    """Profile interpolating a (z, F) table.

    Abscissae must be strictly increasing and ordinates strictly positive.
    When q is omitted it is inferred as min(-z[0], z[-1]), the largest
    half-width the table can serve; an explicit q must not exceed that.
    Evaluation uses shape-preserving piecewise-cubic interpolation with
    finite-difference endpoint slopes.
    """
    zs = np.asarray(z, dtype=float)
    fs = np.asarray(f, dtype=float)
    if zs.ndim != 1 or zs.shape != fs.shape or zs.size < 4:
        raise InvalidDomain("need matching 1-d arrays with at least 4 samples")
    if not (np.all(np.isfinite(zs)) and np.all(np.isfinite(fs))):
        raise InvalidDomain("samples must be finite")
    if np.any(np.diff(zs) <= 0.0):
        raise InvalidDomain("sample abscissae must be strictly increasing")
    if np.any(fs <= 0.0):
        raise NonPositiveProfile("sample ordinates must be strictly positive")
    if not (zs[0] < 0.0 < zs[-1]):
        raise InvalidDomain("samples must straddle z = 0")
    span = min(-zs[0], zs[-1])
    if q is None:
        q = span
    else:
        _check_q(q)
        if q > span:
            raise InvalidDomain(f"samples span only (-{span!r}, {span!r}), cannot serve q = {q!r}")
    interp = PchipInterpolator(zs, fs, extrapolate=False)
    prof = Profile(
        kind="sampled",
        q=float(q),
        h=_default_h(q, h),
        sample_z=zs.copy(),
        sample_f=fs.copy(),
        _interp=interp,
    )
    _scan_positive(prof)
    return prof


def infimum_radius(profile, delta):
    """phi(delta): the infimum of sqrt(F) over the slab |z| <= q - delta.

    A 4097-point uniform scan locates the minimal grid cell; golden-section
    search refines the minimum inside it.
    """
    if not (0.0 < delta < profile.q):
        raise InvalidDomain(f"need 0 < delta < q, got delta = {delta!r}")
    lim = profile.q - delta
    grid = np.linspace(-lim, lim, SCAN_POINTS)
    vals = profile.eval(grid)
    i = int(np.argmin(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, SCAN_POINTS - 1)]
    fmin = _golden_min(profile.eval, lo, hi)
    return math.sqrt(min(fmin, float(vals[i])))


def _golden_min(f, a, b, iters=80):
    """Golden-section minimum of f on [a, b]; returns the best value found."""
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return f1 if f1 <= f2 else f2


# --- profile spec mini-language ---------------------------------------------
#
#   quadric:a,b,c,q        exact quadratic generator
#   poly:c0,c1,...,cn;q    ascending polynomial coefficients
#   samples:<path>         CSV file with header z,F
#   sphere                 = quadric:-1,0,1,1
#   cylinder:r,q           = quadric:0,0,r^2,q
#   hyperboloid:r,q        = quadric:1,0,r^2,q
#   paraboloid:c,q         = quadric:0,1,c,q   (requires c > q)

_PRESET_TABLE = (
    ("sphere", "quadric:-1,0,1,1"),
    ("cylinder:r,q", "quadric:0,0,r^2,q"),
    ("hyperboloid:r,q", "quadric:1,0,r^2,q"),
    ("paraboloid:c,q", "quadric:0,1,c,q  (requires c > q)"),
)


def preset_lines():
    """Text lines describing the built-in presets, one per preset."""
    width = max(len(name) for name, _ in _PRESET_TABLE)
    return [f"{name:<{width}}  {expansion}" for name, expansion in _PRESET_TABLE]


def parse_profile(text):
    """Parse a profile spec string into a Profile.

    Raises ParseError with the offending position on malformed input.
    """
    if not isinstance(text, str):
        raise ParseError("profile spec must be a string")
    s = text.strip()
    if not s:
        raise ParseError("empty profile spec", 0)
    head, sep, rest = s.partition(":")
    head = head.strip()
    body_at = len(head) + 1 if sep else len(s)

    if head == "sphere":
        if sep:
            raise ParseError("preset 'sphere' takes no arguments", body_at)
        return make_quadric_profile(QuadricParams(-1.0, 0.0, 1.0), 1.0)

    if head == "quadric":
        a, b, c, q = _parse_floats(rest, body_at, expect=4)
        return make_quadric_profile(QuadricParams(a, b, c), q)

    if head == "poly":
        coeff_text, semi, q_text = rest.partition(";")
        if not semi:
            raise ParseError("poly spec needs ';q' after the coefficients", body_at + len(rest))
        coeffs = _parse_floats(coeff_text, body_at)
        (q,) = _parse_floats(q_text, body_at + len(coeff_text) + 1, expect=1)
        return make_polynomial_profile(coeffs, q)

    if head == "samples":
        path = rest.strip()
        if not path:
            raise ParseError("samples spec needs a file path", body_at)
        return _read_sample_csv(path)

    if head == "cylinder":
        r, q = _parse_floats(rest, body_at, expect=2)
        return make_quadric_profile(QuadricParams(0.0, 0.0, r * r), q)

    if head == "hyperboloid":
        r, q = _parse_floats(rest, body_at, expect=2)
        return make_quadric_profile(QuadricParams(1.0, 0.0, r * r), q)

    if head == "paraboloid":
        c, q = _parse_floats(rest, body_at, expect=2)
        if not c > q:
            raise NonPositiveProfile(f"paraboloid preset requires c > q, got c = {c!r}, q = {q!r}")
        return make_quadric_profile(QuadricParams(0.0, 1.0, c), q)

    raise ParseError(f"unknown profile kind {head!r}", 0)


def _parse_floats(text, offset, expect=None):
    tokens = text.split(",")
    values = []
    pos = offset
    for tok in tokens:
        stripped = tok.strip()
        if not stripped:
            raise ParseError("missing number", pos)
        try:
            values.append(float(stripped))
        except ValueError:
            raise ParseError(f"bad number {stripped!r}", pos + tok.index(stripped[0])) from None
        pos += len(tok) + 1
    if expect is not None and len(values) != expect:
        raise ParseError(f"expected {expect} comma-separated numbers, got {len(values)}", offset)
    return values


def _read_sample_csv(path):
    try:
        handle = open(path, newline="")
    except OSError as exc:
        raise ParseError(f"cannot read sample file: {exc}") from exc
    with handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty sample file") from None
        if [col.strip() for col in header] != ["z", "F"]:
            raise ParseError(f"{path}: sample CSV must start with header 'z,F'")
        zs, fs = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ParseError(f"{path}:{lineno}: expected two columns")
            try:
                zs.append(float(row[0]))
                fs.append(float(row[1]))
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad number") from None
    return make_sampled_profile(np.array(zs), np.array(fs))
