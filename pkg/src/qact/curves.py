"""Hyperelliptic models Y^2 = X (X^q - 1)(X^q - t)(X^(2q) - t), q = 2^(n-2).

These are the hyperelliptic members of the one-dimensional family with
signature (0; 2^(n-1), 2, 4, 4); the quaternion action is generated by
x: (X, Y) -> (xi^2 X, xi Y) and y: (X, Y) -> (lam/X, eta t Y / X^(2^(n-1)+1))
with xi = exp(2 pi i/2^(n-1)), eta^2 = -lam, lam^q = t.  At t = -1 the model
collapses to Y^2 = X(X^(2^n) - 1).

The first generator is verified exactly (a cyclotomic polynomial identity);
everything involving the radicals lam, eta is verified numerically at sample
points, as is the group structure of the two maps acting on the curve.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclotomic, CycloPoly


class DegenerateParameter(ValueError):
    """t in {0, 1} does not give a curve in the family."""


def _poly_x(n_conductor: int, nvars: int = 1) -> CycloPoly:
    return CycloPoly.make(
        nvars, {tuple([1] + [0] * (nvars - 1)): Cyclotomic.one(n_conductor)}
    )


def model_polynomial(n: int, t: Cyclotomic | None, conductor: int = 4) -> CycloPoly:
    """f as an exact polynomial: in X alone (t exact) or in (X, t) (t None)."""
    q = 2 ** (n - 2)
    if t is None:
        nv = 2
        one = CycloPoly.constant(nv, Cyclotomic.one(conductor))
        X = CycloPoly.variable(nv, 0, conductor)
        T = CycloPoly.variable(nv, 1, conductor)
    else:
        nv = 1
        one = CycloPoly.constant(nv, Cyclotomic.one(conductor))
        X = CycloPoly.variable(nv, 0, conductor)
        T = CycloPoly.constant(nv, t)
    Xq = _monomial_power(X, q)
    X2q = _monomial_power(X, 2 * q)
    return X * (Xq - one) * (Xq - T) * (X2q - T)


def _monomial_power(X: CycloPoly, k: int) -> CycloPoly:
    out = X
    for _ in range(k - 1):
        out = out * X
    return out


@dataclass
class HyperellipticModel:
    n: int
    t: complex | Cyclotomic | None
    f_exact: CycloPoly | None
    f_coeffs: list[complex] | None     # degree-indexed, numeric mode
    xi: complex
    lam: complex | None
    eta: complex | None

    @property
    def degree(self) -> int:
        return 2**self.n + 1

    @property
    def genus(self) -> int:
        return 2 ** (self.n - 1)

    def f_at(self, x: complex) -> complex:
        if self.f_coeffs is not None:
            total = 0j
            for c in reversed(self.f_coeffs):
                total = total * x + c
            return total
        return self.f_exact.eval([x])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": None if self.t is None else _t_json(self.t),
            "degree": self.degree,
            "genus": self.genus,
        }


def _t_json(t):
    if isinstance(t, Cyclotomic):
        return t.to_json()
    return [t.real, t.imag]


def build_model(n: int, t) -> HyperellipticModel:
    """Build the model; t may be an exact rational/Gaussian-rational, a complex
    number, or None for the symbolic family."""
    if n < 3:
        raise ValueError("need n >= 3")
    if 2 ** (n - 1) > 64:
        raise ValueError("n out of supported range")
    exact_t: Cyclotomic | None = None
    numeric_t: complex | None = None
    if t is None:
        pass
    elif isinstance(t, Cyclotomic):
        exact_t = t
    elif isinstance(t, (int, Fraction)):
        exact_t = Cyclotomic.from_rational(t, 4)
    elif isinstance(t, complex) or isinstance(t, float):
        numeric_t = complex(t)
    else:
        raise TypeError(f"unsupported parameter type {type(t)}")
    if exact_t is not None and (exact_t == 0 or exact_t == 1):
        raise DegenerateParameter("t must avoid 0 and 1")
    if numeric_t is not None and (abs(numeric_t) < 1e-12 or abs(numeric_t - 1) < 1e-12):
        raise DegenerateParameter("t must avoid 0 and 1")

    q = 2 ** (n - 2)
    xi = cmath.exp(2j * cmath.pi / 2 ** (n - 1))
    lam = eta = None
    f_exact = None
    f_coeffs = None
    if numeric_t is not None:
        lam = cmath.exp(cmath.log(numeric_t) / q)
        eta = cmath.sqrt(-lam)
        f_coeffs = _numeric_coeffs(n, numeric_t)
    else:
        f_exact = model_polynomial(n, exact_t)
        if exact_t is not None:
            tv = exact_t.embed()
            lam = cmath.exp(cmath.log(tv) / q)
            eta = cmath.sqrt(-lam)
    return HyperellipticModel(n=n, t=t if t is None or exact_t is None else exact_t,
                              f_exact=f_exact, f_coeffs=f_coeffs, xi=xi, lam=lam, eta=eta)


def _numeric_coeffs(n: int, t: complex) -> list[complex]:
    q = 2 ** (n - 2)
    # X (X^q - 1)(X^q - t)(X^(2q) - t), multiplied out degree-by-degree
    a = [0j] * (q + 1)
    a[0], a[q] = -1.0 + 0j, 1.0 + 0j
    b = [0j] * (q + 1)
    b[0], b[q] = -t, 1.0 + 0j
    c = [0j] * (2 * q + 1)
    c[0], c[2 * q] = -t, 1.0 + 0j
    ab = _mul_coeffs(a, b)
    abc = _mul_coeffs(ab, c)
    return [0j] + abc


def _mul_coeffs(a, b):
    out = [0j] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# ---------------------------------------------------------------------------
# exact identities
# ---------------------------------------------------------------------------


def t_minus_one_collapse(n: int) -> bool:
    """Exact identity: the t = -1 member equals Y^2 = X (X^(2^n) - 1)."""
    m = build_model(n, -1)
    q = 2**n
    expect = CycloPoly.make(
        1,
        {(q + 1,): Cyclotomic.one(4), (1,): -Cyclotomic.one(4)},
    )
    return (m.f_exact - expect).is_zero()


def rotation_identity_holds(n: int) -> bool:
    """Exact identity f(xi^2 X) = xi^2 f(X) over Q(zeta_(2^(n-1)))(t)."""
    conductor = max(4, 2 ** (n - 1))
    f = model_polynomial(n, None, conductor)
    zeta2 = Cyclotomic.zeta(conductor, 2 * (conductor // 2 ** (n - 1)))
    # substitute X -> xi^2 X: scale each term by xi^(2*degX)
    scaled = {}
    for e, cf in f.terms:
        scaled[e] = cf * (zeta2 ** e[0])
    lhs = CycloPoly.make(2, scaled)
    rhs = f * zeta2
    return (lhs - rhs).is_zero()


def squarefree_exact(model: HyperellipticModel) -> bool:
    """gcd(f, f') is constant, over Q(i) (exact t only)."""
    if model.f_exact is None or model.f_exact.nvars != 1:
        raise ValueError("exact squarefreeness needs an exact univariate model")
    f = _dense_from_poly(model.f_exact)
    df = [k * c for k, c in enumerate(f)][1:]
    g = _poly_gcd(f, df)
    return len(g) == 1


def _dense_from_poly(p: CycloPoly) -> list[Cyclotomic]:
    deg = max(e[0] for e, _ in p.terms)
    out = [Cyclotomic.zero(4) for _ in range(deg + 1)]
    for e, c in p.terms:
        out[e[0]] = c
    return out


def _poly_gcd(a: list[Cyclotomic], b: list[Cyclotomic]) -> list[Cyclotomic]:
    a, b = list(a), list(b)

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        a, b = b, trim(_poly_mod(a, b))
    lead = a[-1]
    return [c / lead for c in a]


def _poly_mod(a: list[Cyclotomic], b: list[Cyclotomic]) -> list[Cyclotomic]:
    a = list(a)
    while len(a) >= len(b) and any(not c.is_zero() for c in a):
        if a[-1].is_zero():
            a.pop()
            continue
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - factor * c
        a.pop()
    return a


# ---------------------------------------------------------------------------
# numeric verification of the automorphisms
# ---------------------------------------------------------------------------


def map_x(model: HyperellipticModel, p: tuple[complex, complex]) -> tuple[complex, complex]:
    X, Y = p
    return (model.xi**2 * X, model.xi * Y)


def map_y(model: HyperellipticModel, p: tuple[complex, complex]) -> tuple[complex, complex]:
    X, Y = p
    tv = model.t.embed() if isinstance(model.t, Cyclotomic) else complex(model.t)
    return (model.lam / X, model.eta * tv * Y / X ** (2 ** (model.n - 1) + 1))


def _on_curve_residual(model: HyperellipticModel, p) -> float:
    X, Y = p
    fx = model.f_at(X)
    return abs(Y * Y - fx) / (1.0 + abs(fx) + abs(Y) ** 2)


def _iterate(model, fn, p, k):
    for _ in range(k):
        p = fn(model, p)
    return p


def _pt_dist(p, q) -> float:
    """Relative distance; the Y coordinate can be huge near X = 0."""
    dx = abs(p[0] - q[0]) / (1.0 + abs(p[0]) + abs(q[0]))
    dy = abs(p[1] - q[1]) / (1.0 + abs(p[1]) + abs(q[1]))
    return max(dx, dy)


@dataclass
class AutomorphismReport:
    n: int
    samples: int
    max_on_curve_x: float
    max_on_curve_y: float
    max_rel_x_order: float       # x^(2^(n-1)) = id
    max_rel_y_square: float      # y^2 = x^(2^(n-2))
    max_rel_conjugation: float   # y x = x^(-1) y as point maps
    max_hyperelliptic: float     # y^2 x^(-2^(n-2)) acts as (X, -Y): identity check
    rotation_exact: bool

    @property
    def max_residual(self) -> float:
        return max(
            self.max_on_curve_x,
            self.max_on_curve_y,
            self.max_rel_x_order,
            self.max_rel_y_square,
            self.max_rel_conjugation,
            self.max_hyperelliptic,
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "max_on_curve_x": self.max_on_curve_x,
            "max_on_curve_y": self.max_on_curve_y,
            "max_rel_x_order": self.max_rel_x_order,
            "max_rel_y_square": self.max_rel_y_square,
            "max_rel_conjugation": self.max_rel_conjugation,
            "max_hyperelliptic": self.max_hyperelliptic,
            "rotation_exact": self.rotation_exact,
            "max_residual": self.max_residual,
        }


def random_curve_point(model: HyperellipticModel, rng) -> tuple[complex, complex]:
    # an annulus around |X| = 1 keeps X^(2^(n-1)+1) well conditioned
    r = rng.uniform(0.7, 1.4)
    theta = rng.uniform(0, 2 * cmath.pi)
    X = r * cmath.exp(1j * theta)
    Y = cmath.sqrt(model.f_at(X))
    return (X, Y)


def verify_automorphisms(model: HyperellipticModel, samples: int = 100, seed: int = 0,
                         check_rotation_exact: bool = True) -> AutomorphismReport:
    """Sample-point verification that the two printed maps are automorphisms
    of the curve satisfying the Q(2^n) relations, plus the exact rotation
    identity for the first map."""
    import random

    if model.lam is None:
        raise ValueError("numeric verification needs a numeric parameter")
    rng = random.Random(seed)
    n = model.n
    q = 2 ** (n - 2)
    r_ocx = r_ocy = r_xo = r_ys = r_cj = r_he = 0.0
    for _ in range(samples):
        p = random_curve_point(model, rng)
        px = map_x(model, p)
        py = map_y(model, p)
        r_ocx = max(r_ocx, _on_curve_residual(model, px))
        r_ocy = max(r_ocy, _on_curve_residual(model, py))
        r_xo = max(r_xo, _pt_dist(_iterate(model, map_x, p, 2 * q), p))
        yy = map_y(model, py)
        xq = _iterate(model, map_x, p, q)
        r_ys = max(r_ys, _pt_dist(yy, xq))
        # y x = x^(2^(n-1)-1) y
        lhs = map_y(model, map_x(model, p))
        rhs = _iterate(model, map_x, map_y(model, p), 2 * q - 1)
        r_cj = max(r_cj, _pt_dist(lhs, rhs))
        # the central involution y^2 = x^q acts as the hyperelliptic (X, -Y)
        r_he = max(r_he, _pt_dist(yy, (p[0], -p[1])))
    rot = rotation_identity_holds(n) if check_rotation_exact else True
    return AutomorphismReport(
        n=n,
        samples=samples,
        max_on_curve_x=r_ocx,
        max_on_curve_y=r_ocy,
        max_rel_x_order=r_xo,
        max_rel_y_square=r_ys,
        max_rel_conjugation=r_cj,
        max_hyperelliptic=r_he,
        rotation_exact=rot,
    )


def point_map_group_order(model: HyperellipticModel, seed: int = 1, tol: float = 1e-6,
                          budget: int = 512) -> int:
    """Order of <map_x, map_y> as permutations of the orbit of a generic point."""
    import random

    rng = random.Random(seed)
    base = random_curve_point(model, rng)

    def key(p):
        return (round(p[0].real, 6), round(p[0].imag, 6), round(p[1].real, 6), round(p[1].imag, 6))

    seen = {key(base): base}
    frontier = [base]
    while frontier:
        nxt = []
        for p in frontier:
            for fn in (map_x, map_y):
                q = fn(model, p)
                k = key(q)
                if k not in seen:
                    if len(seen) >= budget:
                        raise RuntimeError("point-map orbit exceeded budget")
                    seen[k] = q
                    nxt.append(q)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# branch configuration
# ---------------------------------------------------------------------------


@dataclass
class BranchConfiguration:
    n: int
    zero: list[complex]
    infinity: list[str]
    unit_roots: list[complex]
    t_roots: list[complex]
    sqrt_t_roots: list[complex]
    neg_sqrt_t_roots: list[complex]
    lambda_sign_identity: float    # | lam4^q + lam3^q |

    @property
    def count(self) -> int:
        return (
            len(self.zero)
            + len(self.infinity)
            + len(self.unit_roots)
            + len(self.t_roots)
            + len(self.sqrt_t_roots)
            + len(self.neg_sqrt_t_roots)
        )

    def orbit_sizes(self) -> list[int]:
        """Sizes of the five groups (the two sqrt families form one rotation orbit)."""
        return [
            len(self.zero),
            len(self.infinity),
            len(self.unit_roots),
            len(self.t_roots),
            len(self.sqrt_t_roots) + len(self.neg_sqrt_t_roots),
        ]

    def to_json(self) -> dict:
        enc = lambda zs: [[z.real, z.imag] for z in zs]
        return {
            "n": self.n,
            "count": self.count,
            "orbit_sizes": self.orbit_sizes(),
            "zero": enc(self.zero),
            "infinity": self.infinity,
            "unit_roots": enc(self.unit_roots),
            "t_roots": enc(self.t_roots),
            "sqrt_t_roots": enc(self.sqrt_t_roots),
            "neg_sqrt_t_roots": enc(self.neg_sqrt_t_roots),
            "lambda_sign_identity": self.lambda_sign_identity,
        }


def branch_configuration(n: int, t: complex) -> BranchConfiguration:
    """The 2^n + 2 branch values of the degree-two map, grouped by the factor
    of f they annihilate: 0, infinity, the q-th roots of 1, of t, and the
    2q-th roots of t split by the sign of X^q."""
    t = complex(t)
    if abs(t) < 1e-12 or abs(t - 1) < 1e-12:
        raise DegenerateParameter("t must avoid 0 and 1")
    q = 2 ** (n - 2)
    w = cmath.exp(2j * cmath.pi / q)
    lam2 = cmath.exp(cmath.log(t) / q)
    sq = cmath.sqrt(t)
    lam3 = cmath.exp(cmath.log(sq) / q)
    lam4 = cmath.exp((cmath.log(sq) + 1j * cmath.pi) / q)
    unit = [w**j for j in range(q)]
    troots = [lam2 * w**j for j in range(q)]
    plus = [lam3 * w**j for j in range(q)]
    minus = [lam4 * w**j for j in range(q)]
    ident = abs(lam4**q + lam3**q)
    return BranchConfiguration(
        n=n,
        zero=[0j],
        infinity=["inf"],
        unit_roots=unit,
        t_roots=troots,
        sqrt_t_roots=plus,
        neg_sqrt_t_roots=minus,
        lambda_sign_identity=ident,
    )
