"""Exact polynomial 4-potentials, gauge transformations and Abelian field tensors.

Polynomials live in Q[t, x, y, z] with :class:`fractions.Fraction`
coefficients; identities are compared as polynomials, so a check passes
only on exact equality. Indices are contravariant with signature (+,-,-,-):
d^0 = d/dt and d^k = -d/dx_k.
"""

from fractions import Fraction
from numbers import Rational

from .errors import InvalidInputError
from .report import CheckReport

VARS = ("t", "x", "y", "z")
MAX_DEGREE = 8


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    if isinstance(value, float):
        # shortest round-trip decimal, so 0.7 becomes 7/10
        return Fraction(repr(value))
    raise InvalidInputError(f"cannot use {value!r} as an exact rational")


class ScalarPoly:
    """Immutable polynomial: exponent tuple (e_t, e_x, e_y, e_z) -> Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 4 or min(exps) < 0:
                raise InvalidInputError(f"bad exponent tuple {exps}")
            c = to_fraction(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        if clean and max(sum(e) for e in clean) > MAX_DEGREE:
            raise InvalidInputError(f"polynomial degree exceeds {MAX_DEGREE}")
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name):
        exps = [0, 0, 0, 0]
        exps[VARS.index(name)] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def degree(self):
        return max((sum(e) for e in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, ScalarPoly):
            return other
        return ScalarPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return ScalarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ScalarPoly):
            c = to_fraction(other)
            return ScalarPoly({e: c * v for e, v in self._terms.items()})
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ScalarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ScalarPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, var):
        k = VARS.index(var) if isinstance(var, str) else int(var)
        out = {}
        for e, c in self._terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return ScalarPoly(out)

    def __call__(self, t=0, x=0, y=0, z=0):
        pt = (t, x, y, z)
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, p in zip(pt, e):
                term = term * v**p
            total = total + term
        return total

    def max_abs_coeff(self):
        return max((abs(c) for c in self._terms.values()), default=Fraction(0))

    def __eq__(self, other):
        if isinstance(other, ScalarPoly):
            return self._terms == other._terms
        try:
            return self == ScalarPoly.const(other)
        except InvalidInputError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"ScalarPoly({self})"

    def __str__(self):
        """Canonical text: terms in lexicographic exponent order, coefficients as p/q."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            factors = [f"{c.numerator}/{c.denominator}"]
            for name, p in zip(VARS, e):
                if p == 1:
                    factors.append(name)
                elif p > 1:
                    factors.append(f"{name}^{p}")
            parts.append("*".join(factors))
        return " + ".join(parts)


T, X, Y, Z = (ScalarPoly.var(v) for v in VARS)
ZERO = ScalarPoly()
COORDS = (T, X, Y, Z)


class PolyFourPotential:
    """Contravariant 4-potential A^mu with polynomial components."""

    __slots__ = ("comp",)

    def __init__(self, comp):
        comp = tuple(c if isinstance(c, ScalarPoly) else ScalarPoly.const(c) for c in comp)
        if len(comp) != 4:
            raise InvalidInputError("a 4-potential needs exactly 4 components")
        self.comp = comp

    def __getitem__(self, mu):
        return self.comp[mu]

    def __add__(self, other):
        return PolyFourPotential([a + b for a, b in zip(self.comp, other.comp)])

    def __sub__(self, other):
        return PolyFourPotential([a - b for a, b in zip(self.comp, other.comp)])

    def __eq__(self, other):
        return isinstance(other, PolyFourPotential) and self.comp == other.comp

    def __hash__(self):
        return hash(self.comp)

    def max_abs_coeff(self):
        return max(c.max_abs_coeff() for c in self.comp)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comp) + ")"

    __repr__ = __str__


class PolyFieldTensor:
    """Antisymmetric F^{mu nu} table of polynomials."""

    __slots__ = ("comp",)

    def __init__(self, comp):
        self.comp = tuple(tuple(row) for row in comp)
        if len(self.comp) != 4 or any(len(r) != 4 for r in self.comp):
            raise InvalidInputError("field tensor must be 4x4")

    def __getitem__(self, idx):
        mu, nu = idx
        return self.comp[mu][nu]

    def __sub__(self, other):
        return PolyFieldTensor([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)])

    def __add__(self, other):
        return PolyFieldTensor([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.comp, other.comp)])

    def __eq__(self, other):
        return isinstance(other, PolyFieldTensor) and self.comp == other.comp

    def __hash__(self):
        return hash(self.comp)

    def is_antisymmetric(self):
        return all(self.comp[m][n] == -self.comp[n][m] for m in range(4) for n in range(4))

    def is_zero(self):
        return all(c.is_zero() for row in self.comp for c in row)

    def max_abs_coeff(self):
        return max(c.max_abs_coeff() for row in self.comp for c in row)

    def __str__(self):
        rows = []
        for m in range(4):
            for n in range(m + 1, 4):
                rows.append(f"F^{m}{n} = {self.comp[m][n]}")
        return "; ".join(rows)


def upper_derivative(f, mu):
    """d^mu f with signature (+,-,-,-)."""
    d = f.diff(mu)
    return d if mu == 0 else -d


def grad4(f):
    return PolyFourPotential([upper_derivative(f, mu) for mu in range(4)])


def gauge_transform(a, lam):
    return a + grad4(lam)


def field_tensor_poly(a):
    """F^{mu nu} = d^mu A^nu - d^nu A^mu."""
    return PolyFieldTensor(
        [[upper_derivative(a[nu], mu) - upper_derivative(a[mu], nu) for nu in range(4)] for mu in range(4)]
    )


def minkowski_square(coords):
    t, *space = coords
    out = t * t
    for s in space:
        out = out - s * s
    return out


def covariant_potential(coupling, scale, planar=False):
    """scale * coupling * (2 (u.x) x^mu - x^2 u^mu) with u = (1, 0, 0, 0)."""
    coords = (T, X, Y, ZERO) if planar else COORDS
    x2 = minkowski_square(coords)
    k = to_fraction(coupling) * to_fraction(scale)
    comp = [(2 * T * coords[mu] - (x2 if mu == 0 else ZERO)) * k for mu in range(4)]
    return PolyFourPotential(comp)


def covariant_tensor(coupling, planar=False):
    """coupling * (u^mu x^nu - u^nu x^mu)."""
    coords = (T, X, Y, ZERO) if planar else COORDS
    u = (1, 0, 0, 0)
    k = to_fraction(coupling)
    return PolyFieldTensor(
        [[(coords[nu] * u[mu] - coords[mu] * u[nu]) * k for nu in range(4)] for mu in range(4)]
    )


EXAMPLES = ("ex1_raw", "ex1_gauge_fn", "ex1_covariant", "ex2_raw", "ex2_gauge_fn", "ex2_covariant")


def example_potential(which, coupling=1):
    """The named potential (or gauge function) with its coupling substituted.

    ex1_*: uniformly charged sphere, coupling lambda.
    ex2_*: planar uniform magnetic field, coupling rho; the planar covariant
    form uses x^mu = (t, x, y, 0).
    """
    c = to_fraction(coupling)
    r2 = X * X + Y * Y + Z * Z
    if which == "ex1_raw":
        return PolyFourPotential([r2 * (c / 2), 0, 0, 0])
    if which == "ex1_gauge_fn":
        return (T * r2 - T**3 * Fraction(1, 3)) * (-c / 4)
    if which == "ex1_covariant":
        return covariant_potential(c, Fraction(1, 4))
    if which == "ex2_raw":
        return PolyFourPotential([0, Y * c, -X * c, 0])
    if which == "ex2_gauge_fn":
        return (T * X * X + T * Y * Y) * (-c / 4) - T**3 * (c / 12)
    if which == "ex2_covariant":
        return covariant_potential(c, Fraction(1, 2), planar=True)
    raise InvalidInputError(f"unknown example selector {which!r}; expected one of {EXAMPLES}")


def _poly_residual(a, b):
    return float((a - b).max_abs_coeff())


def gauge_report(example, coupling=1):
    """Gauge-invariance and covariant-form checks for one worked example."""
    c = to_fraction(coupling)
    rep = CheckReport(f"gauge example {example} (coupling {c})")
    if example in (1, "1"):
        raw = example_potential("ex1_raw", c)
        moved = gauge_transform(raw, example_potential("ex1_gauge_fn", c))
        expected = PolyFourPotential([(X * X + Y * Y + Z * Z + T * T) * (c / 4), T * X * (c / 2), T * Y * (c / 2), T * Z * (c / 2)])
        cov = example_potential("ex1_covariant", c)
        f_raw, f_moved, f_cov = (field_tensor_poly(a) for a in (raw, moved, cov))
        rep.check("F(ex1_raw) == F(ex1_transformed)", _poly_residual(f_raw, f_moved), f_raw == f_moved)
        rep.check("ex1_transformed == lambda(r^2 + t^2, 2 t r)/4", _poly_residual(moved, expected), moved == expected)
        rep.check("ex1_covariant == ex1_transformed", _poly_residual(cov, moved), cov == moved)
        target = covariant_tensor(c)
        rep.check("F(ex1_transformed) == lambda(u^mu x^nu - u^nu x^mu)", _poly_residual(f_moved, target), f_moved == target)
        rep.check("F(ex1_covariant) == F(ex1_transformed)", _poly_residual(f_cov, f_moved), f_cov == f_moved)
        for name, f in (("F(ex1_raw)", f_raw), ("F(ex1_transformed)", f_moved)):
            rep.check(f"{name} antisymmetric", 0.0 if f.is_antisymmetric() else 1.0, f.is_antisymmetric())
    elif example in (2, "2"):
        raw = example_potential("ex2_raw", c)
        moved = gauge_transform(raw, example_potential("ex2_gauge_fn", c))
        expected = PolyFourPotential([(X * X + Y * Y + T * T) * (-c / 4), Y * c + T * X * (c / 2), -X * c + T * Y * (c / 2), 0])
        cov = example_potential("ex2_covariant", c)
        f_raw, f_moved, f_cov = (field_tensor_poly(a) for a in (raw, moved, cov))
        rep.check("F(ex2_raw) == F(ex2_transformed)", _poly_residual(f_raw, f_moved), f_raw == f_moved)
        rep.check("ex2_transformed == rho(-(x^2+y^2+t^2)/4, y + tx/2, -x + ty/2)", _poly_residual(moved, expected), moved == expected)
        magnetic = [[ZERO] * 4 for _ in range(4)]
        magnetic[1][2] = ScalarPoly.const(2 * c)
        magnetic[2][1] = ScalarPoly.const(-2 * c)
        magnetic = PolyFieldTensor(magnetic)
        rep.check("F(ex2_raw): F^12 = 2 rho, all others 0", _poly_residual(f_raw, magnetic), f_raw == magnetic)
        for name, f in (("F(ex2_raw)", f_raw), ("F(ex2_transformed)", f_moved)):
            rep.check(f"{name} antisymmetric", 0.0 if f.is_antisymmetric() else 1.0, f.is_antisymmetric())
        rep.finding("ex2_covariant - ex2_transformed (max |coeff|)", _poly_residual(cov, moved),
                    note="covariant rewrite does not reproduce the transformed potential")
        rep.finding("F(ex2_raw) - rho(u^mu x^nu - u^nu x^mu) (max |coeff|)", _poly_residual(f_raw, covariant_tensor(c, planar=True)),
                    note="direct tensor is a constant magnetic field")
        rep.finding("F(ex2_covariant) - F(ex2_raw) (max |coeff|)", _poly_residual(f_cov, f_raw))
    else:
        raise InvalidInputError(f"unknown gauge example {example!r}; expected 1 or 2")
    return rep
