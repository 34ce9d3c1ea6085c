"""Arithmetic in an octonion algebra over exact rationals or float64 scalars.

An algebra A is the double Q + Q*l of the quaternion algebra Q = (alpha, beta)
with l*l = gamma, multiplied by the doubling rule

    (p + q*l)(r + s*l) = p*r + gamma*(conj(s)*q) + (s*p + q*conj(r))*l.

Elements are coordinate vectors over the fixed basis

    e0=1, e1=i, e2=j, e3=ij, e4=l, e5=i*l, e6=j*l, e7=(ij)*l.

The 8x8 structure table is derived once per algebra by applying the doubling
rule (recursively, down through the quaternion and complex levels) to basis
pairs; nothing is hand-entered.  All values are immutable after construction,
so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigurationError, SingularElementError
from .scalars import EXACT, FLOAT, MODES, ToleranceSpec, coerce_scalar, rational_sqrt

DIVISION = "division"
SPLIT = "split"
UNVERIFIED = "unverified"

_ISOTROPY_SAMPLES = 10_000


def _cd_mul(x, y, params):
    """Cayley-Dickson product of coordinate tuples; one recursion per doubling
    parameter in ``params`` (applied outermost-last)."""
    if not params:
        return (x[0] * y[0],)
    half = len(x) // 2
    gamma, sub = params[-1], params[:-1]
    p, q = x[:half], x[half:]
    r, s = y[:half], y[half:]
    sbar = (s[0],) + tuple(-c for c in s[1:])
    rbar = (r[0],) + tuple(-c for c in r[1:])
    first = tuple(
        u + gamma * v for u, v in zip(_cd_mul(p, r, sub), _cd_mul(sbar, q, sub))
    )
    second = tuple(u + v for u, v in zip(_cd_mul(s, p, sub), _cd_mul(q, rbar, sub)))
    return first + second


@dataclass(frozen=True)
class DivisionCheck:
    """Outcome of the division-algebra test: the norm form is provably
    anisotropic (``division``), an isotropic witness was found (``split``),
    or neither could be established (``unverified``)."""

    status: str
    witness: "Octonion | None" = None


class OctonionAlgebra:
    """The octonion algebra determined by (alpha, beta, gamma), all nonzero.

    ``mode`` selects the scalar backend ('exact' or 'float'); ``tolerance``
    is only consulted in float mode.
    """

    def __init__(self, alpha, beta, gamma, mode=EXACT, tolerance=None):
        if mode not in MODES:
            raise ConfigurationError("mode must be one of %r" % (MODES,))
        self.mode = mode
        self.tol = tolerance if tolerance is not None else ToleranceSpec()
        self.alpha = coerce_scalar(alpha, mode)
        self.beta = coerce_scalar(beta, mode)
        self.gamma = coerce_scalar(gamma, mode)
        if self.alpha == 0 or self.beta == 0 or self.gamma == 0:
            raise ConfigurationError("alpha, beta, gamma must all be nonzero")
        self._zero = self.scalar(0)
        self._one = self.scalar(1)
        self._table = self._build_table()
        # Norm(e_k) = -e_k^2 for k >= 1; the diagonal of the norm form.
        self.norm_coeffs = (self._one,) + tuple(
            -self._table[k][k][0] for k in range(1, 8)
        )
        self._division = None

    def scalar(self, value):
        return coerce_scalar(value, self.mode)

    def _build_table(self):
        params = (self.alpha, self.beta, self.gamma)
        basis = [
            tuple(self._one if t == k else self._zero for t in range(8))
            for k in range(8)
        ]
        table = []
        for a in range(8):
            row = []
            for b in range(8):
                prod = _cd_mul(basis[a], basis[b], params)
                nz = [(k, c) for k, c in enumerate(prod) if c != 0]
                if len(nz) != 1:
                    raise ConfigurationError(
                        "basis product e%d*e%d is not a monomial" % (a, b)
                    )
                k, c = nz[0]
                row.append((c, k))
            table.append(tuple(row))
        for k in range(1, 8):
            if table[k][k][1] != 0:
                raise ConfigurationError("basis square e%d^2 is not central" % k)
        return tuple(table)

    def mult_table(self):
        """8x8 table with ``table[a][b] = (c, k)`` such that e_a*e_b = c*e_k."""
        return self._table

    # -- element constructors ------------------------------------------------

    def octonion(self, coords):
        coords = tuple(self.scalar(c) for c in coords)
        if len(coords) != 8:
            raise ConfigurationError("an octonion needs exactly 8 coordinates")
        return Octonion(self, coords)

    def scalar_octonion(self, value):
        c = self.scalar(value)
        return Octonion(self, (c,) + (self._zero,) * 7)

    def basis_element(self, k):
        if not 0 <= k <= 7:
            raise ConfigurationError("basis index out of range: %r" % (k,))
        return Octonion(
            self, tuple(self._one if t == k else self._zero for t in range(8))
        )

    @property
    def zero(self):
        return self.scalar_octonion(0)

    @property
    def one(self):
        return self.scalar_octonion(1)

    def parse(self, text):
        """Parse an octonion literal such as '1/2 + 1/2*k + 1/2*il + 1/2*jl'."""
        from .literals import parse_octonion

        return parse_octonion(text, self)

    # -- comparisons ----------------------------------------------------------

    def same_params(self, other):
        return (
            isinstance(other, OctonionAlgebra)
            and self.mode == other.mode
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.gamma == other.gamma
        )

    def check_same(self, other):
        if not self.same_params(other):
            raise ConfigurationError("operands belong to different algebras")

    def scalar_is_zero(self, x, scale=1.0):
        if self.mode == EXACT:
            return x == 0
        return self.tol.is_zero(x, scale)

    def scalars_eq(self, x, y, scale=1.0):
        if self.mode == EXACT:
            return x == y
        return self.tol.eq(x, y, scale)

    # -- division-algebra test -----------------------------------------------

    def division_check(self):
        """Classify the algebra by (an)isotropy of its 8-variable norm form.

        Returned statuses: ``division`` if all three parameters are negative
        (the form is then positive definite), ``split`` together with an
        explicit isotropic witness when one is found, else ``unverified``.
        Anisotropy over Q cannot be decided by naive search, so ``division``
        is never claimed without the definiteness criterion.  The result is
        cached per algebra.
        """
        if self._division is None:
            self._division = self._run_division_check()
        return self._division

    def _run_division_check(self):
        if self.alpha < 0 and self.beta < 0 and self.gamma < 0:
            return DivisionCheck(DIVISION)
        q = self.norm_coeffs
        if self.mode == FLOAT:
            # Over the reals the form is definite or visibly isotropic.
            for k in range(1, 8):
                if q[k] < 0:
                    coords = [0.0] * 8
                    coords[0] = (-q[k]) ** 0.5
                    coords[k] = 1.0
                    return DivisionCheck(SPLIT, self.octonion(coords))
            return DivisionCheck(DIVISION)
        for a in range(8):
            for b in range(a + 1, 8):
                r = rational_sqrt(-q[b] / q[a])
                if r is not None:
                    coords = [self._zero] * 8
                    coords[a] = r
                    coords[b] = self._one
                    return DivisionCheck(SPLIT, self.octonion(coords))
        rng = random.Random(0x0C7A)
        for _ in range(_ISOTROPY_SAMPLES):
            coords = [
                Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(8)
            ]
            x = self.octonion(coords)
            if not x.is_exactly_zero() and x.norm() == 0:
                return DivisionCheck(SPLIT, x)
        return DivisionCheck(UNVERIFIED)

    def __repr__(self):
        return "OctonionAlgebra(alpha=%s, beta=%s, gamma=%s, mode=%r)" % (
            self.alpha,
            self.beta,
            self.gamma,
            self.mode,
        )


class Octonion:
    """Immutable 8-coordinate element of an :class:`OctonionAlgebra`.

    Supports ``+ - *`` (octonion and scalar operands), ``/`` by a scalar and
    ``**`` by a nonnegative int; powers are computed by repeated left
    multiplication, which is unambiguous by power-associativity.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _binary(self, other):
        if isinstance(other, Octonion):
            self.algebra.check_same(other.algebra)
            return other
        return None

    def __add__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return Octonion(self.algebra, tuple(a + b for a, b in zip(self.coords, o.coords)))

    def __sub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return Octonion(self.algebra, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __neg__(self):
        return Octonion(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            self.algebra.check_same(other.algebra)
            table = self.algebra._table
            out = [self.algebra._zero] * 8
            for a, xa in enumerate(self.coords):
                if xa == 0:
                    continue
                row = table[a]
                for b, yb in enumerate(other.coords):
                    if yb == 0:
                        continue
                    c, k = row[b]
                    if c == 1:
                        out[k] = out[k] + xa * yb
                    elif c == -1:
                        out[k] = out[k] - xa * yb
                    else:
                        out[k] = out[k] + c * xa * yb
            return Octonion(self.algebra, tuple(out))
        try:
            s = self.algebra.scalar(other)
        except TypeError:
            return NotImplemented
        return Octonion(self.algebra, tuple(a * s for a in self.coords))

    def __rmul__(self, other):
        # scalar * octonion; scalars are central so the order is immaterial
        return self.__mul__(other)

    def __truediv__(self, other):
        s = self.algebra.scalar(other)
        if s == 0:
            raise ZeroDivisionError("division of an octonion by scalar zero")
        return Octonion(self.algebra, tuple(a / s for a in self.coords))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("octonion powers take a nonnegative int exponent")
        result = self.algebra.one
        for _ in range(n):
            result = self * result
        return result

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.algebra.same_params(other.algebra) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        from .literals import format_octonion

        return "<%s>" % format_octonion(self)

    # -- structure maps --------------------------------------------------------

    def conj(self):
        """Symplectic involution: fixes e0, negates e1..e7."""
        c = self.coords
        return Octonion(self.algebra, (c[0],) + tuple(-a for a in c[1:]))

    def trace(self):
        return self.coords[0] + self.coords[0]

    def norm(self):
        """Value of the diagonal norm form; equals (conj(x) * x)_0."""
        return sum(
            q * c * c for q, c in zip(self.algebra.norm_coeffs, self.coords)
        )

    def invariants(self):
        """The central pair (trace, norm); conjugation-invariant."""
        return self.trace(), self.norm()

    def pure(self):
        """The trace-zero part x - x0."""
        z = self.algebra._zero
        return Octonion(self.algebra, (z,) + self.coords[1:])

    def inverse(self):
        n = self.norm()
        scale = self.max_abs() ** 2 if self.algebra.mode == FLOAT else 1.0
        if self.algebra.scalar_is_zero(n, scale):
            raise SingularElementError("element has (numerically) zero norm")
        return self.conj() / n

    def is_exactly_zero(self):
        return all(c == 0 for c in self.coords)

    def is_central(self):
        return all(c == 0 for c in self.coords[1:])

    def max_abs(self):
        """Largest coordinate magnitude as a float; the standard scale for
        zero-at-scale tests."""
        return max(abs(float(c)) for c in self.coords)


def bilinear_form(x, y):
    """Polarization of the norm form: <x,y> = N(x+y) - N(x) - N(y)."""
    x.algebra.check_same(y.algebra)
    return sum(
        2 * q * a * b for q, a, b in zip(x.algebra.norm_coeffs, x.coords, y.coords)
    )


def same_class(x, y):
    """Conjugacy test: equal trace and equal norm (exact or at tolerance)."""
    x.algebra.check_same(y.algebra)
    alg = x.algebra
    tx, nx = x.invariants()
    ty, ny = y.invariants()
    if alg.mode == EXACT:
        return tx == ty and nx == ny
    s = max(1.0, x.max_abs(), y.max_abs())
    return alg.tol.eq(tx, ty, s) and alg.tol.eq(nx, ny, s * s)


def conjugator(g, h):
    """A trace-zero delta with (delta*h)*delta^-1 == g.

    Requires ``same_class(g, h)`` in a division algebra.  When g != conj(h)
    the choice is delta = g - conj(h); when g == conj(h) the first pure basis
    element or pairwise basis sum orthogonal to g (and of nonzero norm) is
    returned, which keeps the output deterministic.  For central g == h any
    delta works and 1 is returned.
    """
    g.algebra.check_same(h.algebra)
    alg = g.algebra
    if not same_class(g, h):
        raise ValueError("conjugator requires elements of the same class")
    hbar = h.conj()
    delta = g - hbar
    scale = max(1.0, g.max_abs(), h.max_abs())
    if alg.mode == EXACT:
        nonzero = not delta.is_exactly_zero()
    else:
        nonzero = not alg.tol.is_zero(delta.max_abs(), scale)
    if nonzero:
        return delta
    # g == conj(h); central g means g == h and anything conjugates.
    if g.is_central():
        return alg.one
    candidates = [alg.basis_element(k) for k in range(1, 8)]
    for a in range(1, 8):
        for b in range(a + 1, 8):
            candidates.append(alg.basis_element(a) + alg.basis_element(b))
    for delta in candidates:
        pairing = bilinear_form(g, delta)
        nrm = delta.norm()
        if alg.mode == EXACT:
            if pairing == 0 and nrm != 0:
                return delta
        else:
            if alg.tol.is_zero(pairing, scale) and not alg.tol.is_zero(
                float(nrm), 1.0
            ):
                return delta
    raise ValueError("no conjugating element found")  # unreachable in a division algebra
