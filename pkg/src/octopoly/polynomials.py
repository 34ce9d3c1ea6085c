"""Standard polynomials over an octonion algebra.

A standard polynomial keeps all coefficients on one side of the variable:
``side == LEFT`` means c_n z^n + ... + c_1 z + c_0, ``side == RIGHT`` the
mirror form z^n c_n + ... + z c_1 + c_0.  The module also builds the central
companion polynomial, reduces a polynomial modulo the characteristic relation
z^2 = T z - N to a linear form E z + G, and produces both twist families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Octonion, OctonionAlgebra
from .scalars import EXACT


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class StandardPolynomial:
    """Coefficient list c_0..c_n over one algebra; the zero polynomial is
    rejected and trailing zero coefficients are stripped at construction."""

    def __init__(self, algebra: OctonionAlgebra, coeffs, side=Side.LEFT):
        if not isinstance(side, Side):
            side = Side(side)
        converted = []
        for c in coeffs:
            if isinstance(c, Octonion):
                algebra.check_same(c.algebra)
                converted.append(c)
            else:
                converted.append(algebra.scalar_octonion(c))
        while converted and converted[-1].is_exactly_zero():
            converted.pop()
        if not converted:
            raise ValueError("the zero polynomial is not a valid StandardPolynomial")
        self.algebra = algebra
        self.coeffs = tuple(converted)
        self.side = side

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return self.coeffs[-1] == self.algebra.one

    def __eq__(self, other):
        if not isinstance(other, StandardPolynomial):
            return NotImplemented
        return self.side == other.side and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.side, self.coeffs))

    def __repr__(self):
        from .literals import format_polynomial

        return "<%s (%s)>" % (format_polynomial(self), self.side.value)

    def __call__(self, lam):
        return eval_at(self, lam)

    def mirror(self):
        """Same coefficients on the opposite side of the variable."""
        flipped = Side.RIGHT if self.side == Side.LEFT else Side.LEFT
        return StandardPolynomial(self.algebra, self.coeffs, flipped)


def eval_at(phi: StandardPolynomial, lam: Octonion) -> Octonion:
    """Substitute lam for the variable.

    Powers lam^i are built by repeated multiplication (any bracketing agrees
    by power-associativity); LEFT polynomials multiply each power by its
    coefficient on the left, RIGHT polynomials on the right.
    """
    phi.algebra.check_same(lam.algebra)
    acc = phi.algebra.zero
    power = phi.algebra.one
    for i, c in enumerate(phi.coeffs):
        if i > 0:
            power = lam * power
        acc = acc + (c * power if phi.side == Side.LEFT else power * c)
    return acc


class CentralPolynomial:
    """Polynomial with central (scalar) coefficients b_0..b_m."""

    def __init__(self, coeffs, mode=EXACT):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError("the zero polynomial is not a valid CentralPolynomial")
        self.coeffs = tuple(coeffs)
        self.mode = mode

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, CentralPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "CentralPolynomial(%r)" % (list(self.coeffs),)

    def __call__(self, z):
        """Evaluate at a scalar, complex number or octonion."""
        if isinstance(z, Octonion):
            acc = z.algebra.zero
            power = z.algebra.one
            for i, b in enumerate(self.coeffs):
                if i > 0:
                    power = z * power
                acc = acc + b * power
            return acc
        acc = 0
        for b in reversed(self.coeffs):
            acc = acc * z + b
        return acc


def mirror(phi: StandardPolynomial) -> StandardPolynomial:
    """Same coefficients, opposite side of the variable; an involution."""
    return phi.mirror()


def companion(phi: StandardPolynomial) -> CentralPolynomial:
    """The degree-2n central companion polynomial of a LEFT polynomial.

    b_k sums Tr(conj(c_i) c_j) over i < j with i + j = k, plus Norm(c_m)
    when k = 2m.  Every root of phi is a root of the result.
    """
    if phi.side != Side.LEFT:
        raise ValueError("companion is defined for left-coefficient polynomials")
    n = phi.degree
    zero = phi.algebra._zero
    b = [zero] * (2 * n + 1)
    for i in range(n + 1):
        ci = phi.coeffs[i]
        b[2 * i] = b[2 * i] + ci.norm()
        ci_bar = ci.conj()
        for j in range(i + 1, n + 1):
            b[i + j] = b[i + j] + (ci_bar * phi.coeffs[j]).trace()
    return CentralPolynomial(b, phi.algebra.mode)


def eg_coeffs(norm, trace, i):
    """Central coefficients (e_i, g_i) with z^i = e_i z + g_i whenever
    z^2 = trace*z - norm.  Recurrence: e_{i+1} = T e_i + g_i, g_{i+1} = -N e_i."""
    if i < 0:
        raise ValueError("power index must be nonnegative")
    zero = norm * 0
    e, g = zero, zero + 1
    for _ in range(i):
        e, g = trace * e + g, -norm * e
    return e, g


@dataclass(frozen=True)
class ReducedLinearForm:
    """phi reduced on the class z^2 = trace*z - norm: phi(z) = E z + G there."""

    E: Octonion
    G: Octonion
    norm: object
    trace: object


def reduce_to_linear(phi: StandardPolynomial, norm, trace) -> ReducedLinearForm:
    """E = sum c_i e_i(N,T), G = sum c_i g_i(N,T); for every lam with
    invariants (T, N), eval_at(phi, lam) == E*lam + G."""
    if phi.side != Side.LEFT:
        raise ValueError("reduce_to_linear is defined for left polynomials")
    alg = phi.algebra
    norm = alg.scalar(norm)
    trace = alg.scalar(trace)
    E = alg.zero
    G = alg.zero
    e, g = alg.scalar(0), alg.scalar(1)
    for i, c in enumerate(phi.coeffs):
        if i > 0:
            e, g = trace * e + g, -norm * e
        E = E + c * e
        G = G + c * g
    return ReducedLinearForm(E=E, G=G, norm=norm, trace=trace)


def _require_monic_left(phi, what):
    if phi.side != Side.LEFT:
        raise ValueError("%s is defined for left polynomials" % what)
    if not phi.is_monic():
        raise ValueError("%s requires a monic polynomial" % what)


def twist_left(phi: StandardPolynomial, g: Octonion) -> StandardPolynomial:
    """One-sided twist: coefficient k becomes g^-1 c_k (leading becomes g^-1).

    Roots of the twists over all invertible g make up the left eigenvalues of
    the companion matrix.
    """
    _require_monic_left(phi, "twist_left")
    phi.algebra.check_same(g.algebra)
    ginv = g.inverse()
    coeffs = [ginv * c for c in phi.coeffs[:-1]] + [ginv]
    return StandardPolynomial(phi.algebra, coeffs, Side.LEFT)


def twist_two_sided(phi: StandardPolynomial, g: Octonion) -> StandardPolynomial:
    """Two-sided twist: coefficient k becomes g^-1 c_k g^-1 (leading g^-2);
    unambiguous by flexibility.  Governs the right eigenvalues."""
    _require_monic_left(phi, "twist_two_sided")
    phi.algebra.check_same(g.algebra)
    ginv = g.inverse()
    coeffs = [(ginv * c) * ginv for c in phi.coeffs[:-1]] + [ginv * ginv]
    return StandardPolynomial(phi.algebra, coeffs, Side.LEFT)
