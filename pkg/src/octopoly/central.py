"""Roots of the central companion polynomial over the closure of the base field.

Each closure root that generates an extension of degree <= 2 is collapsed to
its (trace, norm) pair -- a conjugacy-class candidate.  Exact mode extracts
all rational roots plus all monic rational quadratic factors by a bounded
divisor-candidate search; float mode finds all complex roots with a
simultaneous (Aberth-Ehrlich style) iteration and pairs the conjugates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NumericFailureError
from .polynomials import CentralPolynomial
from .scalars import EXACT, FLOAT, ToleranceSpec

MAX_CANDIDATE_PAIRS = 10_000
_ABERTH_MAX_ITER = 200


@dataclass(frozen=True)
class ClassCandidate:
    """A (trace, norm) conjugacy-class candidate of the companion polynomial.

    field_degree 1 means the underlying closure root lies in the base field
    (trace^2 == 4*norm); field_degree 2 means z^2 - trace*z + norm is
    irreducible (exact) / a conjugate complex pair (float).  ``approx`` marks
    candidates produced by the float fallback inside exact mode.
    """

    trace: object
    norm: object
    field_degree: int
    multiplicity: int
    approx: bool = False


@dataclass(frozen=True)
class CentralRoots:
    """Candidates plus bookkeeping: warnings and the degree of the part of the
    polynomial whose roots generate extensions of degree > 2 (those can never
    embed into the algebra and are discarded)."""

    candidates: tuple
    warnings: tuple = ()
    discarded_degree: int = 0


# ---------------------------------------------------------------------------
# scalar polynomial helpers (coefficient lists ascending, exact Fractions)
# ---------------------------------------------------------------------------


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _pscale(p, c):
    return [a * c for a in p]


def _pshift(p):
    return [Fraction(0)] + list(p)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _poly_divmod(p, d):
    p = list(p)
    d = _trim(d)
    if len(p) < len(d):
        return [Fraction(0)], _trim(p)
    q = [Fraction(0)] * (len(p) - len(d) + 1)
    lead = d[-1]
    for k in range(len(p) - len(d), -1, -1):
        coef = p[k + len(d) - 1] / lead
        q[k] = coef
        if coef != 0:
            for j, b in enumerate(d):
                p[k + j] -= coef * b
    return _trim(q), _trim(p)


def _poly_gcd(p, q):
    a, b = _trim(p), _trim(q)
    if a == [0]:
        a, b = b, a
    while b != [0]:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a == [0]:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _poly_eval_frac(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _clear_denominators(p):
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    content = max(content, 1)
    return [c // content for c in ints]


# ---------------------------------------------------------------------------
# integer factorization for divisor candidates
# ---------------------------------------------------------------------------


def _is_probable_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, rng):
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factorize(n):
    """Prime factorization of |n| >= 1 as {prime: exponent}."""
    n = abs(n)
    factors = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    rng = random.Random(0xFAC7)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return factors


def _divisors(n):
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# exact factors of degree <= 2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExactFactorization:
    """Monic linear/quadratic rational factors with multiplicities plus the
    exact unfactored remainder; multiplying everything back reproduces the
    input coefficientwise.  ``truncated`` reports that the divisor-candidate
    enumeration hit its bound, so quadratic factors may have been missed."""

    factors: tuple  # ((CentralPolynomial, multiplicity), ...)
    remainder: CentralPolynomial
    truncated: bool = False


def _root_bound(p):
    """Cauchy bound: every complex root r of p has |r| <= 1 + max|p_k/p_m|."""
    lead = abs(p[-1])
    return 1 + max(abs(c) / lead for c in p[:-1]) if len(p) > 1 else Fraction(0)


def _quadratic_T_values(p, n_val):
    """All rational T such that z^2 - T*z + n_val divides p (descending).

    The remainder of p modulo the quadratic is r1(T)*z + r0(T) with r1, r0
    polynomials in T (built from the power-reduction recurrence); the valid T
    are the common rational roots, i.e. rational roots of gcd(r1, r0).  Each
    returned value is verified by trial division by the caller.
    """
    e, g = [Fraction(0)], [Fraction(1)]
    r1, r0 = [Fraction(0)], [Fraction(0)]
    for i, b in enumerate(p):
        if i > 0:
            e, g = _padd(_pshift(e), g), _pscale(e, -n_val)
        if b != 0:
            r1 = _padd(r1, _pscale(e, b))
            r0 = _padd(r0, _pscale(g, b))
    h = _trim(_poly_gcd(r1, r0))
    if len(h) <= 1:
        return []
    return sorted(_rational_roots_of(h), reverse=True)


def _rational_roots_of(p):
    """Set of rational roots of an exact polynomial (no multiplicities)."""
    ints = _clear_denominators(_trim(p))
    if len(ints) == 1:
        return set()
    k0 = next(i for i, c in enumerate(ints) if c != 0)
    roots = {Fraction(0)} if k0 > 0 else set()
    ints = ints[k0:]
    if len(ints) == 1:
        return roots
    bound = _root_bound([Fraction(c) for c in ints])
    for dn in _divisors(ints[0]):
        if dn > bound * abs(ints[-1]):
            break
        for dd in _divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * dn, dd)
                if abs(r) <= bound and _poly_eval_frac([Fraction(c) for c in ints], r) == 0:
                    roots.add(r)
    return roots


def exact_quadratic_factors(Phi: CentralPolynomial, max_pairs=MAX_CANDIDATE_PAIRS):
    """Extract every monic rational factor of degree <= 2, with multiplicity.

    Rational roots come first (divisor candidates on the cleared-denominator
    form).  Monic quadratic factors z^2 - T z + N are then searched over
    candidate constants N = +-d0/d2 built from divisors of the constant and
    leading integer coefficients, pruned by the Cauchy root bound and capped
    at ``max_pairs`` candidate pairs; for each N the matching T values are
    solved exactly and verified by trial division.  An incomplete search
    returns a larger remainder, never a wrong one.
    """
    if Phi.mode != EXACT:
        raise ValueError("exact_quadratic_factors needs exact-rational coefficients")
    rem = [Fraction(c) for c in Phi.coeffs]
    factors = []

    # rational roots, multiplicity by repeated synthetic division
    for r in sorted(_rational_roots_of(rem)):
        factor = [-r, Fraction(1)]
        mult = 0
        while len(rem) > 1:
            q, s = _poly_divmod(rem, factor)
            if s != [0]:
                break
            rem = q
            mult += 1
        if mult:
            factors.append((CentralPolynomial(factor, EXACT), mult))

    truncated = False
    if len(rem) > 2:
        ints = _clear_denominators(rem)
        bound = _root_bound([Fraction(c) for c in ints])
        nbound = bound * bound
        const_divs = _divisors(ints[0])
        lead_divs = _divisors(ints[-1])
        seen = set()
        pairs = 0
        for dd in lead_divs:
            for dn in const_divs:
                pairs += 1
                if pairs > max_pairs:
                    truncated = True
                    break
                for sign in (1, -1):
                    n_val = Fraction(sign * dn, dd)
                    if n_val in seen or abs(n_val) > nbound:
                        continue
                    seen.add(n_val)
                    if len(rem) <= 2:
                        continue
                    for t_val in _quadratic_T_values(rem, n_val):
                        factor = [n_val, -t_val, Fraction(1)]
                        mult = 0
                        while len(rem) > 2:
                            q, s = _poly_divmod(rem, factor)
                            if s != [0]:
                                break
                            rem = q
                            mult += 1
                        if mult:
                            factors.append((CentralPolynomial(factor, EXACT), mult))
            if truncated or len(rem) <= 2:
                break

    # with every rational root removed first, the remainder is a constant or
    # has degree >= 3; a linear leftover would contradict the root extraction
    remainder = CentralPolynomial(rem, EXACT)
    return ExactFactorization(tuple(factors), remainder, truncated)


# ---------------------------------------------------------------------------
# float roots: simultaneous iteration
# ---------------------------------------------------------------------------


def _horner_pair(coeffs, z):
    """(p(z), p'(z)) by a joint Horner pass; coefficients ascending."""
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def numeric_roots(coeffs, tol: ToleranceSpec | None = None):
    """All complex roots of a real-coefficient float polynomial.

    Simultaneous Aberth-Ehrlich iteration started on a randomly perturbed
    circle (iteration cap 200) with one Newton polish per root; conjugate
    pairs are then matched and symmetrized, and near-real roots snapped to
    the axis.  Returns (re, im) tuples.  Raises NumericFailureError, carrying
    the best residuals, if any residual stays above
    abs_eps + rel_eps * sum_k |b_k| |r|^k.
    """
    tol = tol or ToleranceSpec()
    coeffs = [float(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0.0:
        coeffs.pop()
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("numeric_roots needs degree >= 1")
    scale = max(abs(c) for c in coeffs)
    if tol.is_zero(coeffs[-1], scale):
        raise ValueError("leading coefficient is zero at the coefficient scale")
    monic = [c / coeffs[-1] for c in coeffs]

    rng = random.Random(0xAB3A7)
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = [
        radius
        * complex(
            math.cos(2 * math.pi * (k + 0.35) / n + 0.01 * rng.random()),
            math.sin(2 * math.pi * (k + 0.35) / n + 0.01 * rng.random()),
        )
        for k in range(n)
    ]
    step_tol = 1e-14
    for _ in range(_ABERTH_MAX_ITER):
        moved = 0.0
        for i in range(n):
            p, dp = _horner_pair(monic, z[i])
            if p == 0:
                continue
            if dp == 0:
                z[i] += 1e-6 * radius * complex(rng.random(), rng.random())
                continue
            w = p / dp
            s = 0j
            for j2 in range(n):
                if j2 != i and z[i] != z[j2]:
                    s += 1.0 / (z[i] - z[j2])
            denom = 1.0 - w * s
            delta = w if denom == 0 else w / denom
            z[i] -= delta
            moved = max(moved, abs(delta) / (1.0 + abs(z[i])))
        if moved < step_tol:
            break
    for i in range(n):
        p, dp = _horner_pair(monic, z[i])
        if dp != 0:
            z[i] -= p / dp

    residuals = []
    for r in z:
        val, _ = _horner_pair(coeffs, r)
        bound = tol.abs_eps + tol.rel_eps * sum(
            abs(c) * abs(r) ** k for k, c in enumerate(coeffs)
        )
        residuals.append(abs(val))
        if abs(val) > bound:
            raise NumericFailureError(
                "root finder residual %.3e exceeds bound %.3e" % (abs(val), bound),
                residuals=sorted(residuals, reverse=True),
            )

    # snap near-real roots, then symmetrize conjugate pairs
    snapped = []
    for r in z:
        if tol.is_zero(r.imag, max(1.0, abs(r))):
            snapped.append(complex(r.real, 0.0))
        else:
            snapped.append(r)
    plus = [r for r in snapped if r.imag > 0]
    minus = [r for r in snapped if r.imag < 0]
    reals = [r for r in snapped if r.imag == 0]
    if len(plus) != len(minus):
        raise NumericFailureError(
            "conjugate pairing failed for a real-coefficient polynomial",
            residuals=residuals,
        )
    out = [(r.real, 0.0) for r in reals]
    for r in plus:
        jbest = min(range(len(minus)), key=lambda j2: abs(r.conjugate() - minus[j2]))
        m = minus.pop(jbest)
        re = 0.5 * (r.real + m.real)
        im = 0.5 * (r.imag - m.imag)
        out.append((re, im))
        out.append((re, -im))
    return out


def _merge_scale(coeffs, r):
    return sum(abs(c) * max(1.0, abs(r)) ** k for k, c in enumerate(coeffs))


def _float_candidates(Phi, tol):
    roots = numeric_roots(Phi.coeffs, tol)
    # cluster equal roots; the merge radius lives at the scale the polynomial
    # values do, which is what lets squared factors collapse to one root
    clusters = []  # [sum_re, sum_im, count]
    for re, im in roots:
        merged = False
        for cl in clusters:
            cre, cim = cl[0] / cl[2], cl[1] / cl[2]
            radius = 10 * (
                tol.abs_eps + tol.rel_eps * _merge_scale(Phi.coeffs, complex(re, im))
            )
            if abs(complex(re, im) - complex(cre, cim)) <= radius:
                cl[0] += re
                cl[1] += im
                cl[2] += 1
                merged = True
                break
        if not merged:
            clusters.append([re, im, 1])
    cands = []
    for sre, sim, count in clusters:
        re, im = sre / count, sim / count
        if im == 0.0:
            cands.append(ClassCandidate(2.0 * re, re * re, 1, count))
        elif im > 0:
            cands.append(ClassCandidate(2.0 * re, re * re + im * im, 2, count))
    # merge candidates that landed on the same (trace, norm)
    merged = []
    for c in cands:
        for k, other in enumerate(merged):
            s = max(1.0, abs(c.trace), abs(c.norm))
            if (
                other.field_degree == c.field_degree
                and tol.eq(other.trace, c.trace, s)
                and tol.eq(other.norm, c.norm, s)
            ):
                merged[k] = ClassCandidate(
                    other.trace,
                    other.norm,
                    other.field_degree,
                    other.multiplicity + c.multiplicity,
                )
                break
        else:
            merged.append(c)
    merged.sort(key=lambda c: (c.norm, -c.trace))
    return merged


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def central_roots(Phi: CentralPolynomial, tol=None, max_pairs=MAX_CANDIDATE_PAIRS):
    """Conjugacy-class candidates for all closure roots of Phi of degree <= 2.

    Candidates are deduplicated on (trace, norm) with summed multiplicity and
    sorted by (norm, -trace).  In exact mode, roots generating extensions of
    degree > 2 end up in ``discarded_degree``; if the factor search was
    truncated, approximate candidates from the float root finder are appended
    with a warning.
    """
    tol = tol or ToleranceSpec()
    if Phi.degree < 1:
        raise ValueError("central_roots needs a nonconstant polynomial")
    if Phi.mode == FLOAT:
        return CentralRoots(tuple(_float_candidates(Phi, tol)))

    fact = exact_quadratic_factors(Phi, max_pairs)
    cands = []
    for poly, mult in fact.factors:
        if poly.degree == 1:
            r = -poly.coeffs[0]
            cands.append(ClassCandidate(2 * r, r * r, 1, mult))
        else:
            n_val, t_val = poly.coeffs[0], -poly.coeffs[1]
            cands.append(ClassCandidate(t_val, n_val, 2, mult))
    warnings = []
    discarded = 0
    if fact.remainder.degree >= 1:
        if fact.truncated:
            warnings.append(
                "exact factor search truncated at %d candidate pairs; "
                "falling back to float roots for the degree-%d remainder"
                % (max_pairs, fact.remainder.degree)
            )
            float_rem = CentralPolynomial(
                [float(c) for c in fact.remainder.coeffs], FLOAT
            )
            for c in _float_candidates(float_rem, tol):
                cands.append(
                    ClassCandidate(
                        Fraction(c.trace),
                        Fraction(c.norm),
                        c.field_degree,
                        c.multiplicity,
                        approx=True,
                    )
                )
        else:
            discarded = fact.remainder.degree
            warnings.append(
                "degree-%d remainder has no rational factors of degree <= 2; "
                "its roots generate extensions of degree > 2 and cannot lie "
                "in the algebra" % fact.remainder.degree
            )
    cands.sort(key=lambda c: (c.norm, -c.trace))
    return CentralRoots(tuple(cands), tuple(warnings), discarded)
