"""End-to-end root finding for standard polynomials over a division algebra.

Every class candidate of the companion polynomial is resolved into exactly
one of: a single root (the generic case), a full conjugacy class of roots, a
degenerate empty class, a non-embeddable class, or an honest "undetermined".
Nothing is emitted on the strength of the theory alone -- every root and
witness is re-verified by substitution before it enters the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DIVISION, SPLIT, Octonion, OctonionAlgebra
from .central import MAX_CANDIDATE_PAIRS, ClassCandidate, central_roots
from .errors import UnsupportedAlgebraError
from .polynomials import (
    CentralPolynomial,
    Side,
    StandardPolynomial,
    companion,
    eval_at,
    reduce_to_linear,
)
from .scalars import EXACT, FLOAT, rational_sqrt

SINGLE_ROOT = "single_root"
FULL_CLASS = "full_class"
NO_ROOT_IN_CLASS = "no_root_in_class"
NOT_EMBEDDABLE = "not_embeddable"
UNDETERMINED = "undetermined"

_WITNESS_HEIGHT = 50


@dataclass(frozen=True)
class ClassResolution:
    """How one (trace, norm) candidate meets the root set.

    ``root`` is set for single_root, ``witness`` for full_class (a verified
    member of the class), ``reason`` for undetermined.
    """

    status: str
    root: Octonion | None = None
    witness: Octonion | None = None
    reason: str | None = None


@dataclass(frozen=True)
class RootReport:
    """Everything solve() found: the algebra and polynomial, the companion
    polynomial, one resolution per class candidate, the flattened single
    roots and full-class descriptors, and any warnings.  The report is the
    complete root set whenever no resolution is undetermined."""

    algebra: OctonionAlgebra
    polynomial: StandardPolynomial
    companion: CentralPolynomial
    classes: tuple  # ((ClassCandidate, ClassResolution), ...)
    roots: tuple  # verified single roots, in class order
    full_classes: tuple  # (trace, norm, witness) per fully-rooted class
    mode: str
    tolerance: object
    warnings: tuple


def verify_root(phi: StandardPolynomial, lam: Octonion) -> bool:
    """Substitute and test for zero: exactly in exact mode, zero-at-scale
    with scale sum_i ||c_i|| * ||lam||^i (max-coordinate norms) in float."""
    value = eval_at(phi, lam)
    alg = phi.algebra
    if alg.mode == EXACT:
        return value.is_exactly_zero()
    lam_mag = lam.max_abs()
    scale = sum(c.max_abs() * lam_mag**i for i, c in enumerate(phi.coeffs))
    return all(alg.tol.is_zero(float(c), scale) for c in value.coords)


def class_witness(algebra: OctonionAlgebra, norm, trace):
    """An element with the given invariants, or None if none was found.

    The witness is trace/2 + u with u pure of norm s = norm - trace^2/4.
    Exact mode tries each pure basis direction, then two-direction
    combinations with numerators and denominators up to height 50; float mode
    scales the first pure direction whose form coefficient has the right
    sign.  Absence is a legal return -- the caller decides how to report it.
    """
    norm = algebra.scalar(norm)
    trace = algebra.scalar(trace)
    half_t = trace / 2
    s = norm - half_t * half_t
    q = algebra.norm_coeffs
    if algebra.mode == FLOAT:
        if algebra.tol.is_zero(s, max(1.0, abs(norm), trace * trace)):
            return algebra.scalar_octonion(half_t)
        for k in range(1, 8):
            ratio = s / q[k]
            if ratio > 0:
                coords = [0.0] * 8
                coords[0] = half_t
                coords[k] = ratio**0.5
                return algebra.octonion(coords)
        return None
    if s == 0:
        return algebra.scalar_octonion(half_t)
    for k in range(1, 8):
        r = rational_sqrt(s / q[k])
        if r is not None:
            coords = [Fraction(0)] * 8
            coords[0] = half_t
            coords[k] = r
            return algebra.octonion(coords)
    for a in range(1, 8):
        for b in range(a + 1, 8):
            for den in range(1, _WITNESS_HEIGHT + 1):
                for num in range(1, _WITNESS_HEIGHT + 1):
                    t_a = Fraction(num, den)
                    if t_a.numerator != num:
                        continue  # not in lowest terms; already tried
                    rest = (s - q[a] * t_a * t_a) / q[b]
                    t_b = rational_sqrt(rest)
                    if t_b is not None:
                        coords = [Fraction(0)] * 8
                        coords[0] = half_t
                        coords[a] = t_a
                        coords[b] = t_b
                        return algebra.octonion(coords)
    return None


def _octonion_is_zero(x: Octonion, scale):
    if x.algebra.mode == EXACT:
        return x.is_exactly_zero()
    return all(x.algebra.tol.is_zero(float(c), scale) for c in x.coords)


def _invariants_match(lam: Octonion, trace, norm):
    alg = lam.algebra
    t, n = lam.invariants()
    if alg.mode == EXACT:
        return t == trace and n == norm
    mag = lam.max_abs()
    return alg.tol.eq(t, trace, max(1.0, abs(trace), mag)) and alg.tol.eq(
        n, norm, max(1.0, abs(norm), mag * mag)
    )


def resolve_class(phi: StandardPolynomial, cand: ClassCandidate) -> ClassResolution:
    """Resolve one companion-class candidate against phi.

    Degenerate classes (field_degree 1) are singletons {trace/2} in a
    division algebra and are tested by direct substitution.  Otherwise the
    class reduces phi to E z + G: E = G = 0 roots the whole class (witness
    looked up and verified), E = 0 != G leaves an empty class (possible only
    through float drift), and invertible E pins the unique representative
    -E^-1 G, emitted only if substitution and the invariants check out.
    """
    alg = phi.algebra
    if cand.approx and alg.mode == EXACT:
        return ClassResolution(
            UNDETERMINED,
            reason="candidate came from the float fallback; no exact resolution",
        )
    trace = alg.scalar(cand.trace)
    norm = alg.scalar(cand.norm)
    if cand.field_degree == 1:
        lam = alg.scalar_octonion(trace / 2)
        if verify_root(phi, lam):
            return ClassResolution(SINGLE_ROOT, root=lam)
        return ClassResolution(NO_ROOT_IN_CLASS)
    red = reduce_to_linear(phi, norm, trace)
    # magnitude the coefficient sums live at, for the float zero decisions
    if alg.mode == FLOAT:
        e_scale = g_scale = 0.0
        e_i, g_i = 0.0, 1.0
        for i, c in enumerate(phi.coeffs):
            if i > 0:
                e_i, g_i = trace * e_i + g_i, -norm * e_i
            e_scale += c.max_abs() * abs(e_i)
            g_scale += c.max_abs() * abs(g_i)
    else:
        e_scale = g_scale = 1.0
    if _octonion_is_zero(red.E, e_scale):
        if _octonion_is_zero(red.G, g_scale):
            witness = class_witness(alg, norm, trace)
            if witness is None:
                return ClassResolution(
                    UNDETERMINED,
                    reason="no class witness found at height %d" % _WITNESS_HEIGHT,
                )
            if verify_root(phi, witness):
                return ClassResolution(FULL_CLASS, witness=witness)
            return ClassResolution(
                UNDETERMINED,
                reason="class witness failed root verification (numeric drift)",
            )
        return ClassResolution(NO_ROOT_IN_CLASS)
    lam = -(red.E.inverse() * red.G)
    if verify_root(phi, lam) and _invariants_match(lam, trace, norm):
        return ClassResolution(SINGLE_ROOT, root=lam)
    return ClassResolution(NOT_EMBEDDABLE)


def solve(
    phi: StandardPolynomial, max_pairs=MAX_CANDIDATE_PAIRS
) -> RootReport:
    """Find all roots of a nonconstant left polynomial over a division algebra.

    Split algebras are rejected outright; an unverified division check
    proceeds with a warning.  The companion polynomial's class candidates are
    resolved independently and in order, and every emitted root or witness is
    re-verified by substitution.
    """
    if phi.degree < 1:
        raise ValueError("solve needs a polynomial of degree >= 1")
    if phi.side != Side.LEFT:
        raise ValueError("solve handles left-coefficient polynomials")
    alg = phi.algebra
    check = alg.division_check()
    warnings = []
    if check.status == SPLIT:
        raise UnsupportedAlgebraError(
            "the algebra is split (isotropic witness %r); roots are only "
            "classified over division algebras" % (check.witness,)
        )
    if check.status != DIVISION:
        warnings.append(
            "division check is unverified for these parameters; "
            "results assume the algebra is division"
        )
    Phi = companion(phi)
    found = central_roots(Phi, tol=alg.tol, max_pairs=max_pairs)
    warnings.extend(found.warnings)
    if found.discarded_degree:
        warnings.append(
            "discarded closure roots spanning degree %d (field degree > 2)"
            % found.discarded_degree
        )
    classes = []
    roots = []
    full_classes = []
    for cand in found.candidates:
        res = resolve_class(phi, cand)
        classes.append((cand, res))
        if res.status == SINGLE_ROOT:
            assert verify_root(phi, res.root)
            roots.append(res.root)
        elif res.status == FULL_CLASS:
            assert verify_root(phi, res.witness)
            full_classes.append((cand.trace, cand.norm, res.witness))
        elif res.status == NO_ROOT_IN_CLASS:
            warnings.append(
                "class (trace=%s, norm=%s) resolved to an empty class; this "
                "cannot happen for genuine companion classes and usually "
                "signals numeric drift" % (cand.trace, cand.norm)
            )
        elif res.status == UNDETERMINED:
            warnings.append(
                "class (trace=%s, norm=%s) undetermined: %s"
                % (cand.trace, cand.norm, res.reason)
            )
    return RootReport(
        algebra=alg,
        polynomial=phi,
        companion=Phi,
        classes=tuple(classes),
        roots=tuple(roots),
        full_classes=tuple(full_classes),
        mode=alg.mode,
        tolerance=alg.tol,
        warnings=tuple(warnings),
    )
