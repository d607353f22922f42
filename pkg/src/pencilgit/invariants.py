"""Invariants of binary quartics and of pencils of cubics, and GIT stability.

For a quartic c0 t0^4 + 4 c1 t0^3 t1 + 6 c2 t0^2 t1^2 + 4 c3 t0 t1^3 + c4 t1^4:

    I = c0 c4 - 4 c1 c3 + 3 c2^2
    J = c0 c2 c4 + 2 c1 c2 c3 - c0 c3^2 - c1^2 c4 - c2^3

For a pencil with Plücker vector q, I' = 3 p03 - p12 and J is the quartic J
of the Wronskian, whose weighted coefficients are
(p01, p02/2, (3 p03 + p12)/6, p13/2, p23).  I'^2 = 12 I holds on the
Plücker quadric.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .forms import Pencil, ProjectivePoint, newstead_vector, weighted_quartic

SIX_CUBED = 216


class ZeroQuartic(ValueError):
    pass


class UnstableNoImage(ValueError):
    pass


@dataclass(frozen=True)
class QuarticInvariants:
    I: object
    J: object


@dataclass(frozen=True)
class PencilInvariants:
    Iprime: object
    J: object


class StabilityClass(enum.Enum):
    UNSTABLE = "Unstable"
    SEMISTABLE_PLUS = "StrictlySemistablePlus"
    SEMISTABLE_MINUS = "StrictlySemistableMinus"
    STABLE = "Stable"


def quartic_I(c: Sequence):
    c0, c1, c2, c3, c4 = c
    return c0 * c4 - 4 * c1 * c3 + 3 * c2 * c2


def quartic_J(c: Sequence):
    c0, c1, c2, c3, c4 = c
    return c0 * c2 * c4 + 2 * c1 * c2 * c3 - c0 * c3 * c3 - c1 * c1 * c4 - c2 * c2 * c2


def quartic_invariants(c: Sequence) -> QuarticInvariants:
    """I and J of a quartic given in the weighted convention (c0, ..., c4)."""
    if not any(c):
        raise ZeroQuartic("all coefficients vanish")
    return QuarticInvariants(quartic_I(c), quartic_J(c))


def iprime_of_plucker(q: Sequence):
    return 3 * q[2] - q[3]


def j_of_plucker(q: Sequence):
    return quartic_J(weighted_quartic(newstead_vector(q)))


def invariants_of_plucker(q: Sequence) -> PencilInvariants:
    """(I', J) of a raw Plücker vector, without any renormalization."""
    return PencilInvariants(iprime_of_plucker(q), j_of_plucker(q))


def pencil_invariants(p: Pencil) -> PencilInvariants:
    """(I', J) at the row-reduced basis of the pencil."""
    return invariants_of_plucker(p.plucker())


def newstead_point(p: Pencil) -> ProjectivePoint:
    """The quotient-map value (I'^3 : J)."""
    inv = pencil_invariants(p)
    if not inv.Iprime and not inv.J:
        raise UnstableNoImage("I' = J = 0: pencil is unstable")
    return ProjectivePoint(p.field, (inv.Iprime ** 3, inv.J))


def classify_stability(p: Pencil) -> StabilityClass:
    inv = pencil_invariants(p)
    if not inv.Iprime and not inv.J:
        return StabilityClass.UNSTABLE
    cube = inv.Iprime ** 3
    if cube == SIX_CUBED * inv.J:
        return StabilityClass.SEMISTABLE_PLUS
    if cube == -SIX_CUBED * inv.J:
        return StabilityClass.SEMISTABLE_MINUS
    return StabilityClass.STABLE
