"""The generalized Mullineux involution on crystal-reachable multipartitions.

Negating every residue of the canonical word of a reachable multipartition
and rebuilding under the negated-and-reversed charge (-s_l, ..., -s_1)
gives an involution: applying the map for (-s_l, ..., -s_1) to the image
returns the original multipartition.  At level 1 with charge (0) the image
of a single row has the closed form computed by mullineux_typeA_row.
"""

from .core import Charge, Multipartition, Partition
from .crystal import build_from_sequence, g_sequence

__all__ = ["negated_charge", "mullineux", "mullineux_typeA_row"]


def negated_charge(charge: Charge) -> Charge:
    return Charge(tuple(-x for x in reversed(charge.s)), charge.e)


def mullineux(mp: Multipartition, charge: Charge) -> Multipartition:
    """Peel under charge, negate each residue modulo e, rebuild under the
    negated charge.  The input must be reachable for charge; the output is
    reachable for negated_charge(charge)."""
    word = g_sequence(mp, charge)
    negated = tuple((-i) % charge.e for i in word)
    return build_from_sequence(negated, negated_charge(charge))


def mullineux_typeA_row(n: int, e: int) -> Partition:
    """Image of the single row (n) at level 1, charge (0).

    With n = q(e-1) + r, 0 <= r <= e-2, the image is (q+1) repeated r times
    followed by q repeated e-1-r times; for n < e-1 this degenerates to a
    column, and for e = 2 to the row itself.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if e < 2:
        raise ValueError("e must be >= 2")
    q, r = divmod(n, e - 1)
    return Partition((q + 1,) * r + (q,) * (e - 1 - r))
