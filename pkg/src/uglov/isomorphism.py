"""Charge-change bijections between crystal layers.

Two charges with equal residue multisets modulo e carry isomorphic
crystals: matching residue words of good-node paths pairs the reachable
multipartitions bijectively.  chi_generic realizes the pairing directly by
peeling under the source charge and rebuilding under the target.  Two fast
paths avoid the rebuild: a component rotation when the target charge is
(s_2, ..., s_l, s_1 + e), and a beta-number transfer between two adjacent
components when adjacent charge entries swap.  chi_between composes fast
paths along a canonical route through the weakly increasing fundamental
region, so it handles any pair of charges in one orbit.
"""

from .affine import AffineElement, act_on_charge
from .core import Charge, Multipartition, Partition
from .crystal import NotUglovError, build_from_sequence, g_sequence

__all__ = [
    "OrbitError",
    "chi_generic",
    "chi_tau",
    "chi_tau_inverse",
    "chi_sigma",
    "chi_between",
    "chi",
]


class OrbitError(ValueError):
    """The two charges are not related by the extended affine action."""


def chi_generic(mp: Multipartition, s, s_target, e: int) -> Multipartition:
    """Peel under (s, e), rebuild the same residue word under (s_target, e)."""
    s, s_target = tuple(s), tuple(s_target)
    if sorted(x % e for x in s) != sorted(x % e for x in s_target):
        raise OrbitError(
            f"{s} and {s_target} have different residue multisets modulo {e}"
        )
    word = g_sequence(mp, Charge(s, e))
    return build_from_sequence(word, Charge(s_target, e))


def chi_tau(mp: Multipartition) -> Multipartition:
    """Companion of the charge rotation (s_2, ..., s_l, s_1 + e)."""
    return Multipartition(tuple(mp[1:]) + (mp[0],))


def chi_tau_inverse(mp: Multipartition) -> Multipartition:
    return Multipartition((mp[-1],) + tuple(mp[:-1]))


def _beta_row(p: Partition, rows: int, charge_entry: int) -> list[int]:
    """First-column hook readings beta_a = p_a - a + charge_entry, a = 1..rows.

    Strictly decreasing in a, which the transfer below relies on.
    """
    return [p.part(a) - a + charge_entry for a in range(1, rows + 1)]


def _transfer(upper: Partition, lower: Partition, u: int, v: int) -> tuple[Partition, Partition]:
    # u > v; `upper` sits at the slot charged u, `lower` right after it at v.
    # Working bottom-up, each row of `lower` (padded to r - u + v rows)
    # captures the largest row of `upper` (padded to r rows) whose beta
    # number is not below its own; captured rows must strictly ascend or the
    # pair was not crystal-reachable.  The captured beta numbers swap over:
    # the k-th output row at the first slot grows by the captured amount,
    # the captured row of `upper` shrinks to the target.
    r = max(len(lower) + u - v, len(upper))
    rows = r - u + v
    beta_upper = _beta_row(upper, r, u)
    beta_lower = _beta_row(lower, rows, v)
    grown = [0] * rows
    shrunk = [upper.part(a) for a in range(1, r + 1)]
    limit = r
    for k in range(rows, 0, -1):
        target = beta_lower[k - 1]
        a = limit
        while a >= 1 and beta_upper[a - 1] < target:
            a -= 1
        if a == 0:
            raise NotUglovError("beta transfer failed: pair not crystal-reachable")
        grown[k - 1] = lower.part(k) + beta_upper[a - 1] - target
        shrunk[a - 1] = upper.part(a) - beta_upper[a - 1] + target
        limit = a - 1
    try:
        return Partition(grown), Partition(shrunk)
    except ValueError as exc:
        raise NotUglovError(f"beta transfer left an invalid partition: {exc}") from None


def _transfer_inverse(grown: Partition, shrunk: Partition, u: int, v: int) -> tuple[Partition, Partition]:
    # u > v; undo _transfer.  `grown` sits at the slot charged v, `shrunk`
    # right after it at u.  Rows of `grown`, taken top-down, release their
    # beta numbers back to the earliest unused row of `shrunk` whose beta
    # number does not exceed them.
    r = max(len(grown) + u - v, len(shrunk))
    rows = r - u + v
    beta_grown = _beta_row(grown, rows, v)
    beta_shrunk = _beta_row(shrunk, r, u)
    upper = [shrunk.part(a) for a in range(1, r + 1)]
    lower = [0] * rows
    prev = 0
    for k in range(1, rows + 1):
        ceiling = beta_grown[k - 1]
        a = 1
        while a <= r and beta_shrunk[a - 1] > ceiling:
            a += 1
        a = max(a, prev + 1)
        if a > r:
            raise NotUglovError("beta transfer failed: pair not crystal-reachable")
        upper[a - 1] = shrunk.part(a) - beta_shrunk[a - 1] + ceiling
        lower[k - 1] = beta_shrunk[a - 1] + k - v
        prev = a
    try:
        return Partition(upper), Partition(lower)
    except ValueError as exc:
        raise NotUglovError(f"beta transfer left an invalid partition: {exc}") from None


def chi_sigma(mp: Multipartition, s, i: int) -> Multipartition:
    """Companion of swapping charge entries i and i+1.

    Only components i and i+1 change, through a beta-number transfer that
    never reads the modulus, so the result is the same for every e under
    which mp is reachable.
    """
    s = tuple(s)
    if mp.level != len(s):
        raise ValueError(f"level mismatch: {mp.level} != {len(s)}")
    if not 1 <= i < len(s):
        raise ValueError(f"swap index {i} outside 1..{len(s) - 1}")
    u, v = s[i - 1], s[i]
    if u == v:
        return mp
    if u > v:
        first, second = _transfer(mp[i - 1], mp[i], u, v)
    else:
        first, second = _transfer_inverse(mp[i - 1], mp[i], v, u)
    return Multipartition(mp[: i - 1] + (first, second) + mp[i + 1 :])


def _canonical_moves(s: tuple[int, ...], e: int):
    """Generator moves taking s into the sorted window [0, e)^l.

    Returns (canonical charge, move list); moves are ("rot",), ("rot_inv",)
    and ("swap", i), applied left to right.
    """
    t = list(s)
    level = len(t)
    moves: list[tuple] = []

    def rot():
        t.append(t.pop(0) + e)
        moves.append(("rot",))

    def rot_inv():
        t.insert(0, t.pop() - e)
        moves.append(("rot_inv",))

    def swap(i):
        t[i - 1], t[i] = t[i], t[i - 1]
        moves.append(("swap", i))

    drop = min(t) // e
    for _ in range(abs(drop) * level):
        if drop > 0:
            rot_inv()
        else:
            rot()
    # entries are now >= 0 and stay so: each pass moves one maximal entry
    # >= e to the back and rotates it to the front reduced by e
    while max(t) >= e:
        pos = t.index(max(t)) + 1
        for i in range(pos, level):
            swap(i)
        rot_inv()
    for end in range(level, 1, -1):
        for i in range(1, end):
            if t[i - 1] > t[i]:
                swap(i)
    return tuple(t), moves


def _invert_moves(moves):
    flip = {"rot": ("rot_inv",), "rot_inv": ("rot",)}
    return [flip.get(mv[0], mv) for mv in reversed(moves)]


def _apply_moves(mp: Multipartition, s: tuple[int, ...], e: int, moves):
    t = list(s)
    for mv in moves:
        if mv[0] == "rot":
            mp = chi_tau(mp)
            t.append(t.pop(0) + e)
        elif mv[0] == "rot_inv":
            mp = chi_tau_inverse(mp)
            t.insert(0, t.pop() - e)
        else:
            i = mv[1]
            mp = chi_sigma(mp, tuple(t), i)
            t[i - 1], t[i] = t[i], t[i - 1]
    return mp, tuple(t)


def chi_between(mp: Multipartition, s, s_target, e: int) -> Multipartition:
    """Transport along fast paths; agrees with chi_generic on reachable input."""
    s, s_target = tuple(s), tuple(s_target)
    base, out_moves = _canonical_moves(s, e)
    base2, in_moves = _canonical_moves(s_target, e)
    if base != base2:
        raise OrbitError(f"{s} and {s_target} are not in one orbit modulo {e}")
    mid, t = _apply_moves(mp, s, e, out_moves)
    result, _ = _apply_moves(mid, t, e, _invert_moves(in_moves))
    return result


def chi(mp: Multipartition, s, elem: AffineElement, e: int) -> Multipartition:
    """Transport mp from charge s to charge elem . s."""
    s = tuple(s)
    return chi_between(mp, s, act_on_charge(elem, s, e), e)
