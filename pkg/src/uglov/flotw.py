"""Closed-form reachability test for weakly increasing charges.

When the charge satisfies 0 <= s_j - s_i < e for all i < j, crystal
reachability is equivalent to a local condition on the diagram: hereditary
row inequalities between consecutive components (wrapping from the last
back to the first with an e-shift) plus the requirement that the rows of
any fixed positive length never occupy all e residues.
"""

from .core import Charge, Multipartition

__all__ = ["ChargeDomainError", "in_domain", "is_flotw"]


class ChargeDomainError(ValueError):
    """Charge outside the region where the closed membership test applies."""


def in_domain(charge: Charge) -> bool:
    """True when 0 <= s_j - s_i < e for all i < j."""
    s, e = charge.s, charge.e
    return all(
        0 <= s[j] - s[i] < e
        for i in range(len(s))
        for j in range(i + 1, len(s))
    )


def is_flotw(mp: Multipartition, charge: Charge) -> bool:
    """Local reachability test; only valid for charges with in_domain true."""
    if not in_domain(charge):
        raise ChargeDomainError(
            f"charge {charge.s} is not weakly increasing with spread < e={charge.e}"
        )
    if mp.level != charge.level:
        raise ValueError(f"level mismatch: {mp.level} != {charge.level}")
    s, e, level = charge.s, charge.e, charge.level
    pairs = [(mp[j], mp[j + 1], s[j + 1] - s[j]) for j in range(level - 1)]
    pairs.append((mp[level - 1], mp[0], e + s[0] - s[level - 1]))
    for left, right, gap in pairs:
        # left.part(i) >= right.part(i + gap); rows past len(right) - gap
        # compare 0 >= 0 and can be skipped
        for i in range(1, len(right) - gap + 1):
            if left.part(i) < right.part(i + gap):
                return False
    residues: dict[int, set[int]] = {}
    for c in range(1, level + 1):
        for a, width in enumerate(mp[c - 1], start=1):
            residues.setdefault(width, set()).add((width - a + s[c - 1]) % e)
    return all(len(seen) < e for seen in residues.values())
