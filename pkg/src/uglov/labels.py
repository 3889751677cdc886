"""Labels of the one-dimensional modules in the crystal.

At level l there are 2l one-dimensional shapes: a single row [n, j] or a
single column [1^n, j] sitting in component j.  Under a charge each of
them corresponds to a reachable multipartition, its label: the row shape
is reached by the ascending residue word k, k+1, ... and the column shape
by the descending word k, k-1, ..., where k = s_j mod e.  In particular
the label depends on j only through the residue class of s_j.

label_general runs the crystal on that word.  label_trivial_closed and
label_sign_closed reproduce it by closed recursions that never run the
crystal, except that unordered charges route the column case through a
component permutation pulled back across a charge-change isomorphism.
label_typeB carries fully explicit formulas for level 2.
"""

from dataclasses import dataclass

from .core import Charge, Multipartition, Partition, multipartition_sum
from .crystal import build_from_sequence
from .isomorphism import chi_between
from .mullineux import mullineux_typeA_row

__all__ = [
    "OneDimRep",
    "ResidueClassMap",
    "residue_class_map",
    "label_sequence",
    "label_general",
    "label_trivial_closed",
    "label_sign_closed",
    "label_typeB",
    "one_dim_label_set",
]


@dataclass(frozen=True)
class OneDimRep:
    """A one-dimensional shape: kind "trivial" is the single row (n) in
    component comp, kind "sign" the single column (1^n)."""

    kind: str
    comp: int
    size: int

    def __post_init__(self):
        if self.kind not in ("trivial", "sign"):
            raise ValueError(f"kind must be 'trivial' or 'sign', got {self.kind!r}")
        if self.comp < 1:
            raise ValueError("component index is 1-based")
        if self.size < 0:
            raise ValueError("size must be >= 0")

    @classmethod
    def trivial(cls, n: int, j: int) -> "OneDimRep":
        return cls("trivial", j, n)

    @classmethod
    def sign(cls, n: int, j: int) -> "OneDimRep":
        return cls("sign", j, n)

    def multipartition(self, level: int) -> Multipartition:
        """The shape itself as a multipartition of the given level."""
        if self.comp > level:
            raise ValueError(f"component {self.comp} outside level {level}")
        if self.kind == "trivial":
            return _row_shape(self.size, self.comp, level)
        return _col_shape(self.size, self.comp, level)

    def __str__(self) -> str:
        if self.kind == "trivial":
            return f"[{self.size},{self.comp}]"
        return f"[1^{self.size},{self.comp}]"


@dataclass(frozen=True)
class ResidueClassMap:
    """The residue classes hit by a charge, with one component per class:
    alpha[k] is the smallest component index carrying the largest charge
    entry congruent to k."""

    residues: tuple[int, ...]
    alpha: dict


def residue_class_map(charge: Charge) -> ResidueClassMap:
    best: dict[int, int] = {}
    for j, x in enumerate(charge.s, start=1):
        k = x % charge.e
        if k not in best or x > charge.s[best[k] - 1]:
            best[k] = j
    return ResidueClassMap(tuple(sorted(best)), best)


def _row_shape(n: int, comp: int, level: int) -> Multipartition:
    parts = [()] * level
    parts[comp - 1] = (n,) if n else ()
    return Multipartition(parts)


def _col_shape(n: int, comp: int, level: int) -> Multipartition:
    parts = [()] * level
    parts[comp - 1] = (1,) * n
    return Multipartition(parts)


def _placed(p: Partition, comp: int, level: int) -> Multipartition:
    parts = [Partition()] * level
    parts[comp - 1] = p
    return Multipartition(parts)


def label_sequence(rep: OneDimRep, charge: Charge) -> tuple[int, ...]:
    """Ascending residues from s_j for the row shape, descending for the
    column shape."""
    if rep.comp > charge.level:
        raise ValueError(f"component {rep.comp} outside level {charge.level}")
    k = charge.s[rep.comp - 1] % charge.e
    step = 1 if rep.kind == "trivial" else -1
    return tuple((k + step * t) % charge.e for t in range(rep.size))


def label_general(rep: OneDimRep, charge: Charge) -> Multipartition:
    """The label, computed by running the crystal on the rep's word."""
    return build_from_sequence(label_sequence(rep, charge), charge)


def label_trivial_closed(rep: OneDimRep, charge: Charge) -> Multipartition:
    """Closed recursion for row labels.

    Growth stays in the row of component alpha(k) until the first residue
    class whose component would capture it; the captured remainder recurses
    on that class.
    """
    if rep.kind != "trivial":
        raise ValueError("label_trivial_closed needs a trivial rep")
    if rep.comp > charge.level:
        raise ValueError(f"component {rep.comp} outside level {charge.level}")
    rcm = residue_class_map(charge)
    k = charge.s[rep.comp - 1] % charge.e
    return _trivial_closed(rep.size, k, charge, rcm)


def _trivial_closed(n: int, k: int, charge: Charge, rcm: ResidueClassMap) -> Multipartition:
    s, e, level = charge.s, charge.e, charge.level
    home = rcm.alpha[k]
    if n == 0:
        return Multipartition.empty(level)

    def keeps_row(k1: int) -> bool:
        sa, sa1 = s[rcm.alpha[k] - 1], s[rcm.alpha[k1] - 1]
        return sa > sa1 or (sa1 > sa > sa1 - e and rcm.alpha[k] < rcm.alpha[k1])

    blockers = [k1 for k1 in rcm.residues if k1 != k and not keeps_row(k1)]
    if not blockers:
        return _row_shape(n, home, level)
    j, k1 = min(((k1 - k) % e, k1) for k1 in blockers)
    if n <= j:
        return _row_shape(n, home, level)
    return multipartition_sum(
        _row_shape(j, home, level), _trivial_closed(n - j, k1, charge, rcm)
    )


def _descending_hypothesis(charge: Charge, rcm: ResidueClassMap) -> bool:
    # class representatives taken left to right must carry strictly
    # decreasing charge entries
    comps = sorted(rcm.alpha.values())
    values = [charge.s[a - 1] for a in comps]
    return all(x > y for x, y in zip(values, values[1:]))


def _descending_sort_perm(s: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(range(len(s)), key=lambda i: -s[i])
    perm = [0] * len(s)
    for pos, i in enumerate(order):
        perm[i] = pos + 1
    return tuple(perm)


def label_sign_closed(rep: OneDimRep, charge: Charge) -> Multipartition:
    """Closed recursion for column labels.

    When the class representatives are ordered with strictly decreasing
    charges, the column splits into columns captured by earlier classes,
    bottoming out in the row-image partition of mullineux_typeA_row.
    Otherwise sort the charge, relabel the component accordingly, and pull
    the sorted answer back across the charge-change isomorphism.
    """
    if rep.kind != "sign":
        raise ValueError("label_sign_closed needs a sign rep")
    if rep.comp > charge.level:
        raise ValueError(f"component {rep.comp} outside level {charge.level}")
    rcm = residue_class_map(charge)
    k = charge.s[rep.comp - 1] % charge.e
    if _descending_hypothesis(charge, rcm):
        return _sign_closed_ordered(rep.size, k, charge, rcm)
    perm = _descending_sort_perm(charge.s)
    sorted_s = [0] * charge.level
    for i, image in enumerate(perm):
        sorted_s[image - 1] = charge.s[i]
    sorted_charge = Charge(tuple(sorted_s), charge.e)
    moved = OneDimRep.sign(rep.size, perm[rep.comp - 1])
    image = label_sign_closed(moved, sorted_charge)
    return chi_between(image, sorted_charge.s, charge.s, charge.e)


def _sign_closed_ordered(n: int, k: int, charge: Charge, rcm: ResidueClassMap) -> Multipartition:
    e, level = charge.e, charge.level
    if n == 0:
        return Multipartition.empty(level)
    order = sorted(rcm.residues, key=lambda kk: rcm.alpha[kk])
    i = order.index(k)
    if i == 0:
        return _placed(mullineux_typeA_row(n, e), rcm.alpha[k], level)
    x, earlier = min(((k - order[jj]) % e, order[jj]) for jj in range(i))
    if n <= x:
        return _col_shape(n, rcm.alpha[k], level)
    return multipartition_sum(
        _col_shape(x, rcm.alpha[k], level),
        _sign_closed_ordered(n - x, earlier, charge, rcm),
    )


def label_typeB(rep: OneDimRep, s1: int, s2: int, e: int) -> Multipartition:
    """Fully explicit level-2 labels, one branch per charge comparison."""
    if rep.comp not in (1, 2):
        raise ValueError("label_typeB is for level 2")
    if e < 2:
        raise ValueError("e must be >= 2")
    n = rep.size
    trivial = rep.kind == "trivial"
    first = rep.comp == 1
    empty = Partition()

    def row(m: int) -> Partition:
        return Partition((m,) if m else ())

    def col(m: int) -> Partition:
        return Partition((1,) * m)

    def pair(p: Partition, q: Partition) -> Multipartition:
        return Multipartition((p, q))

    if s1 == s2:
        return pair(row(n), empty) if trivial else pair(mullineux_typeA_row(n, e), empty)

    if s1 > s2:
        if trivial:
            if first:
                return pair(row(n), empty)
            j = (s1 - s2) % e
            return pair(empty, row(n)) if n <= j else pair(row(n - j), row(j))
        if first:
            return pair(mullineux_typeA_row(n, e), empty)
        j = (s2 - s1) % e
        return pair(empty, col(n)) if n <= j else pair(mullineux_typeA_row(n - j, e), col(j))

    # s2 > s1
    if trivial:
        if not first:
            return pair(empty, row(n))
        if s2 < s1 + e:
            return pair(row(n), empty)
        j = (s2 - s1) % e
        return pair(row(n), empty) if n <= j else pair(row(j), row(n - j))
    if s2 >= s1 + e:
        if not first:
            return pair(empty, mullineux_typeA_row(n, e))
        j = (s1 + e - s2) % e
        return pair(col(n), empty) if n <= j else pair(col(j), mullineux_typeA_row(n - j, e))

    # s1 < s2 < s1 + e: both column labels split by n = q(e-1) + r
    q, r = divmod(n, e - 1)
    if not first:
        d = s2 - s1
        if d <= r:
            return pair(
                Partition((q + 1,) * (r - d) + (q,) * (e - 1 - r)),
                Partition((q + 1,) * d),
            )
        return pair(
            Partition((q,) * (e - 1 - d)),
            Partition((q + 1,) * r + (q,) * (d - r)),
        )
    d = s1 + e - s2
    if d <= r:
        return pair(
            Partition((q + 1,) * d),
            Partition((q + 1,) * (r - d) + (q,) * (e - 1 - r)),
        )
    return pair(
        Partition((q + 1,) * r + (q,) * (d - r)),
        Partition((q,) * (e - 1 - d)),
    )


def one_dim_label_set(charge: Charge, n: int):
    """All 2l labels of size n via label_general; equal labels mark shapes
    that share one reachable multipartition."""
    reps = [OneDimRep.trivial(n, j) for j in range(1, charge.level + 1)]
    reps += [OneDimRep.sign(n, j) for j in range(1, charge.level + 1)]
    return tuple((rep, label_general(rep, charge)) for rep in reps)
