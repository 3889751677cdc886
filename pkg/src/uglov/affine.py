"""The extended affine symmetric group acting on charge vectors.

Elements are kept in the normal form (perm, shift): acting on a charge
first adds e * shift[i] to slot i+1, then moves the value at slot i+1 to
slot perm[i].  Generators: transposition(l, i) swaps slots i and i+1,
translation(l, i) adds e to slot i, and rotation(l) sends (s_1, ..., s_l)
to (s_2, ..., s_l, s_1 + e).  The l-th power of the rotation translates
every slot by e at once.

Every orbit meets the fundamental region of weakly increasing charges
with entries in [0, e) exactly once; reduce_to_domain lands there and
returns a witness element.
"""

from dataclasses import dataclass

from .core import Multipartition

__all__ = [
    "AffineElement",
    "identity",
    "transposition",
    "translation",
    "rotation",
    "act_on_charge",
    "compose",
    "inverse",
    "permute_vector",
    "permute_components",
    "reduce_to_domain",
]


@dataclass(frozen=True)
class AffineElement:
    perm: tuple[int, ...]
    shift: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "shift", tuple(self.shift))
        level = len(self.perm)
        if sorted(self.perm) != list(range(1, level + 1)):
            raise ValueError(f"perm must list the images of 1..l, got {self.perm!r}")
        if len(self.shift) != level or not all(isinstance(x, int) for x in self.shift):
            raise ValueError(f"shift must be {level} integers, got {self.shift!r}")

    @property
    def level(self) -> int:
        return len(self.perm)


def identity(level: int) -> AffineElement:
    return AffineElement(tuple(range(1, level + 1)), (0,) * level)


def transposition(level: int, i: int) -> AffineElement:
    """Swap slots i and i+1."""
    if not 1 <= i < level:
        raise ValueError(f"transposition index {i} outside 1..{level - 1}")
    perm = list(range(1, level + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return AffineElement(tuple(perm), (0,) * level)


def translation(level: int, i: int) -> AffineElement:
    """Add e to slot i."""
    if not 1 <= i <= level:
        raise ValueError(f"translation index {i} outside 1..{level}")
    shift = [0] * level
    shift[i - 1] = 1
    return AffineElement(tuple(range(1, level + 1)), tuple(shift))


def rotation(level: int) -> AffineElement:
    """Send (s_1, ..., s_l) to (s_2, ..., s_l, s_1 + e)."""
    perm = (level,) + tuple(range(1, level))
    shift = (1,) + (0,) * (level - 1)
    return AffineElement(perm, shift)


def permute_vector(perm: tuple[int, ...], values: tuple) -> tuple:
    """Move the value at slot i to slot perm[i-1]."""
    out = [None] * len(values)
    for i, image in enumerate(perm):
        out[image - 1] = values[i]
    return tuple(out)


def act_on_charge(elem: AffineElement, s: tuple[int, ...], e: int) -> tuple[int, ...]:
    if elem.level != len(s):
        raise ValueError(f"level mismatch: {elem.level} != {len(s)}")
    shifted = tuple(x + e * d for x, d in zip(s, elem.shift))
    return permute_vector(elem.perm, shifted)


def compose(a: AffineElement, b: AffineElement) -> AffineElement:
    """The element acting as a after b."""
    if a.level != b.level:
        raise ValueError("levels differ")
    perm = tuple(a.perm[b.perm[i] - 1] for i in range(a.level))
    shift = tuple(b.shift[i] + a.shift[b.perm[i] - 1] for i in range(a.level))
    return AffineElement(perm, shift)


def inverse(a: AffineElement) -> AffineElement:
    inv = [0] * a.level
    for i, image in enumerate(a.perm):
        inv[image - 1] = i + 1
    shift = tuple(-x for x in permute_vector(a.perm, a.shift))
    return AffineElement(tuple(inv), shift)


def permute_components(perm: tuple[int, ...], mp: Multipartition) -> Multipartition:
    """Move component i to slot perm[i-1]."""
    if len(perm) != mp.level:
        raise ValueError("level mismatch")
    return Multipartition(permute_vector(perm, tuple(mp)))


def reduce_to_domain(s: tuple[int, ...], e: int) -> tuple[tuple[int, ...], AffineElement]:
    """Return (s0, g) with s0 weakly increasing in [0, e) and g sending s0 to s.

    Residues are sorted stably, so both the representative and the witness
    are deterministic.
    """
    s = tuple(s)
    if e < 2:
        raise ValueError("e must be >= 2")
    quotients = [x // e for x in s]
    residues = [x % e for x in s]
    order = sorted(range(len(s)), key=lambda i: residues[i])
    s0 = tuple(residues[i] for i in order)
    witness = AffineElement(
        perm=tuple(i + 1 for i in order),
        shift=tuple(quotients[i] for i in order),
    )
    return s0, witness
