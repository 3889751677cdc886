"""Integer partitions, multipartitions, and Young-diagram nodes.

Partitions are weakly decreasing tuples of positive integers; trailing
zeros are stripped on construction so equality and hashing are canonical.
Multipartitions are fixed-length tuples of partitions whose boxes are
addressed by Node(row, col, comp) triples, every index 1-based.  A Charge
attaches an integer s_c to each component together with a modulus e >= 2,
giving every node the shifted content col - row + s_c and a residue
modulo e.

Everything here is immutable; operations return new values.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Node",
    "Partition",
    "Multipartition",
    "Charge",
    "multipartition_sum",
    "partitions_of",
    "multipartitions_of",
]


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if not all(isinstance(p, int) for p in parts):
            raise ValueError(f"partition parts must be integers: {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be nonnegative: {parts!r}")
        return super().__new__(cls, parts)

    @property
    def rank(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; parts beyond the stored length are 0."""
        if i < 1:
            raise IndexError("part index is 1-based")
        return self[i - 1] if i <= len(self) else 0

    def display(self) -> str:
        return ".".join(str(p) for p in self) if self else "-"

    @classmethod
    def from_display(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "-"):
            return cls()
        try:
            return cls(int(piece) for piece in text.split("."))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition from {text!r}: {exc}") from None

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Multipartition(tuple):
    """A fixed-length tuple of partitions; the length is the level."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(
            p if isinstance(p, Partition) else Partition(p) for p in components
        )
        if not comps:
            raise ValueError("a multipartition has at least one component")
        return super().__new__(cls, comps)

    @classmethod
    def empty(cls, level: int) -> "Multipartition":
        if level < 1:
            raise ValueError("level must be >= 1")
        return cls(() for _ in range(level))

    @property
    def level(self) -> int:
        return len(self)

    @property
    def rank(self) -> int:
        return sum(p.rank for p in self)

    def component(self, c: int) -> Partition:
        """Component c, 1-based."""
        if not 1 <= c <= len(self):
            raise IndexError(f"component {c} out of range 1..{len(self)}")
        return self[c - 1]

    def part(self, c: int, a: int) -> int:
        return self.component(c).part(a)

    def nodes(self) -> Iterator[Node]:
        for c, comp in enumerate(self, start=1):
            for a, width in enumerate(comp, start=1):
                for b in range(1, width + 1):
                    yield Node(a, b, c)

    def contains(self, node: Node) -> bool:
        a, b, c = node
        return 1 <= c <= len(self) and a >= 1 and 1 <= b <= self[c - 1].part(a)

    def addable_nodes(self) -> tuple[Node, ...]:
        """Boxes whose addition leaves a valid diagram, one per corner."""
        out = []
        for c, comp in enumerate(self, start=1):
            for a in range(1, len(comp) + 2):
                width = comp.part(a)
                if a == 1 or width < comp[a - 2]:
                    out.append(Node(a, width + 1, c))
        return tuple(out)

    def removable_nodes(self) -> tuple[Node, ...]:
        """Boxes whose removal leaves a valid diagram."""
        out = []
        for c, comp in enumerate(self, start=1):
            for a in range(1, len(comp) + 1):
                width = comp[a - 1]
                if width > comp.part(a + 1):
                    out.append(Node(a, width, c))
        return tuple(out)

    def add_node(self, node: Node) -> "Multipartition":
        a, b, c = node
        comp = self.component(c)
        if a < 1 or b != comp.part(a) + 1 or (a > 1 and comp.part(a - 1) < b):
            raise ValueError(f"{node} is not an addable node of {self.display()}")
        parts = list(comp) + [0] * (a - len(comp))
        parts[a - 1] += 1
        return Multipartition(self[: c - 1] + (Partition(parts),) + self[c:])

    def remove_node(self, node: Node) -> "Multipartition":
        a, b, c = node
        comp = self.component(c)
        if a < 1 or b == 0 or b != comp.part(a) or comp.part(a + 1) >= b:
            raise ValueError(f"{node} is not a removable node of {self.display()}")
        parts = list(comp)
        parts[a - 1] -= 1
        return Multipartition(self[: c - 1] + (Partition(parts),) + self[c:])

    def display(self) -> str:
        return "|".join(p.display() for p in self)

    @classmethod
    def from_display(cls, text: str) -> "Multipartition":
        return cls(Partition.from_display(piece) for piece in text.split("|"))

    def to_lists(self) -> list[list[int]]:
        return [list(p) for p in self]

    def __repr__(self) -> str:
        return f"Multipartition({self.display()!r})"


@dataclass(frozen=True)
class Charge:
    """A component charge vector s together with the residue modulus e >= 2."""

    s: tuple[int, ...]
    e: int

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        if not self.s or not all(isinstance(x, int) for x in self.s):
            raise ValueError(f"charge must be a nonempty tuple of integers: {self.s!r}")
        if not isinstance(self.e, int) or self.e < 2:
            raise ValueError(f"e must be an integer >= 2, got {self.e!r}")

    @property
    def level(self) -> int:
        return len(self.s)

    def shifted_content(self, node: Node) -> int:
        if not 1 <= node.comp <= len(self.s):
            raise ValueError(f"node component {node.comp} outside level {len(self.s)}")
        return node.col - node.row + self.s[node.comp - 1]

    def residue(self, node: Node) -> int:
        return self.shifted_content(node) % self.e


def multipartition_sum(mu: Multipartition, nu: Multipartition) -> Multipartition:
    """Componentwise partwise sum, shorter partitions padded with zeros."""
    if mu.level != nu.level:
        raise ValueError(f"levels differ: {mu.level} != {nu.level}")
    comps = []
    for p, q in zip(mu, nu):
        rows = max(len(p), len(q))
        comps.append(Partition(p.part(i) + q.part(i) for i in range(1, rows + 1)))
    return Multipartition(comps)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in lexicographically decreasing order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def multipartitions_of(n: int, level: int) -> Iterator[Multipartition]:
    """All multipartitions of n with the given number of components."""
    if level < 1:
        raise ValueError("level must be >= 1")
    if level == 1:
        for p in partitions_of(n):
            yield Multipartition((p,))
        return
    for head in range(n, -1, -1):
        for p in partitions_of(head):
            for rest in multipartitions_of(n - head, level - 1):
                yield Multipartition((p,) + tuple(rest))
