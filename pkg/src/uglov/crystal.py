"""Good-node calculus on charged multipartitions.

For a residue i modulo e, the addable and removable i-nodes of a charged
multipartition are totally ordered: smaller shifted content first, ties
resolved towards the higher component.  Listing them in increasing order
as letters A/R and cancelling adjacent RA factors leaves a reduced word of
shape A^p R^q; the rightmost surviving A is the good addable i-node, the
leftmost surviving R the good removable i-node.  The reduced shape does not
depend on the cancellation order.

Multipartitions reachable from the empty one by good-node additions form
the crystal layers enumerated here.  The residue word of such a path
determines its endpoint, and peeling good nodes back off recovers a
canonical word for every reachable multipartition.
"""

from typing import Iterable, NamedTuple, Optional

from .core import Charge, Multipartition, Node

__all__ = [
    "NotUglovError",
    "ResidueSequenceError",
    "WordEntry",
    "node_precedes",
    "i_word",
    "word_letters",
    "reduce_word",
    "good_addable_node",
    "good_removable_node",
    "crystal_lower",
    "crystal_raise",
    "build_from_sequence",
    "peel",
    "is_uglov",
    "g_sequence",
    "enumerate_uglov",
]


class NotUglovError(ValueError):
    """Raised when an operation needs a crystal-reachable multipartition."""


class ResidueSequenceError(ValueError):
    """Raised when a residue word asks for a good addable node that is absent."""


class WordEntry(NamedTuple):
    node: Node
    letter: str  # "A" for addable, "R" for removable


def node_precedes(a: Node, b: Node, charge: Charge) -> bool:
    """Strict order on same-residue nodes.

    Contents are compared as plain integers, never modulo e; at equal
    content the node in the higher component comes first.
    """
    return (charge.shifted_content(a), -a.comp) < (charge.shifted_content(b), -b.comp)


def i_word(mp: Multipartition, charge: Charge, i: int) -> tuple[WordEntry, ...]:
    """Addable and removable i-nodes in increasing order."""
    if mp.level != charge.level:
        raise ValueError(f"level mismatch: {mp.level} != {charge.level}")
    i %= charge.e
    entries = [WordEntry(n, "A") for n in mp.addable_nodes() if charge.residue(n) == i]
    entries += [WordEntry(n, "R") for n in mp.removable_nodes() if charge.residue(n) == i]
    entries.sort(key=lambda en: (charge.shifted_content(en.node), -en.node.comp))
    return tuple(entries)


def word_letters(word: Iterable[WordEntry]) -> str:
    return "".join(en.letter for en in word)


def reduce_word(letters: Iterable[str]) -> tuple[int, int]:
    """Cancel adjacent RA factors; the result has shape A^p R^q, return (p, q)."""
    stack: list[str] = []
    for letter in letters:
        if letter not in ("A", "R"):
            raise ValueError(f"letters must be 'A' or 'R', got {letter!r}")
        if letter == "A" and stack and stack[-1] == "R":
            stack.pop()
        else:
            stack.append(letter)
    p = sum(1 for x in stack if x == "A")
    return p, len(stack) - p


def _survivors(word: tuple[WordEntry, ...]) -> tuple[list[WordEntry], int]:
    stack: list[WordEntry] = []
    for en in word:
        if en.letter == "A" and stack and stack[-1].letter == "R":
            stack.pop()
        else:
            stack.append(en)
    p = 0
    while p < len(stack) and stack[p].letter == "A":
        p += 1
    return stack, p


def good_addable_node(mp: Multipartition, charge: Charge, i: int) -> Optional[Node]:
    stack, p = _survivors(i_word(mp, charge, i))
    return stack[p - 1].node if p > 0 else None


def good_removable_node(mp: Multipartition, charge: Charge, i: int) -> Optional[Node]:
    stack, p = _survivors(i_word(mp, charge, i))
    return stack[p].node if p < len(stack) else None


def crystal_lower(mp: Multipartition, charge: Charge, i: int) -> Optional[Multipartition]:
    """Add the good addable i-node, or None when there is none."""
    node = good_addable_node(mp, charge, i)
    return None if node is None else mp.add_node(node)


def crystal_raise(mp: Multipartition, charge: Charge, i: int) -> Optional[Multipartition]:
    """Remove the good removable i-node, or None when there is none."""
    node = good_removable_node(mp, charge, i)
    return None if node is None else mp.remove_node(node)


def build_from_sequence(seq: Iterable[int], charge: Charge) -> Multipartition:
    """Starting from the empty multipartition, add good nodes with the given
    residues.  Raises ResidueSequenceError when a step has no good addable
    node of the requested residue."""
    mp = Multipartition.empty(charge.level)
    for step, i in enumerate(seq, start=1):
        nxt = crystal_lower(mp, charge, i)
        if nxt is None:
            raise ResidueSequenceError(
                f"no good addable {i % charge.e}-node at step {step}"
                f" (reached {mp.display()})"
            )
        mp = nxt
    return mp


def peel(mp: Multipartition, charge: Charge) -> tuple[Multipartition, tuple[int, ...]]:
    """Remove good nodes, smallest residue first, until none is left.

    Returns the terminal multipartition and the removal residues reversed,
    so that build_from_sequence replays the input whenever the terminal
    multipartition is empty.  Any other removal rule terminates at the same
    multipartition; the smallest-residue rule pins down one canonical word.
    """
    removed = []
    while True:
        for i in range(charge.e):
            node = good_removable_node(mp, charge, i)
            if node is not None:
                mp = mp.remove_node(node)
                removed.append(i)
                break
        else:
            return mp, tuple(reversed(removed))


def is_uglov(mp: Multipartition, charge: Charge) -> bool:
    """Whether mp is reachable from the empty multipartition by good-node
    additions."""
    apex, _ = peel(mp, charge)
    return apex.rank == 0


def g_sequence(mp: Multipartition, charge: Charge) -> tuple[int, ...]:
    """The canonical residue word of a reachable multipartition."""
    apex, seq = peel(mp, charge)
    if apex.rank != 0:
        raise NotUglovError(
            f"{mp.display()} is not reachable for charge {charge.s}, e={charge.e}"
        )
    return seq


def enumerate_uglov(charge: Charge, n: int) -> frozenset[Multipartition]:
    """All multipartitions reachable by exactly n good-node additions."""
    if n < 0:
        raise ValueError("n must be >= 0")
    layer = {Multipartition.empty(charge.level)}
    for _ in range(n):
        nxt = set()
        for mp in layer:
            for i in range(charge.e):
                low = crystal_lower(mp, charge, i)
                if low is not None:
                    nxt.add(low)
        layer = nxt
    return frozenset(layer)
