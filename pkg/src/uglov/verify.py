"""Conformance sweeps for the closed label formulas.

The crystal itself is the oracle.  Every closed formula is replayed
against labels built letter by letter from the defining word, over grids
of level-2 charges and seeded random charges at higher levels.  Sweeps
are deterministic for a fixed seed.
"""

from dataclasses import dataclass
import random

from .core import Charge, Multipartition
from .crystal import ResidueSequenceError, crystal_lower
from .labels import (
    OneDimRep,
    _descending_hypothesis,
    label_sequence,
    label_sign_closed,
    label_trivial_closed,
    label_typeB,
    residue_class_map,
)

__all__ = [
    "Mismatch",
    "BranchStat",
    "VerificationReport",
    "labels_table",
    "typeB_branch",
    "sweep_typeB",
    "sweep_closed",
    "run_verification",
    "render_conformance",
]


@dataclass(frozen=True)
class Mismatch:
    """One disagreement between a closed formula and the crystal."""

    rep: OneDimRep
    s: tuple
    e: int
    branch: str
    expected: Multipartition
    actual: Multipartition

    def __str__(self) -> str:
        return (
            f"{self.branch}: rep {self.rep} at s={self.s} e={self.e} "
            f"expected {self.expected.display()} got {self.actual.display()}"
        )


@dataclass
class BranchStat:
    """Check counts for one formula branch."""

    branch: str
    condition: str
    note: str
    checked: int = 0
    failed: int = 0


@dataclass
class VerificationReport:
    stats: "dict[str, BranchStat]"
    mismatches: "list[Mismatch]"
    charges_checked: int

    @property
    def labels_checked(self) -> int:
        return sum(st.checked for st in self.stats.values())

    @property
    def ok(self) -> bool:
        return not self.mismatches


# branch -> (implemented condition, note); rows render in this order
_CATALOG = {
    "trivial s1=s2": ("s1 = s2", "single row in component 1"),
    "trivial s1>s2 comp1": ("s1 > s2", "single row stays in component 1"),
    "trivial s1>s2 comp2": ("s1 > s2", "row splits at j = (s1-s2) mod e"),
    "trivial s1<s2<s1+e comp1": ("s1 < s2 < s1+e", "single row stays in component 1"),
    "trivial s1<s2<s1+e comp2": ("s1 < s2", "single row stays in component 2"),
    "trivial s2>=s1+e comp1": ("s1+e <= s2", "row splits at j = (s2-s1) mod e"),
    "trivial s2>=s1+e comp2": ("s1 < s2", "single row stays in component 2"),
    "sign s1=s2": ("s1 = s2", "row image of the column in component 1"),
    "sign s1>s2 comp1": ("s1 > s2", "row image in component 1"),
    "sign s1>s2 comp2": ("s1 > s2", "column splits at j = (s2-s1) mod e"),
    "sign s1<s2<s1+e comp1": (
        "s1 < s2 < s1+e",
        "near-rectangle split by n = q(e-1)+r with d = s1+e-s2",
    ),
    "sign s1<s2<s1+e comp2": (
        "s1 < s2 < s1+e",
        "near-rectangle split by n = q(e-1)+r with d = s2-s1",
    ),
    "sign s2>=s1+e comp1": ("s1+e <= s2", "column splits at j = (s1+e-s2) mod e"),
    "sign s2>=s1+e comp2": ("s1+e <= s2", "row image in component 2"),
    "trivial closed": ("any level, any charge", "row split across residue classes"),
    "sign closed direct": (
        "class charges strictly decreasing left to right",
        "column split bottoming in a row image",
    ),
    "sign closed pullback": (
        "class charges not decreasing",
        "sorted-charge answer pulled back across the isomorphism",
    ),
}


def labels_table(kind: str, comp: int, charge: Charge, n_max: int) -> list:
    """Labels of sizes 0..n_max for one shape family, grown by a single
    lowering chain, so table[n] == label_general(rep of size n)."""
    seq = label_sequence(OneDimRep(kind, comp, n_max), charge)
    out = [Multipartition.empty(charge.level)]
    mp = out[0]
    for t, i in enumerate(seq):
        nxt = crystal_lower(mp, charge, i)
        if nxt is None:
            raise ResidueSequenceError(
                f"no good addable {i}-node after {t} steps of the {kind} word"
            )
        mp = nxt
        out.append(mp)
    return out


def typeB_branch(rep: OneDimRep, s1: int, s2: int, e: int) -> str:
    kind, comp = rep.kind, rep.comp
    if s1 == s2:
        return f"{kind} s1=s2"
    if s1 > s2:
        return f"{kind} s1>s2 comp{comp}"
    if s2 >= s1 + e:
        return f"{kind} s2>=s1+e comp{comp}"
    return f"{kind} s1<s2<s1+e comp{comp}"


def _record(stats: dict, branch: str, ok: bool) -> None:
    if branch not in stats:
        condition, note = _CATALOG.get(branch, ("-", "-"))
        stats[branch] = BranchStat(branch, condition, note)
    stats[branch].checked += 1
    if not ok:
        stats[branch].failed += 1


def sweep_typeB(e: int, span: int, n_max: int, stats: dict, mismatches: list) -> int:
    """Compare label_typeB with the crystal for every level-2 charge with
    entries in [-span*e, span*e] and every size up to n_max.  Returns the
    number of charges swept."""
    lo, hi = -span * e, span * e
    charges = 0
    for s1 in range(lo, hi + 1):
        for s2 in range(lo, hi + 1):
            charge = Charge((s1, s2), e)
            charges += 1
            tables = {}
            for kind in ("trivial", "sign"):
                for comp in (1, 2):
                    key = (kind, charge.s[comp - 1] % e)
                    if key not in tables:
                        tables[key] = labels_table(kind, comp, charge, n_max)
                    table = tables[key]
                    for n in range(n_max + 1):
                        rep = OneDimRep(kind, comp, n)
                        branch = typeB_branch(rep, s1, s2, e)
                        got = label_typeB(rep, s1, s2, e)
                        ok = got == table[n]
                        _record(stats, branch, ok)
                        if not ok:
                            mismatches.append(
                                Mismatch(rep, (s1, s2), e, branch, table[n], got)
                            )
    return charges


def sweep_closed(charge: Charge, n_max: int, stats: dict, mismatches: list) -> None:
    """Compare the closed recursions with the crystal for every shape
    family of the charge and every size up to n_max."""
    rcm = residue_class_map(charge)
    descending = _descending_hypothesis(charge, rcm)
    tables = {}
    for kind in ("trivial", "sign"):
        for comp in range(1, charge.level + 1):
            key = (kind, charge.s[comp - 1] % charge.e)
            if key not in tables:
                tables[key] = labels_table(kind, comp, charge, n_max)
            table = tables[key]
            if kind == "trivial":
                branch = "trivial closed"
                closed = label_trivial_closed
            else:
                branch = "sign closed direct" if descending else "sign closed pullback"
                closed = label_sign_closed
            for n in range(n_max + 1):
                rep = OneDimRep(kind, comp, n)
                got = closed(rep, charge)
                ok = got == table[n]
                _record(stats, branch, ok)
                if not ok:
                    mismatches.append(
                        Mismatch(rep, charge.s, charge.e, branch, table[n], got)
                    )


def run_verification(
    max_n: int = 8,
    span: int = 1,
    samples: int = 60,
    e_values: tuple = (2, 3, 4),
    seed: int = 0,
) -> VerificationReport:
    """Full sweep: exhaustive level-2 grids plus seeded random charges at
    levels 2..4 for the general closed recursions."""
    stats: dict = {}
    mismatches: list = []
    charges = 0
    for e in e_values:
        charges += sweep_typeB(e, span, max_n, stats, mismatches)
    rng = random.Random(seed)
    for e in e_values:
        for level in (2, 3, 4):
            for _ in range(samples):
                s = tuple(rng.randrange(-2 * e, 2 * e + 1) for _ in range(level))
                sweep_closed(Charge(s, e), max_n, stats, mismatches)
                charges += 1
    return VerificationReport(stats, mismatches, charges)


def render_conformance(report: VerificationReport) -> str:
    """Plain-text conformance table, one row per formula branch."""
    order = {name: i for i, name in enumerate(_CATALOG)}
    rows = sorted(
        report.stats.values(), key=lambda st: (order.get(st.branch, len(order)), st.branch)
    )
    header = ("branch", "implemented condition", "note", "checked", "failed")
    cells = [header] + [
        (st.branch, st.condition, st.note, str(st.checked), str(st.failed))
        for st in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for r, row in enumerate(cells):
        padded = [
            row[i].ljust(widths[i]) if i < 3 else row[i].rjust(widths[i])
            for i in range(len(header))
        ]
        lines.append(" | ".join(padded).rstrip())
        if r == 0:
            lines.append("-+-".join("-" * w for w in widths))
    lines.append("")
    lines.append(
        f"charges checked: {report.charges_checked}   "
        f"labels checked: {report.labels_checked}   "
        f"mismatches: {len(report.mismatches)}"
    )
    for m in report.mismatches[:20]:
        lines.append(f"  {m}")
    if len(report.mismatches) > 20:
        lines.append(f"  ... and {len(report.mismatches) - 20} more")
    return "\n".join(lines)
