"""Acceptance criteria, one test per criterion.

Each test prints a single "criterion N: PASS/FAIL" line (visible under
`pytest -s`) and then asserts.  Criterion 1 pins an upstream reference
residue word that is internally inconsistent: the stated word rebuilds a
different multipartition than the one it is attributed to.  The assertion
keeps the stated value and therefore fails; the consistent behavior is
asserted in tests/test_crystal.py.
"""

import itertools
import random
import time
from pathlib import Path

from uglov import (
    Charge,
    Multipartition,
    Node,
    OneDimRep,
    VerificationReport,
    build_from_sequence,
    chi_between,
    chi_generic,
    chi_sigma,
    crystal_lower,
    enumerate_uglov,
    g_sequence,
    good_removable_node,
    i_word,
    is_flotw,
    is_uglov,
    label_general,
    labels_table,
    mullineux,
    mullineux_typeA_row,
    multipartitions_of,
    negated_charge,
    render_conformance,
    sweep_closed,
    sweep_typeB,
    word_letters,
)

from oracles import accel_asc, is_e_regular

REPO_ROOT = Path(__file__).resolve().parent.parent

DOMAIN_GRID = [
    (Charge(s, e))
    for e in (2, 3, 4)
    for level in (1, 2, 3)
    for s in itertools.combinations_with_replacement(range(e), level)
]


def _report(num: int, ok: bool, detail: str = "") -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, detail


def _layers(charge: Charge, n_max: int):
    """members of every crystal layer up to n_max, grown incrementally."""
    layer = {Multipartition.empty(charge.level)}
    members = set(layer)
    for _ in range(n_max):
        nxt = set()
        for mp in layer:
            for i in range(charge.e):
                low = crystal_lower(mp, charge, i)
                if low is not None:
                    nxt.add(low)
        layer = nxt
        members |= layer
    return members


def _timed(thunk) -> float:
    t0 = time.perf_counter()
    thunk()
    return time.perf_counter() - t0


def test_criterion_1_reference_node_example():
    charge = Charge((2, 0), 4)
    lam = Multipartition(((4,), (2, 1)))
    elapsed = min(
        _timed(lambda: (word_letters(i_word(lam, charge, 1)),
                        good_removable_node(lam, charge, 1),
                        g_sequence(lam, charge)))
        for _ in range(5)
    )
    word_ok = word_letters(i_word(lam, charge, 1)) == "RAR"
    removable_ok = good_removable_node(lam, charge, 1) == Node(1, 4, 1)
    stated = (2, 0, 3, 3, 0, 1, 1)
    seq = g_sequence(lam, charge)
    seq_ok = seq == stated
    problems = []
    if not word_ok:
        problems.append("word differs")
    if not removable_ok:
        problems.append("good removable differs")
    if not seq_ok:
        problems.append(
            f"g-sequence: stated {stated}, computed {seq}; the stated word "
            f"rebuilds {build_from_sequence(stated, charge).display()}, "
            f"not {lam.display()}"
        )
    if elapsed >= 0.001:
        problems.append(f"took {elapsed * 1000:.2f} ms")
    _report(1, not problems, "; ".join(problems) or f"{elapsed * 1e6:.0f} us")


def test_criterion_2_reference_swap():
    lam = Multipartition(((5, 5, 3, 1), (3, 1)))
    want = Multipartition(((5, 3, 1), (5, 3, 1)))
    ok = chi_sigma(lam, (1, 0), 1) == want
    details = []
    for e in (4, 7):
        if not is_uglov(lam, Charge((1, 0), e)):
            ok = False
            details.append(f"input not reachable at e={e}")
            continue
        if chi_generic(lam, (1, 0), (0, 1), e) != want:
            ok = False
            details.append(f"generic route differs at e={e}")
    _report(2, ok, "; ".join(details) or "swap and generic agree at e=4,7")


def test_criterion_3_four_component_labels():
    charge = Charge((3, 0, 7, 3), 4)
    bad = []
    for n in range(1, 13):
        want2 = (
            Multipartition(((), (n,), (), ()))
            if n <= 3
            else Multipartition(((), (3,), (n - 3,), ()))
        )
        if label_general(OneDimRep.trivial(n, 2), charge) != want2:
            bad.append(f"[{n},2]")
        want_others = Multipartition(((), (), (n,), ()))
        for j in (1, 3, 4):
            if label_general(OneDimRep.trivial(n, j), charge) != want_others:
                bad.append(f"[{n},{j}]")
    _report(3, not bad, ", ".join(bad) or "48 labels, n up to 12")


def test_criterion_4_closed_membership_equals_reachability():
    t0 = time.perf_counter()
    checked = 0
    mismatched = []
    for charge in DOMAIN_GRID:
        members = _layers(charge, 6)
        for n in range(7):
            for mp in multipartitions_of(n, charge.level):
                checked += 1
                if is_flotw(mp, charge) != (mp in members):
                    mismatched.append((charge.s, charge.e, mp.display()))
    elapsed = time.perf_counter() - t0
    ok = not mismatched and elapsed <= 120
    _report(
        4,
        ok,
        f"{len(mismatched)} mismatches" if mismatched else f"{checked} comparisons over "
        f"{len(DOMAIN_GRID)} charges in {elapsed:.1f} s",
    )


def test_criterion_5_level_one_counts():
    bad = []
    for e in range(2, 6):
        charge = Charge((0,), e)
        layer = {Multipartition.empty(1)}
        for n in range(1, 13):
            nxt = set()
            for mp in layer:
                for i in range(e):
                    low = crystal_lower(mp, charge, i)
                    if low is not None:
                        nxt.add(low)
            layer = nxt
            want = sum(1 for p in accel_asc(n) if is_e_regular(p, e))
            if len(layer) != want:
                bad.append(f"e={e} n={n}: {len(layer)} != {want}")
    _report(5, not bad, "; ".join(bad) or "layer sizes match regular counts, n up to 12")


def test_criterion_6_involution_and_row_form():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for charge in DOMAIN_GRID:
        neg = negated_charge(charge)
        for mp in _layers(charge, 6):
            image = mullineux(mp, charge)
            checked += 1
            if mullineux(image, neg) != mp:
                bad.append(f"{charge.s},e={charge.e}: {mp.display()}")
    for e in range(2, 7):
        charge = Charge((0,), e)
        for n in range(31):
            row = Multipartition(((n,) if n else (),))
            if mullineux(row, charge) != Multipartition((mullineux_typeA_row(n, e),)):
                bad.append(f"row form e={e} n={n}")
            checked += 1
    elapsed = time.perf_counter() - t0
    _report(6, not bad, "; ".join(bad[:4]) or f"{checked} images in {elapsed:.1f} s")


def test_criterion_7_closed_formula_conformance():
    t0 = time.perf_counter()
    stats: dict = {}
    mismatches: list = []
    charges = 0
    rng = random.Random(2026)
    for e in range(2, 6):
        charges += sweep_typeB(e, 2, 12, stats, mismatches)
        for s1 in range(-2 * e, 2 * e + 1):
            sweep_closed(Charge((s1,), e), 12, stats, mismatches)
            charges += 1
        for s1 in range(-2 * e, 2 * e + 1):
            for s2 in range(-2 * e, 2 * e + 1):
                sweep_closed(Charge((s1, s2), e), 12, stats, mismatches)
                charges += 1
        for level in (3, 4):
            for _ in range(500):
                s = tuple(rng.randrange(-2 * e, 2 * e + 1) for _ in range(level))
                sweep_closed(Charge(s, e), 12, stats, mismatches)
                charges += 1
    report = VerificationReport(stats, mismatches, charges)
    (REPO_ROOT / "CONFORMANCE.txt").write_text(render_conformance(report) + "\n")
    elapsed = time.perf_counter() - t0
    ok = report.ok and elapsed <= 300
    _report(
        7,
        ok,
        f"{len(mismatches)} mismatches"
        if mismatches
        else f"{report.labels_checked} labels over {charges} charges in {elapsed:.1f} s;"
        " report in CONFORMANCE.txt",
    )


def test_criterion_8_block_identities():
    bad = []
    for charge in DOMAIN_GRID:
        s, e, level = charge.s, charge.e, charge.level
        leaders = [1] + [j for j in range(2, level + 1) if s[j - 2] < s[j - 1]]
        bounds = leaders[1:] + [level + 1]
        neg = negated_charge(charge)
        for lead, bound in zip(leaders, bounds):
            for n in range(9):
                row_label = OneDimRep.trivial(n, lead).multipartition(level)
                for c in range(lead, bound):
                    if label_general(OneDimRep.trivial(n, c), charge) != row_label:
                        bad.append(f"row {s},e={e},[{n},{c}]")
                mirrored = OneDimRep.trivial(n, level + 2 - bound).multipartition(level)
                if label_general(OneDimRep.sign(n, lead), charge) != mullineux(
                    mirrored, neg
                ):
                    bad.append(f"column {s},e={e},[1^{n},{lead}]")
    _report(8, not bad, "; ".join(bad[:4]) or "row and column identities on ordered charges")


def test_criterion_9_e2_collapse():
    t0 = time.perf_counter()
    rng = random.Random(92)
    charges = [Charge((s1,), 2) for s1 in range(-4, 5)]
    charges += [Charge((s1, s2), 2) for s1 in range(-4, 5) for s2 in range(-4, 5)]
    for level in (3, 4):
        charges += [
            Charge(tuple(rng.randrange(-4, 5) for _ in range(level)), 2)
            for _ in range(500)
        ]
    bad = []
    for charge in charges:
        seen = set()
        for comp in range(1, charge.level + 1):
            k = charge.s[comp - 1] % 2
            if k in seen:
                continue
            seen.add(k)
            if labels_table("trivial", comp, charge, 12) != labels_table(
                "sign", comp, charge, 12
            ):
                bad.append(f"{charge.s}")
    elapsed = time.perf_counter() - t0
    _report(
        9,
        not bad,
        "; ".join(bad[:4]) or f"{len(charges)} charges, n up to 12, in {elapsed:.1f} s",
    )


def test_criterion_10_transport_properties():
    cases = [
        ((0,), (3,), (-6,), 3),
        ((2, 0), (0, 2), (4, -2), 4),
        ((2, 0), (-1, 3), (0, 5), 3),
        ((1, 0, 0), (0, 0, 4), (3, 1, -3), 3),
        ((0, 1, 1), (1, 1, 2), (1, 2, 3), 2),
    ]
    bad = []
    for s, s1, s2, e in cases:
        charge = Charge(s, e)
        c1 = Charge(s1, e)
        for n in range(7):
            for mp in enumerate_uglov(charge, n):
                first = chi_between(mp, s, s1, e)
                if g_sequence(first, c1) != g_sequence(mp, charge):
                    bad.append(f"word {s}->{s1} e={e} {mp.display()}")
                if chi_between(first, s1, s2, e) != chi_between(mp, s, s2, e):
                    bad.append(f"compose {s}->{s1}->{s2} e={e} {mp.display()}")
    _report(10, not bad, "; ".join(bad[:4]) or "word preservation and composition, n up to 6")
