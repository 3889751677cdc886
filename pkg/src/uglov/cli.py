"""Command-line interface.

Multipartitions are written in display form: parts of one component are
joined by dots, components by "|", and an empty component is "-".  So
"5.3.1|2|-" is ((5,3,1),(2),()) at level 3.  Charges are comma lists.

Exit codes: 0 success, 1 verification found mismatches, 2 bad input,
3 cross-check disagreement under --check.
"""

import argparse
import json
import sys

from .affine import AffineElement, act_on_charge
from .core import Charge, Multipartition
from .crystal import (
    build_from_sequence,
    g_sequence,
    good_addable_node,
    good_removable_node,
    enumerate_uglov,
    i_word,
    is_uglov,
    reduce_word,
    word_letters,
)
from .flotw import is_flotw
from .isomorphism import chi, chi_between
from .labels import (
    OneDimRep,
    label_general,
    label_sign_closed,
    label_trivial_closed,
    label_typeB,
)
from .mullineux import mullineux, negated_charge
from .verify import render_conformance, run_verification

__all__ = ["main", "build_parser"]


def _charge(args) -> Charge:
    try:
        s = tuple(int(x) for x in args.charge.split(","))
    except ValueError:
        raise ValueError(f"cannot parse charge {args.charge!r}; expected e.g. 2,0")
    return Charge(s, args.e)


def _mp(text: str, charge: Charge) -> Multipartition:
    mp = Multipartition.from_display(text)
    if mp.level != charge.level:
        raise ValueError(
            f"multipartition has level {mp.level} but charge has level {charge.level}"
        )
    return mp


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(text)


def cmd_good(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    add = good_addable_node(mp, charge, args.i)
    rem = good_removable_node(mp, charge, args.i)
    if args.json:
        print(
            json.dumps(
                {
                    "addable": list(add) if add else None,
                    "removable": list(rem) if rem else None,
                },
                separators=(",", ":"),
            )
        )
    else:
        print(f"addable: {add if add else 'none'}")
        print(f"removable: {rem if rem else 'none'}")
    return 0


def cmd_word(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    entries = i_word(mp, charge, args.i)
    letters = word_letters(entries)
    p, q = reduce_word(letters)
    if args.json:
        print(
            json.dumps(
                {
                    "word": letters,
                    "nodes": [[*entry.node] for entry in entries],
                    "reduced": {"a": p, "r": q},
                },
                separators=(",", ":"),
            )
        )
        return 0
    print(f"word: {letters if letters else '(empty)'}")
    if entries:
        print("nodes: " + " ".join(f"{entry.node}{entry.letter}" for entry in entries))
    print(f"reduced: A^{p} R^{q}")
    return 0


def cmd_member(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    ok = is_uglov(mp, charge)
    _emit(args, ok, "yes" if ok else "no")
    return 0


def cmd_flotw(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    ok = is_flotw(mp, charge)
    _emit(args, ok, "yes" if ok else "no")
    return 0


def cmd_gseq(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    seq = g_sequence(mp, charge)
    _emit(args, list(seq), ",".join(map(str, seq)) if seq else "(empty)")
    return 0


def cmd_build(args) -> int:
    charge = _charge(args)
    try:
        seq = tuple(int(x) for x in args.sequence.split(",")) if args.sequence else ()
    except ValueError:
        raise ValueError(f"cannot parse residue sequence {args.sequence!r}")
    mp = build_from_sequence(seq, charge)
    _emit(args, mp.to_lists(), mp.display())
    return 0


def cmd_enumerate(args) -> int:
    charge = _charge(args)
    members = sorted(m.display() for m in enumerate_uglov(charge, args.n))
    if args.count:
        _emit(args, len(members), str(len(members)))
        return 0
    if args.json:
        print(
            json.dumps(
                [Multipartition.from_display(d).to_lists() for d in members],
                separators=(",", ":"),
            )
        )
    else:
        for d in members:
            print(d)
    return 0


def cmd_iso(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    if args.to is not None:
        try:
            target = tuple(int(x) for x in args.to.split(","))
        except ValueError:
            raise ValueError(f"cannot parse target charge {args.to!r}")
        if len(target) != charge.level:
            raise ValueError("target charge has the wrong level")
        image = chi_between(mp, charge.s, target, charge.e)
    else:
        try:
            perm = tuple(int(x) for x in args.perm.split(","))
        except ValueError:
            raise ValueError(f"cannot parse permutation {args.perm!r}")
        if args.shift is not None:
            try:
                shift = tuple(int(x) for x in args.shift.split(","))
            except ValueError:
                raise ValueError(f"cannot parse shift {args.shift!r}")
        else:
            shift = (0,) * charge.level
        elem = AffineElement(perm, shift)
        target = act_on_charge(elem, charge.s, charge.e)
        image = chi(mp, charge.s, elem, charge.e)
    _emit(
        args,
        {"charge": list(target), "image": image.to_lists()},
        f"charge: {','.join(map(str, target))}\nimage: {image.display()}",
    )
    return 0


def cmd_mullineux(args) -> int:
    charge = _charge(args)
    mp = _mp(args.multipartition, charge)
    image = mullineux(mp, charge)
    nc = negated_charge(charge)
    _emit(
        args,
        {"charge": list(nc.s), "image": image.to_lists()},
        f"charge: {','.join(map(str, nc.s))}\nimage: {image.display()}",
    )
    return 0


def cmd_label(args) -> int:
    charge = _charge(args)
    kind = "trivial" if args.trivial else "sign"
    rep = OneDimRep(kind, args.component, args.n)
    if rep.comp > charge.level:
        raise ValueError(
            f"component {rep.comp} outside level {charge.level}"
        )
    if args.typeb:
        if charge.level != 2:
            raise ValueError("--typeb needs a level-2 charge")
        mp = label_typeB(rep, charge.s[0], charge.s[1], charge.e)
        method = "typeb"
    elif args.closed:
        mp = (label_trivial_closed if kind == "trivial" else label_sign_closed)(
            rep, charge
        )
        method = "closed"
    else:
        mp = label_general(rep, charge)
        method = "general"
    if args.check and method != "general":
        reference = label_general(rep, charge)
        if mp != reference:
            print(
                f"check failed for {rep}: {method} gave {mp.display()}, "
                f"crystal gave {reference.display()}",
                file=sys.stderr,
            )
            return 3
    _emit(args, mp.to_lists(), mp.display())
    return 0


def cmd_verify(args) -> int:
    try:
        e_values = tuple(int(x) for x in args.e_values.split(","))
    except ValueError:
        raise ValueError(f"cannot parse --e-values {args.e_values!r}")
    if any(e < 2 for e in e_values):
        raise ValueError("every e must be >= 2")
    report = run_verification(
        max_n=args.max_n,
        span=args.span,
        samples=args.samples,
        e_values=e_values,
        seed=args.seed,
    )
    if args.report:
        print(render_conformance(report))
    else:
        print(
            f"charges checked: {report.charges_checked}   "
            f"labels checked: {report.labels_checked}   "
            f"mismatches: {len(report.mismatches)}"
        )
        for m in report.mismatches[:20]:
            print(f"  {m}")
    return 0 if report.ok else 1


def _add_common(sp, multipartition=True):
    if multipartition:
        sp.add_argument(
            "multipartition", help="display form, e.g. 5.3.1|2 or - for empty"
        )
    sp.add_argument(
        "-s", "--charge", required=True, help="comma-separated charge, e.g. 2,0"
    )
    sp.add_argument("-e", type=int, required=True, help="integer >= 2")
    sp.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uglov",
        description=(
            "Crystal combinatorics of charged multipartitions: good nodes, "
            "reachability, charge-change isomorphisms, the generalized "
            "Mullineux involution, and one-dimensional labels."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("good", help="good addable and removable nodes for a residue")
    _add_common(sp)
    sp.add_argument("-i", type=int, required=True, help="residue")
    sp.set_defaults(func=cmd_good)

    sp = sub.add_parser("word", help="the ordered addable/removable word for a residue")
    _add_common(sp)
    sp.add_argument("-i", type=int, required=True, help="residue")
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("member", help="is the multipartition reachable from empty")
    _add_common(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser(
        "flotw", help="does the multipartition satisfy the ordered-charge conditions"
    )
    _add_common(sp)
    sp.set_defaults(func=cmd_flotw)

    sp = sub.add_parser("gseq", help="canonical residue word reaching the multipartition")
    _add_common(sp)
    sp.set_defaults(func=cmd_gseq)

    sp = sub.add_parser("build", help="follow a residue word from the empty multipartition")
    sp.add_argument("sequence", help="comma-separated residues, e.g. 0,1,2,3")
    sp.add_argument(
        "-s", "--charge", required=True, help="comma-separated charge, e.g. 2,0"
    )
    sp.add_argument("-e", type=int, required=True, help="integer >= 2")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("enumerate", help="all reachable multipartitions of a size")
    sp.add_argument("n", type=int, help="size")
    sp.add_argument(
        "-s", "--charge", required=True, help="comma-separated charge, e.g. 2,0"
    )
    sp.add_argument("-e", type=int, required=True, help="integer >= 2")
    sp.add_argument("--count", action="store_true", help="print only the count")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("iso", help="charge-change isomorphism")
    _add_common(sp)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--to", help="target charge, e.g. 0,2")
    group.add_argument("--perm", help="permutation images, e.g. 2,1")
    sp.add_argument("--shift", help="translation part for --perm, e.g. 1,0")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("mullineux", help="generalized Mullineux image")
    _add_common(sp)
    sp.set_defaults(func=cmd_mullineux)

    sp = sub.add_parser("label", help="label of a one-dimensional shape")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--trivial", action="store_true", help="single-row shape")
    kind.add_argument("--sign", action="store_true", help="single-column shape")
    sp.add_argument("-j", "--component", type=int, default=1, help="component, 1-based")
    sp.add_argument("-n", type=int, required=True, help="size")
    sp.add_argument(
        "-s", "--charge", required=True, help="comma-separated charge, e.g. 2,0"
    )
    sp.add_argument("-e", type=int, required=True, help="integer >= 2")
    sp.add_argument(
        "--closed", action="store_true", help="use the closed recursion"
    )
    sp.add_argument(
        "--typeb", action="store_true", help="use the explicit level-2 formulas"
    )
    sp.add_argument(
        "--check",
        action="store_true",
        help="cross-check a closed answer against the crystal",
    )
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=cmd_label)

    sp = sub.add_parser("verify", help="sweep the closed formulas against the crystal")
    sp.add_argument("--max-n", type=int, default=8, help="largest size checked")
    sp.add_argument(
        "--span", type=int, default=1, help="level-2 grid covers [-span*e, span*e]"
    )
    sp.add_argument(
        "--samples", type=int, default=60, help="random charges per (e, level)"
    )
    sp.add_argument("--e-values", default="2,3,4", help="comma list, e.g. 2,3,4")
    sp.add_argument("--seed", type=int, default=0, help="sampling seed")
    sp.add_argument(
        "--report", action="store_true", help="print the per-branch conformance table"
    )
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
