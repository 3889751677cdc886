"""Crystal combinatorics of charged multipartitions.

A multipartition carries a charge (one integer per component) and a
modulus e.  Nodes get residues, residues get ordered words of addable and
removable nodes, and the good nodes of those words generate a crystal
structure on the set of all multipartitions.  This package computes the
reachable multipartitions, the isomorphisms between crystals of charges
in one affine orbit, the generalized Mullineux involution, and explicit
labels for the one-dimensional shapes, together with a conformance sweep
that replays every closed formula against the crystal.
"""

from .affine import (
    AffineElement,
    act_on_charge,
    compose,
    inverse,
    permute_components,
    reduce_to_domain,
    rotation,
    translation,
    transposition,
)
from .core import (
    Charge,
    Multipartition,
    Node,
    Partition,
    multipartition_sum,
    multipartitions_of,
    partitions_of,
)
from .crystal import (
    NotUglovError,
    ResidueSequenceError,
    WordEntry,
    build_from_sequence,
    crystal_lower,
    crystal_raise,
    enumerate_uglov,
    g_sequence,
    good_addable_node,
    good_removable_node,
    i_word,
    is_uglov,
    node_precedes,
    peel,
    reduce_word,
    word_letters,
)
from .flotw import ChargeDomainError, in_domain, is_flotw
from .isomorphism import OrbitError, chi, chi_between, chi_generic, chi_sigma, chi_tau, chi_tau_inverse
from .labels import (
    OneDimRep,
    ResidueClassMap,
    label_general,
    label_sequence,
    label_sign_closed,
    label_trivial_closed,
    label_typeB,
    one_dim_label_set,
    residue_class_map,
)
from .mullineux import mullineux, mullineux_typeA_row, negated_charge
from .verify import (
    BranchStat,
    Mismatch,
    VerificationReport,
    labels_table,
    render_conformance,
    run_verification,
    sweep_closed,
    sweep_typeB,
)

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "act_on_charge",
    "compose",
    "inverse",
    "permute_components",
    "reduce_to_domain",
    "rotation",
    "translation",
    "transposition",
    "Charge",
    "Multipartition",
    "Node",
    "Partition",
    "multipartition_sum",
    "multipartitions_of",
    "partitions_of",
    "NotUglovError",
    "ResidueSequenceError",
    "WordEntry",
    "build_from_sequence",
    "crystal_lower",
    "crystal_raise",
    "enumerate_uglov",
    "g_sequence",
    "good_addable_node",
    "good_removable_node",
    "i_word",
    "is_uglov",
    "node_precedes",
    "peel",
    "reduce_word",
    "word_letters",
    "ChargeDomainError",
    "in_domain",
    "is_flotw",
    "OrbitError",
    "chi",
    "chi_between",
    "chi_generic",
    "chi_sigma",
    "chi_tau",
    "chi_tau_inverse",
    "OneDimRep",
    "ResidueClassMap",
    "label_general",
    "label_sequence",
    "label_sign_closed",
    "label_trivial_closed",
    "label_typeB",
    "one_dim_label_set",
    "residue_class_map",
    "mullineux",
    "mullineux_typeA_row",
    "negated_charge",
    "BranchStat",
    "Mismatch",
    "VerificationReport",
    "labels_table",
    "render_conformance",
    "run_verification",
    "sweep_closed",
    "sweep_typeB",
    "__version__",
]
