"""Knot-invariant engine for classical and virtual knots given as Gauss codes.

Computes first-bridge-number upper bounds by seed propagation, quandle and
biquandle coloring lower bounds, Kauffman bracket / Jones polynomials, and
runs a batch pipeline that labels whole datasets.
"""

from .codes import (
    GaussCode,
    SignedGaussCode,
    Strand,
    apply_move1,
    apply_move2,
    apply_move3,
    canonical_form,
    connected_sum,
    crossing_switch,
    overbridge_count,
    parity_filter,
    parse,
    random_code,
    serialize,
    simplify,
    strands,
    virtualize_remove,
)
from .biquandles import (
    BIQUANDLE_4,
    DIHEDRAL_3,
    KISHINO,
    TREFOIL,
    AxiomReport,
    Biquandle,
    biquandle,
    coloring_lower_bound,
    count_colorings,
    dihedral_quandle,
    kishino_family,
    load_table_file,
    lookup_over,
    lookup_under,
    quandle,
    verify_axioms,
)
from .bracket import (
    LaurentPolynomial,
    jones,
    jones_fingerprint,
    kauffman_bracket,
    verify_virtualization,
    writhe,
)
from .bridges import (
    BridgeBounds,
    ColoringState,
    NOT_FOUND,
    bridge_label,
    propagate,
    wirtinger_number,
)

__version__ = "0.1.0"
