"""Exact-arithmetic computations in free algebras over planar reduced trees:
tree combinatorics, the diagonal coproduct and its dual shuffle product,
primitive subspaces with shuffle complement bases, characters, and the
associated power series and symmetric-function identities."""

from .trees import (
    EMPTY,
    OMEGA,
    ArityBound,
    LabeledTree,
    TreeParseError,
    as_bound,
    c_bounded,
    catalan,
    compose,
    enumerate_shapes,
    format_tree,
    graft,
    leaf,
    node,
    parse_tree,
    restrict_reduce,
    super_catalan,
)
from .freealg import (
    BoundMismatchError,
    Element,
    apply_generator,
    combine,
    format_element,
    from_tree,
    multilinear_basis,
    parse_element,
    substitute,
    unit,
    variable,
    zero,
)
from .hopf import (
    TensorElement,
    coproduct,
    is_primitive,
    nabla2,
    pairing,
    partial,
    reduced_coproduct,
    shuffle,
    shuffle_many,
    tensor,
    verify_hopf_axioms,
)
from .prim import (
    Basis,
    CellCapExceeded,
    character,
    pbw_complement_basis,
    prim_dim_formula,
    primitive_basis,
    primitive_dimension,
    verify_degree4_description,
)
from .series import (
    Series,
    log_derive_sequence,
    operad_generating_series,
    prim_generating_series,
)
from .symfun import SymFunc, ch_operad, ch_prim, sf_log, to_schur, witt_multigraded

__version__ = "0.1.0"
