"""Exact computations for sliced Kauffman bracket skein algebras:
Dehn-Thurston coordinate monoids, quantum tori, pants quantum traces,
the degeneration into a quantum torus, and the root-of-unity center and
PI-degree lattice arithmetic."""

from .arith import (
    RootOfUnity,
    LatticeBasis,
    chebyshev,
    even_sublattice,
    kernel_lattice,
    kostov_generic,
    lambda_hat,
    lattice_index,
    orders,
    pi_degree,
    threading_coeffs,
)
from .pants import (
    ComponentSpec,
    Decomposition,
    add_fn,
    cross,
    decompose,
    lambda_contains,
    loop,
    nu_of_component,
    return_arc,
    twist_apply,
)
from .qtorus import (
    AntisymMatrix,
    QuantumTorus,
    TorusElement,
    elem_mul,
    lead_term,
    mono_mul,
    pairing,
    reflection_normalize,
    subalgebra_contains,
    weyl_normalize,
)
from .qtrace import TraceTorus, check_thmbtr, pants_degree, trace_torus, utr_component, utr_coord
from .ring import Cyclotomic, GroundElem, GroundRing, HalfLaurent, cyclotomic_poly, reflect, specialize
from .surface import (
    DTDatum,
    FatGraph,
    GradedProduct,
    d_embed,
    face_split,
    graded_mul,
    lambda_global,
    lambda_membership,
    phi_lead,
    phi_value,
    q_matrix,
    standard_datum,
    surface_torus,
    tilde_q,
)

__version__ = "0.1.0"
