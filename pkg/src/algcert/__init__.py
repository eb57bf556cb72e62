"""Exact verification and construction of operator structures on Lie algebras.

Everything is computed over arbitrary-precision rationals: axiom checks
are exact equality tests returning certificates, and every construction
re-verifies the properties its output is supposed to have.
"""

from .certificates import Certificate, CheckFailed
from .exact import Mat, Rat, Tensor2, Tensor3, flip, rat, tensor2_map
from .lie import (
    BilinForm,
    LieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    dual_rep,
    is_invariant_form,
    is_quadratic,
    is_representation,
    jacobi_check,
    semidirect,
)
from .reynolds import (
    QuadraticReynolds,
    ReynoldsLieAlgebra,
    ReynoldsRep,
    block_window_check,
    check_ssharp_intertwiner,
    dual_reynolds_rep,
    induced_algebra,
    is_quadratic_reynolds,
    is_reynolds,
    is_reynolds_rep,
    reynolds_adjoint_rep,
    reynolds_coadjoint_rep,
    semidirect_reynolds,
)
from .nslie import (
    NSLieAlgebra,
    NSRep,
    is_ns_rep,
    is_nslie,
    ns_commutator,
    ns_from_reynolds,
    ns_rep_from_reynolds_rep,
    ns_semidirect,
    regular_rep,
)
from .matched import (
    ManinTripleReynolds,
    MatchedPair,
    ReynoldsMatchedPair,
    double,
    induced_matched_pair,
    is_manin_triple,
    is_matched_pair,
    is_reynolds_matched_pair,
    manin_to_matched,
    matched_to_manin,
    reynolds_double,
)
from .bialgebra import (
    LieBialgebra,
    ReynoldsLieBialgebra,
    canonical_pair,
    cobracket_from_dual,
    coboundary_cobracket,
    coboundary_conditions,
    double_quasitriangular,
    drinfeld_double,
    dual_from_cobracket,
    is_lie_bialgebra,
    is_lie_coalgebra,
    is_reynolds_bialgebra,
    is_reynolds_coalgebra,
    reynolds_coboundary_condition,
)
from .rotabaxter import (
    QuadraticRB,
    RotaBaxterAlg,
    descendent,
    dual_bracket_from_r,
    i_operator,
    is_factorizable,
    is_quadratic_rb,
    is_reynolds_on_qrb,
    is_rota_baxter,
    minus_rstar_on_descendent,
    r_from_qrb,
    reynolds_descends,
    thmFL_bialgebra,
)
from .cybe import (
    PreLieAlgebra,
    RelativeRB,
    ReynoldsPreLie,
    canonical_r,
    cybe_bracket,
    descendent_on_W,
    is_cybe_solution,
    is_cybe_solution_reynolds,
    is_prelie,
    is_relative_rb,
    is_reynolds_prelie,
    left_rep,
    matched_from_relrb,
    prelie_from_invertible_relrb,
    prelie_from_relrb,
    r_plus,
    rk_solution,
    subadjacent,
)
from .catalog import CatalogEntry, catalog

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
