"""hopfcheck: exact verification toolkit for finite-dimensional Hopf algebras.

Structure-constant presentations of Hopf algebras, their modules, comodules
and Yetter-Drinfel'd modules, with exact arithmetic over Q and F_p.  The
package constructs tensor products and duals, decides (co)semisimplicity by
Jacobson-radical computation (brute-force-oracle checked), and certifies
split monomorphisms for the canonical pairing maps.
"""

__version__ = "0.1.0"

from .comodules import (
    ComoduleRep,
    check_comodule_axioms,
    colinear_hom_space,
    comodule_to_dual_module,
    dual_comodule,
    regular_comodule,
    tensor_comodules,
    trivial_comodule,
)
from .fields import GF, QQ, Field, PrimeField, Rationals
from .hopf import AlgebraData, AxiomReport, HopfAlgebraData, check_hopf_axioms, dual_algebra, is_involutory
from .matrix import EchelonSpan, Matrix, NoSolutionError, kernel_basis, solve_linear
from .modules import (
    ModuleRep,
    check_module_axioms,
    direct_sum_modules,
    dual_module,
    hom_space,
    regular_module,
    tensor_modules,
    trivial_module,
)
from .semisimple import (
    SemisimplicityReport,
    acting_algebra,
    brute_force_cosemisimple,
    brute_force_semisimple,
    brute_force_yd_semisimple,
    is_cosemisimple,
    is_semisimple,
    is_yd_semisimple,
)
from .duality import (
    HSRank,
    SerreVerdict,
    SplitMonoCertificate,
    build_strong_dual_certificates,
    coevaluation,
    evaluation,
    hs_rank,
    split_retraction,
    verify_coev_colinearity,
    verify_coev_equivariance,
    verify_ev_colinearity,
    verify_ev_equivariance,
    verify_serre,
)
from .yd import YDModuleRep, check_yd_compat, dual_yd, tensor_yd, trivial_yd, yd_hom_space
from .catalog import CatalogEntry, catalog_entries, lookup
from .campaign import CampaignReport, run_campaign

__all__ = [name for name in dir() if not name.startswith("_")]
