"""Ekedahl-Oort classification of curves over small finite fields.

Core pipeline: curve models (hyperelliptic and cyclic covers of the line)
-> Cartier-Manin matrix / a-number / p-rank -> explicit de Rham basis with
Verschiebung and duality pairing -> canonical filtration, final type and
Ekedahl-Oort index.  A survey engine enumerates curve families and tallies
strata; the CLI front end is in eocurves.cli.
"""

from .gf import Field, make_field
from .curve import (CyclicCoverModel, DifferentialForm, HyperellipticModel,
                    cyclic_cover, eigenspace_dims, genus, holomorphic_basis,
                    hyper_to_cyclic, hyperelliptic)
from .cartier import a_number, cartier_form, cartier_manin, cartier_poly, p_rank
from .derham import build_basis, pairing_matrix, verschiebung
from .eo import EOType, FinalType, classify, eo_from_final, eo_leq, final_from_eo
from .survey import FAMILIES, Tally, dimension_estimate, scan, theorem2_suite, verify_locus_equations

__version__ = "0.1.0"

__all__ = [
    "Field", "make_field",
    "HyperellipticModel", "CyclicCoverModel", "DifferentialForm",
    "hyperelliptic", "cyclic_cover", "genus", "eigenspace_dims",
    "holomorphic_basis", "hyper_to_cyclic",
    "cartier_poly", "cartier_form", "cartier_manin", "a_number", "p_rank",
    "build_basis", "verschiebung", "pairing_matrix",
    "classify", "EOType", "FinalType", "eo_from_final", "final_from_eo", "eo_leq",
    "FAMILIES", "Tally", "scan", "verify_locus_equations",
    "dimension_estimate", "theorem2_suite",
]
