"""Exact computations with category-J modules for Hamiltonian vector fields on a torus."""
from .catj import CatJModule, ModuleElement, act_d, act_h, act_laurent, big_h, cyclicity_probe, verify_module_axioms
from .exact import monomial_power, multi_factorial, symplectic_pairing
from .graded import PolyField, X, grade_component, highest_weight_vectors, sp_iso, sp_iso_inverse, x_bracket
from .interpolation import GridSpec, PolyEndo, delta_correction_check, fit_on_grid, verify_polynomial_action
from .repdata import IrreducibleSpec, RepData, from_sp_rep, sp_defining_rep, validate_rep
from .torus import TorusField, bracket, hamiltonian_field_of_monomial, verify_jacobi

__version__ = "0.1.0"
