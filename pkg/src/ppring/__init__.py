"""Exact species and primitive idempotents of p-permutation rings of small
finite groups, with a finite-field oracle and a verification CLI."""

from .cyclo import Cyclotomic, ConductorMismatch, cyclotomic_polynomial, zeta_power
from .grp import (FiniteGroup, InvalidPermutation, NotNormal, NotSubgroup,
                  OrderCapExceeded, Permutation, QuotientGroup, Subgroup,
                  alternating, centralizer, close_generators, cyclic, dihedral,
                  direct_product, double_coset_reps, klein_four, normalizer,
                  p_prime_part, promote, quaternion8, quotient,
                  subgroup_conjugacy, symmetric, sylow)
from .lattice import SubgroupLattice, all_subgroups, moebius, subgroup_lattice
from .ppelem import (Generator, LinChar, PPElement, brauer_elt, char_pullback,
                     default_conductor, ind_elt, inf_elt, linear_characters,
                     make_generator, res_elt, tensor_elt)
from .burnside import (BurnsideElement, burnside_product, fixed_point_functor,
                       gluck_yoshida, linearize, mark, mark_element, transitive)
from .species import (SpeciesPair, SpeciesVector, build_pair, enumerate_pairs,
                      equal_elements, pairs_conjugate, species_vector,
                      standard_generators, tau_element, tau_generator)
from .idem import (IdempotentReport, cyclic_idempotent, idempotent_normal_case,
                   idempotent_report, idempotent_theorem,
                   idempotent_via_reduction, partition_of_unity, top_E,
                   verify_E_decomposition, verify_induction, verify_restriction)
from .ffq import FqField, FqModule, build_field, oracle_tau, realize_generator

__version__ = "0.1.0"
