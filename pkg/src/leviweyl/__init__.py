"""Levi subalgebras, local and global Weyl modules of classical current algebras."""

from .admissibility import AdmissibilityVerdict, Surjectivity, classify_pair, surjectivity_oracle
from .characters import (Character, branching_multiplicities, decompose, dim_irreducible,
                         irreducible_character, restrict_character, tensor_character)
from .levi import (LeviSubalgebra, SimpleComponent, classify_component, enumerate_simple_levis,
                   levi_from_generators, levi_from_root_subset, project_current_weight, project_weight)
from .rootsystem import RootSystem, Weight, build_root_system, pairing, parse_system_name
from .weylmodule import (CurrentWeight, current_weight, fundamental_weyl_character,
                         global_weyl_descriptor, local_weyl_character, local_weyl_dim, supp, wt)

__all__ = [
    "AdmissibilityVerdict", "Character", "CurrentWeight", "LeviSubalgebra", "RootSystem",
    "SimpleComponent", "Surjectivity", "Weight", "branching_multiplicities", "build_root_system",
    "classify_component", "classify_pair", "current_weight", "decompose", "dim_irreducible",
    "enumerate_simple_levis", "fundamental_weyl_character", "global_weyl_descriptor",
    "irreducible_character", "levi_from_generators", "levi_from_root_subset",
    "local_weyl_character", "local_weyl_dim", "pairing", "parse_system_name",
    "project_current_weight", "project_weight", "restrict_character", "supp",
    "surjectivity_oracle", "tensor_character", "wt",
]
