"""Linear functional equations over finite modules."""

from .spec import EquationSpec, ModuleSpace, Variant
from .system import LinearSystem, SolutionSpace, build_system, satisfies, solution_space
from .structure import (StructuredSolution, canonical_form, decompose, predicted_dim,
                        random_params, synthesize_solution)
from .reduce import Reduction, reduce_to_two
from .nontrivial import NontrivialReport, nontrivial_report
