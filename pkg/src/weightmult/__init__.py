"""Weight multiplicities of simple Lie algebra representations by three methods:
Kostant's alternating sum, Freudenthal's recursion and lattice-point counting
in polytopes of root coefficients."""
from .diagram import WeightDiagram
from .errors import MethodUnavailable, NoChamberFormula, ValidationError, WeylGroupTooLarge
from .fitting import FitResult, fit_polytope
from .freudenthal import freudenthal_diagram, freudenthal_multiplicity
from .kostant import PartitionMemo, kostant_diagram, kostant_multiplicity, partition_function
from .polytope import (ChamberId, Polytope, bounding_box, chamber_polytope, check_down_closed,
                       check_statement4, check_statement5, cube_polytope, diagram_from_polytope,
                       local_partition_count)
from .rootsys import (AlgebraType, Basis, RootSystem, Weight, build_root_system, dynkin_to_root,
                      inner_product, root_to_dynkin, weyl_dimension)
from .weyl import WeylElement, WeylGroup, apply, generate_weyl_group, lowest_weight

__version__ = "0.1.0"
