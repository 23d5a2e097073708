"""Exact solvers for the three-squares-with-square-differences problem.

The package works over exact integers and rationals throughout: the
parametric solution generator, the bijections among the integer,
hyperbolic, cuboid, and sum-difference formulations, the order-5 cycle
and the doubling iteration, the elliptic-fiber group law, and an
exhaustive primitive-solution search.
"""

__version__ = "0.1.0"

from .triples import (  # noqa: F401
    Cuboid,
    EulerTriple,
    HyperbolicTriple,
    SquareCertificate,
    SumDiffTriple,
    canonicalize_hyperbolic,
    companion_triple,
    euler_to_cuboid,
    euler_to_hyperbolic,
    euler_to_sumdiff,
    hyperbolic_to_euler,
    sumdiff_to_euler,
    verify_euler,
)
from .section import SectionParams, params_from_m, triple_from_m  # noqa: F401
from .transforms import (  # noqa: F401
    EngelStep,
    SixTuple,
    doubling_step,
    engel_cycle_euler,
    engel_cycle_hyperbolic,
    engel_step,
    orbit,
)
from .fiber import (  # noqa: F401
    QuarticCurve,
    QuarticPoint,
    WeierstrassCurve,
    WeierstrassPoint,
    add,
    contains,
    euler_point,
    fiber_of_triple,
    mul,
    negate,
    to_weierstrass,
    two_torsion_point,
)
from .search import (  # noqa: F401
    Checkpoint,
    SearchConfig,
    SolutionRecord,
    legs_by_hypotenuse,
    naive_oracle_search,
    run_search,
    search,
)
