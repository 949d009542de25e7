"""Exact-arithmetic cooperative game tools.

Build TU games from owned-edge flow networks, compute the nucleolus and
pre-nucleolus by nested exact LPs, and certify any proposed solution with
balanced-collection, core and kernel audits.  Every number is an exact
rational; there is no floating point anywhere in the pipeline.
"""

from .errors import FlownucError, InputError, LimitError
from .rational import Rational, compare, decimal_string, format_rational, parse_rational, rational
from .lp import (
    BalancednessResult,
    FaceRow,
    LinearProgram,
    LpOutcome,
    check_certificates,
    is_balanced_collection,
    solve_face_lp,
    solve_lp,
)
from .game import (
    Allocation,
    Coalition,
    ImputationReport,
    TUGame,
    blocking_coalitions,
    check_imputation,
    coalition_of,
    coalition_str,
    core_nonempty,
    excess,
    excess_vector,
    is_zero_monotonic,
    lex_compare,
    load_allocation,
    load_game,
    players_of,
    save_allocation,
    save_game,
    subgame,
)
from .flow import (
    Edge,
    FlowNetwork,
    build_flow_game,
    coalition_value,
    cut_allocation,
    enumerate_min_cuts,
    load_network,
    max_flow,
    save_network,
)
from .solver import (
    KernelReport,
    KohlbergReport,
    NUCLEOLUS,
    PRENUCLEOLUS,
    SolverResult,
    StageState,
    kernel_checks,
    kohlberg_verify,
    max_surplus,
    nucleolus,
    prenucleolus,
    solve,
    surplus_matrix,
)
from .logic import Formula, equivalent, eval_formula, format_formula, parse_formula

__version__ = "0.1.0"
