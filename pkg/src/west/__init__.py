"""Mission-time LTL to trace regular expressions.

Transforms interval-annotated finite-trace temporal formulas into
equivalent alternations of {0, 1, S} trace regexes, with an exhaustive
semantic oracle, expansion-based equivalence checking, a CLI, and an
HTTP validation service.
"""

from .equivalence import (
    EquivVerdict,
    brute_force_sat_traces,
    enumerate_traces,
    expand_trace_regex,
    naive_equivalence,
    oracle_check,
)
from .formula import (
    And,
    FalseC,
    Future,
    Global,
    IntervalError,
    MltlFormula,
    Not,
    Or,
    Prop,
    Release,
    Trace,
    TrueC,
    Until,
    complen,
    convert_nnf,
    drop,
    intervals_welldef,
    is_nnf,
    num_vars,
    semantics,
)
from .limits import BudgetExceededError, deadline
from .ops import (
    and_bitwise,
    and_regex,
    and_simp,
    and_state,
    and_trace,
    arbitrary_trace,
    or_regex,
    or_simp,
    shift,
    west_simp,
)
from .regexes import (
    RegexTextError,
    StateRegex,
    TraceRegex,
    WestBit,
    WestRegex,
    match,
    match_regex,
    match_timestep,
    regex_to_text,
    text_to_regex,
    trace_regex_of_vars,
    trace_to_bits,
    west_regex_of_vars,
)
from .syntax import (
    FormulaGenParams,
    ParseError,
    iter_random_formulas,
    parse_formula,
    parse_trace,
    pretty,
    random_formula,
)
from .transform import (
    pad_to,
    simp_pad_west_reg,
    west_future,
    west_global,
    west_reg,
    west_reg_aux,
    west_release,
    west_until,
)

__version__ = "0.1.0"
