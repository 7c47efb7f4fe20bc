"""Exact real numbers as oracles over rational intervals."""

from .constants import (
    Sign,
    coin_toss_oracle,
    collatz_oracle,
    compound_bracket,
    e_compound,
    e_denominator_exclusion,
    e_series,
    ivt_oracle,
    newton_iterates,
    newton_root_fonsi,
    nth_root,
    pi_bbp,
    power_witness_above,
    power_witness_below,
    pythagorean_sqrt2_interval,
    sin_sign,
    sine_pi_oracle,
)
from .core import (
    DEFAULT_BUDGET,
    NO,
    YES,
    answer,
    Answer,
    AxiomReport,
    Comparison,
    Oracle,
    Outcome,
    Relation,
    RootAt,
    RuleOracle,
    axiom_check,
    compare,
    partition_select,
    rational_oracle,
    refine_bisect,
    separate_points,
    undecided,
)
from .errors import (
    BudgetExceeded,
    ContainsZero,
    DomainError,
    InconsistentPredicates,
    InvalidInput,
    NoSmallEnough,
    NotYesInterval,
    ParseError,
    PreconditionViolated,
    TargetOutsideInterval,
    UndecidedError,
)
from .fonsi import (
    Fonsi,
    FonsiOracle,
    SeriesSpec,
    anti_diagonal,
    anti_diagonal_intervals,
    fonsi_to_oracle,
    from_cauchy,
    from_error_sequence,
    from_series,
)
from .gosper import (
    BihomState,
    GosperOp,
    Var,
    gosper_extract,
    gosper_ingest,
    gosper_init,
    gosper_round,
    gosper_stream,
)
from .interval import (
    DecimalMode,
    Interval,
    IntervalRelation,
    decimal_to_interval,
    distance,
    format_decimal,
    interval_add,
    interval_div,
    interval_mul,
    interval_neg,
    interval_pow,
    interval_recip,
    interval_sub,
    parse_interval,
    relate,
    separation,
)
from .operators import (
    IntervalOperator,
    add,
    div,
    inf_finite,
    lift,
    mul,
    neg,
    pow_int,
    recip,
    sub,
    sup_finite,
    sup_rational_set,
)
from .stern_brocot import (
    CFExpansion,
    FareyInterval,
    Pair,
    Side,
    cf_eval,
    cf_of_rational,
    cf_step,
    mediant,
    mediant_process,
    weighted_mediant_solve,
)

__version__ = "0.1.0"
