"""Toolkit for run-length-limited binary subshifts and their measures."""

from .words import (
    CapacityError,
    InadmissibleWordError,
    OccurrenceReport,
    SequenceWindow,
    Word,
    complement,
    count_words,
    d2,
    enumerate_words,
    is_admissible,
    lex_compare,
    occurrence_report,
    pi2,
)
from .measure import (
    BernoulliTypeMeasure,
    CylinderValue,
    PullbackSeries,
    bernoulli,
    cesaro_lambda,
    lambda0_closed,
    mu_closed,
    mu_recursive,
    pullback_cylinder,
    pullback_series,
)
from .markov import (
    ChainSpec,
    RunState,
    SampleRun,
    build_chain,
    empirical_local_dimension,
    path_measure,
    sample,
    stationary,
)
from .dimension import (
    DimensionProfile,
    entropy_binary,
    f_m,
    g_m,
    lower_bound,
    profile,
    solve_qm,
    topo_dim,
)
from .univoque import (
    EventuallyPeriodicSequence,
    FrequencyProfile,
    GammaVerdict,
    frequency_profile,
    gamma_check_periodic,
    gamma_check_prefix,
    theta_embed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
