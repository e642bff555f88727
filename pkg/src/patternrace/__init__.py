"""Exact odds and waiting times for races between patterns in i.i.d. letter streams."""

from .errors import (
    AllTrialsTruncated,
    BadDistribution,
    DegenerateDenominator,
    DuplicatePattern,
    NotReduced,
    PatternRaceError,
    ValidationError,
    ZeroConstantDenominator,
    ZeroProbabilityLetter,
    ZeroWinProbability,
)
from .exactmath import Poly, PolyMatrix, RatFn, Rational, det
from .li import identity_b_shortcut, star_analysis, star_number, verify_li_identity
from .oracle import SimConfig, dp_distribution, simulate
from .patterns import (
    Alphabet,
    Distribution,
    Pattern,
    PatternSystem,
    coin,
    correlation_poly,
    make_system,
    pattern_prob,
    uniform,
    validate_system,
)
from .solver import (
    AnalysisReport,
    GeneratingBundle,
    analyze,
    build_matrices,
    conditional_waits,
    expected_wait,
    generating_functions,
    solovev_wait,
    win_probabilities,
)

__version__ = "0.1.0"
