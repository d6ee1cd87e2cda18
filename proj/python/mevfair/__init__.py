"""Fourier analysis of transaction-ordering payoffs over the symmetric group.

Payoffs are NumPy vectors of length n! indexed by lexicographic (Lehmer) rank.
Permutations are 1-based one-line lists; ordering sets are lists of ranks.
"""

from ._core import (
    CapacityError,
    DegenerateError,
    DimensionError,
    EmptySetError,
    ENUMERATION_LIMIT,
    IndexError,
    SpecError,
    __version__,
    cfmm_payoff,
    claim1_report,
    claim2_report,
    compose,
    degree,
    dim,
    factorial,
    fairness_report,
    indicator_payoff,
    intersection_profile,
    inverse,
    irrep_matrix,
    junta_payoff,
    lambda_plus,
    lehmer_rank,
    lehmer_unrank,
    liquidation_payoff,
    partitions,
    random_payoff,
    run_suite,
    schatten_summary,
    simulate,
    spectrum_report,
    stabilizer_set,
    suite_names,
    transform,
    uncertainty_check,
    valid_orderings,
    verify_indicator_degree,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
