"""Exact graded Jacobian rings: Hilbert functions, Hodge numbers, Lefschetz
witnesses, Yukawa ranks, infinitesimal Torelli and degenerations."""

__version__ = "0.1.0"

from .domain import AGREEMENT_PRIMES, DEFAULT_PRIME, Domain
from .errors import (JacRingError, NoStabilization, NotArtinian, NotHomogeneous, ParseError,
                     RingMismatch, SingularInput)
from .ring import (FamilyTemplate, Polynomial, RingDescriptor, jacobian_generators, linear_form,
                   multiply, parse_polynomial)
from .quotient import GradedMap, QuotientRing, artinian_check, ci_hilbert_series
from .hodge import (classify_ci, hodge_degree, primitive_hodge_numbers, socle_degree,
                    weighted_socle)
from .lefschetz import find_lefschetz_witness, hf_obstruction, lefschetz_check
from .ivhs import (family_extremes, ivhs_step_map, max_yukawa_rank, torelli_rank,
                   yukawa_evaluate)
from .degeneration import family_scan, rank_drop_delta, total_tjurina
