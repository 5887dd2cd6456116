"""Exceptional points of order four in quasi-Hermitian quantum models."""
from .canonical import PerturbedJordan4, ReducedParams, from_reduced, realize_matrix, spectrum, to_reduced
from .domain import (
    DomainInterval,
    DomainPoint,
    KappaParam,
    PointClass,
    alpha_interval,
    alpha_interval_asymptotic,
    beta_interval,
    is_physical,
    kappa_of_gamma,
    scan_domain,
)
from .epn import epn_order, jordan_matrix, to_avatar, transition_matrix
from .metric import biorthogonal_system, build_metric, dyson_map, hermitize
from .models import BoseHubbardSpec, bh_ep_data, bh_hamiltonian, bh_spectrum
from .polyroots import RealPoly, RootSet, count_real_roots, cubic_roots, quartic_roots
from .secular import RealityVerdict, SecularQuartic, reality_test, stationary_profile

__version__ = "0.1.0"
