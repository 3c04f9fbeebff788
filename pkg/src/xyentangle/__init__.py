"""One- and two-site entanglement in the infinite anisotropic XY chain."""

from .errors import (DomainError, InsufficientG, NonFiniteIntegrand, NumericError,
                     PositivityError, SchemaError, ShapeError, SizeError, SpectrumError,
                     SubdivisionLimit)
from .measures import (EntanglementResult, concurrence_general, concurrence_x_state,
                       eof_from_concurrence, spin_flip, two_site_entanglement,
                       von_neumann_entropy, wootters_margin)
from .quadrature import IntegrationSpec, integrate
from .reduced import (OneSiteState, TwoSiteState, one_site_ground, one_site_thermal,
                      two_site_from_correlators, two_site_thermal)
from .xymodel import (CRITICAL, CorrelatorSet, GVector, ModelParams, build_gvector,
                      correlators, critical_correlators, dispersion, g_coefficient,
                      transverse_magnetisation, x_magnetisation_ground, xx_correlator,
                      yy_correlator, zz_correlator)

__version__ = "0.1.0"
