"""Central characters, exponential-sum witnesses and weight families for gl_n."""
from .charcenter import (CentralCharacter, Weight, character_difference, character_from_weight,
                         lemma9_difference, rho)
from .errors import (HCError, InvalidGenerator, NeedMoreOrders, NonGenericWeight, NonIntegerWeight,
                     NotPureExponential, OrderMismatch, RankExceedsBound, RankTooSmall)
from .expsum import (INCONCLUSIVE, NO_WITNESS_WITHIN_BOUND, NONZERO_WITNESS, NOT_EXPONENTIAL_FORM,
                     Decision, ExponentialPolynomial, decide_difference, decide_nonvanishing,
                     hankel_rank_and_recurrence, recover_exponential_polynomial,
                     witness_from_exponential_polynomial)
from .interpolate import (WeightFamily, build_weight_family, powersum_complete,
                          verify_weight_family)
from .series import MomentSequence, divide_by_expm1, moments_from_witness
from .uea import UEAElement, casimir2, straighten
from .verma import casimir_check, omega_spectrum_check, witness_weight_check
from .witness import Witness

__version__ = "0.1.0"
