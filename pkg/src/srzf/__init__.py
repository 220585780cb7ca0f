"""Secure regularized zero forcing (SRZF) precoding for MIMOME wiretap channels.

Finite-size precoders and secrecy metrics, Monte Carlo estimation of the
average ergodic secrecy rate, its large-system limit, and regularizer
tuning on that limit.
"""

from .asymptotics import (AsymptoticInputs, AsymptoticPoint, asymptotic_esnr,
                          asymptotic_rate, asymptotic_sinr, empirical_stieltjes,
                          solve_fixed_point, stieltjes_derivative)
from .channel import (ChannelRealization, NoiseProfile, SystemDims,
                      gaussian_complex_matrix, sample_channel)
from .exceptions import DegeneratePrecoderError, InputError, ParameterError, SRZFError
from .harness import ResultRow, SweepSpec, read_csv, run_point, run_sweep, write_csv
from .metrics import RatePoint, average_rate, per_user_esnr, per_user_sinr, secrecy_rates
from .montecarlo import MonteCarloEstimate, SchemeSpec, estimate_ergodic_rate
from .precoding import (PrecoderOutput, RzfParams, Scheme, SrzfParams, build_precoder,
                        leakage, normalize_power, rzf_shaping_matrix, srzf_shaping_matrix)
from .tuning import GridConfig, TunedParams, tune_rzf, tune_srzf

__version__ = "0.1.0"
