"""Solver for the two-stage Firm vs GenAI data-sharing game."""

from .errors import (
    DataShareError,
    DomainError,
    InfeasibleProfileError,
    InvalidInstanceError,
    OracleConfigError,
    SweepSpecError,
    UnsupportedParameterError,
)
from .kernels import BACKEND
from .model import ActionProfile, GameInstance, Thresholds, firm_utility, genai_utility, thresholds, traffic
from .oracle import OracleConfig, oracle_pareto, oracle_spe
from .spe import Kind, SpeOutcome, best_response, boundary_price, solve_spe

__version__ = "0.1.0"
