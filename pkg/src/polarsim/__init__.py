"""Empathy/repulsion opinion dynamics on Hawkes-driven social networks."""

from .baseline import BaselineParams, baseline_step, run_baseline
from .config import ExperimentConfig, load_config
from .dynamics import DynamicsParams, Trajectory, apply_post, empathy_delta, repulsion_delta, run_replay
from .hawkes import EventSequence, HawkesParams, PostEvent, generate_events, intensity, sample_params
from .metrics import OpinionHistogram, PolarizationConfig, bin_opinions, er_index, polarization
from .network import SocialGraph, generate_ba
from .runner import classify_region, compare_models, run_cell, run_sweep, simulate

__version__ = "0.1.0"
