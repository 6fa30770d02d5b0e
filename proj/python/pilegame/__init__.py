"""Exact and simulated analysis of the random-vs-deterministic pile game."""

from ._pilegame import (
    SimResult,
    __version__,
    cli,
    closed_form,
    derangements,
    det_win_probs,
    expected_steps,
    gap_to_limit,
    gf_coefficients,
    oracle_expected_steps,
    oracle_win_prob,
    play_game,
    q_sequence,
    run_trials,
    solve,
    verify,
    wilson_interval,
)

__all__ = [
    "SimResult",
    "__version__",
    "cli",
    "closed_form",
    "derangements",
    "det_win_probs",
    "expected_steps",
    "gap_to_limit",
    "gf_coefficients",
    "oracle_expected_steps",
    "oracle_win_prob",
    "play_game",
    "q_sequence",
    "run_trials",
    "solve",
    "verify",
    "wilson_interval",
]
