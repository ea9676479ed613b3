"""Judge-noise injection and counterfactual restoration.

The noise model flips *decisions*, not just values: with probability
error_rate an eligible score is reflected across the accept/reject threshold
(a passing score becomes threshold - 0.1, a failing one threshold + 0.1,
clamped into [0, 1]). Restoration modes counterfactually correct one class of
erroneous decisions, which is how the harness bounds the cost of judge noise
against a ground-truth evaluator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .types import Evaluator, NoiseConfig, PostRequest, PreRequest

RESTORE_NONE = "none"
RESTORE_FIX_FALSE_POSITIVES = "fix_false_positives"
RESTORE_FIX_FALSE_NEGATIVES = "fix_false_negatives"
RESTORE_ORACLE = "oracle"

RESTORATION_MODES = (
    RESTORE_NONE,
    RESTORE_FIX_FALSE_POSITIVES,
    RESTORE_FIX_FALSE_NEGATIVES,
    RESTORE_ORACLE,
)


def inject_judge_noise(
    true_score: float, threshold: float, noise: NoiseConfig, draw: float
) -> float:
    """Reflect `true_score` across `threshold` when the draw lands under
    error_rate and the flip direction is eligible under flip_mode.

    Deterministic given the draw; a rate of 0 is the identity.
    """
    passing = true_score >= threshold
    if passing:
        eligible = noise.flip_mode in ("false_negative_only", "both")
    else:
        eligible = noise.flip_mode in ("false_positive_only", "both")
    if not eligible or draw >= noise.error_rate:
        return true_score
    if passing:
        return max(0.0, threshold - 0.1)
    return min(1.0, threshold + 0.1)


@dataclass
class DecisionCounters:
    decisions: int = 0
    errors: int = 0

    @property
    def error_rate(self) -> float:
        return self.errors / self.decisions if self.decisions else 0.0


class NoisyEvaluator:
    """Wrap an evaluator with seeded decision noise and optional restoration.

    `restore` picks which class of injected errors gets counterfactually
    corrected back to the wrapped evaluator's score:

    - none: all injected flips survive (the noisy baseline)
    - fix_false_positives: flips that wrongly *approve* are reverted
    - fix_false_negatives: flips that wrongly *reject* are reverted
    - oracle: every flip is reverted (perfect judge)

    Decision errors are counted against the wrapped evaluator's decision at
    the same threshold, so the oracle row measures exactly zero.
    """

    def __init__(
        self,
        base: Evaluator,
        noise: NoiseConfig,
        tau_pre: float,
        tau_post: float,
        restore: str = RESTORE_NONE,
    ):
        if restore not in RESTORATION_MODES:
            raise ValueError(f"unknown restoration mode: {restore!r}")
        self._base = base
        self._noise = noise
        self._tau_pre = tau_pre
        self._tau_post = tau_post
        self._restore = restore
        self._rng = random.Random(noise.seed)
        self.pre_counters = DecisionCounters()
        self.post_counters = DecisionCounters()

    def _apply(self, true_score: float, threshold: float, counters: DecisionCounters) -> float:
        draw = self._rng.random()
        noisy = inject_judge_noise(true_score, threshold, self._noise, draw)
        true_pass = true_score >= threshold
        noisy_pass = noisy >= threshold
        if noisy_pass != true_pass:
            flipped_to_positive = noisy_pass and not true_pass
            if (
                self._restore == RESTORE_ORACLE
                or (self._restore == RESTORE_FIX_FALSE_POSITIVES and flipped_to_positive)
                or (self._restore == RESTORE_FIX_FALSE_NEGATIVES and not flipped_to_positive)
            ):
                noisy = true_score
                noisy_pass = true_pass
        counters.decisions += 1
        if noisy_pass != true_pass:
            counters.errors += 1
        return noisy

    def score_pre(self, request: PreRequest) -> float:
        return self._apply(self._base.score_pre(request), self._tau_pre, self.pre_counters)

    def score_post(self, request: PostRequest) -> float:
        return self._apply(self._base.score_post(request), self._tau_post, self.post_counters)

    @property
    def decision_error_rate(self) -> float:
        total = self.pre_counters.decisions + self.post_counters.decisions
        errors = self.pre_counters.errors + self.post_counters.errors
        return errors / total if total else 0.0
