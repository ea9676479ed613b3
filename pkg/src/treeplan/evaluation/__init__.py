from .types import (
    CompositeEvaluator,
    ConstantEvaluator,
    Evaluator,
    JudgeVerdict,
    NoiseConfig,
    PostRequest,
    PreRequest,
    clamp_unit,
)
from .verdict import ParsedVerdict, parse_verdict, render_verdict
from .prompts import NO_PRIOR_CALLS, render_post_prompt, render_pre_prompt
from .noise import (
    RESTORATION_MODES,
    RESTORE_FIX_FALSE_NEGATIVES,
    RESTORE_FIX_FALSE_POSITIVES,
    RESTORE_NONE,
    RESTORE_ORACLE,
    DecisionCounters,
    NoisyEvaluator,
    inject_judge_noise,
)
from .lexical import LexicalPriorEvaluator
from .wire import WireEvaluator, WireJudgeConfig

__all__ = [
    "CompositeEvaluator",
    "ConstantEvaluator",
    "DecisionCounters",
    "Evaluator",
    "JudgeVerdict",
    "LexicalPriorEvaluator",
    "NO_PRIOR_CALLS",
    "NoiseConfig",
    "NoisyEvaluator",
    "ParsedVerdict",
    "PostRequest",
    "PreRequest",
    "RESTORATION_MODES",
    "RESTORE_FIX_FALSE_NEGATIVES",
    "RESTORE_FIX_FALSE_POSITIVES",
    "RESTORE_NONE",
    "RESTORE_ORACLE",
    "WireEvaluator",
    "WireJudgeConfig",
    "clamp_unit",
    "inject_judge_noise",
    "parse_verdict",
    "render_post_prompt",
    "render_pre_prompt",
    "render_verdict",
]
