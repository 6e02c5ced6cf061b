"""Fibonacci nim variants: exhaustive solver, classifiers and verify suites."""

from ._fibnim import (
    BudgetExceeded,
    Move,
    SigmaRangeError,
    Solver,
    WordRangeError,
    beatty_class,
    classify_one_pile,
    classify_pow2,
    classify_two_pile,
    classify_two_pile_word,
    complementary_value,
    fib,
    run_suite,
    sigma,
    sturm_word,
    suite_names,
    three_four_reply,
    z1,
    zeckendorf,
)

__all__ = [
    "BudgetExceeded",
    "Move",
    "SigmaRangeError",
    "Solver",
    "WordRangeError",
    "beatty_class",
    "classify_one_pile",
    "classify_pow2",
    "classify_two_pile",
    "classify_two_pile_word",
    "complementary_value",
    "fib",
    "run_suite",
    "sigma",
    "sturm_word",
    "suite_names",
    "three_four_reply",
    "z1",
    "zeckendorf",
]
