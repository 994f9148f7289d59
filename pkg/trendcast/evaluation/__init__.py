from .evaluator import GAINS_OMITTED_NOTE, Evaluator

__all__ = ["GAINS_OMITTED_NOTE", "Evaluator"]
