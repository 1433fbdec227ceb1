"""Expression language and command-line interface."""

from .evaluate import EvalError, Evaluator, evaluate
from .main import main, run
from .syntax import ParseError, parse, parse_expr, show, show_program

__all__ = ["EvalError", "Evaluator", "ParseError", "evaluate", "main", "parse", "parse_expr",
           "run", "show", "show_program"]
