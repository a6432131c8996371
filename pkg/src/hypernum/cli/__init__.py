from .expr import EvalResult, ParseError, SemanticError, eval_source, evaluate, parse, parse_literal, to_source
from .main import main

__all__ = ["EvalResult", "ParseError", "SemanticError", "eval_source", "evaluate", "main", "parse",
           "parse_literal", "to_source"]
