"""Script language and command-line front end."""

from .ast import render
from .interp import EvalError, Interpreter, render_value
from .parser import ParseError, parse_script

__all__ = ["EvalError", "Interpreter", "ParseError", "parse_script", "render", "render_value", "run_text"]


def run_text(text: str, **options) -> str:
    """Run a whole script and return its transcript (printed values joined by newlines)."""
    it = Interpreter(**options)
    out = [o.text for o in it.run(parse_script(text)) if o.text is not None]
    return "\n".join(out) + ("\n" if out else "")
