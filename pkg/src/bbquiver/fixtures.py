"""Access to the bundled example files."""

from __future__ import annotations

from importlib import resources

from .algebra import Biquandle, parse_biquandle
from .bracket import BiquandleBracket, make_bracket, parse_bracket
from .diagram import Diagram, parse_diagram


def fixture_text(name: str) -> str:
    return resources.files("bbquiver").joinpath("data", name).read_text()


def fixture_names() -> list[str]:
    return sorted(p.name for p in resources.files("bbquiver").joinpath("data").iterdir() if p.is_file())


def load_biquandle(name: str) -> Biquandle:
    return parse_biquandle(fixture_text(name), source=name)


def load_diagram(name: str) -> Diagram:
    return parse_diagram(fixture_text(name), source=name)


def load_bracket(name: str, biquandle: Biquandle | str) -> BiquandleBracket:
    b = load_biquandle(biquandle) if isinstance(biquandle, str) else biquandle
    ring, A, B = parse_bracket(fixture_text(name), source=name)
    return make_bracket(b, ring, A, B)
