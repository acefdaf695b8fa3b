"""
Line-based text form of a Cayley colouring.

    group Z^2
    gens (1,0) (0,1)
    edge (0,0) gen 1 colour 2

Edge lines list the exceptional entries only, sorted by (base, gen).
"""

import re
from typing import List, Tuple

from ..abelian import GeneratorSet, GroupSpec
from ..errors import ParseError
from .colouring import Colouring
from .edges import EdgeRef

_EDGE = re.compile(r"^edge\s+(\([^()]*\))\s+gen\s+(\d+)\s+colour\s+(\d+)$")


def header_lines(S: GeneratorSet) -> List[str]:
    return [f"group {S.spec.render()}", f"gens {S.render()}"]


def dump_edges(c: Colouring) -> List[str]:
    render = c.spec.render_element
    return [f"edge {render(e.base)} gen {e.gen} colour {col}" for e, col in sorted(c.exceptional.items())]


def dumps(c: Colouring) -> str:
    return "\n".join(header_lines(c.S) + dump_edges(c)) + "\n"


def parse_header(lines: List[str]) -> Tuple[GeneratorSet, List[str]]:
    """Read the ``group``/``gens`` header and return the remaining lines."""
    body = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if len(body) < 2 or not body[0].startswith("group ") or not body[1].startswith("gens "):
        raise ParseError("colouring text must start with 'group ...' and 'gens ...' lines")
    spec = GroupSpec.parse(body[0][len("group ") :])
    S = GeneratorSet.of(spec, spec.parse_elements(body[1][len("gens ") :]))
    return S, body[2:]


def parse_edges(S: GeneratorSet, lines: List[str]) -> Colouring:
    overlay = {}
    for ln in lines:
        m = _EDGE.match(ln)
        if m is None:
            raise ParseError(f"bad edge line {ln!r}")
        e = EdgeRef(S.spec.parse_element(m.group(1)), int(m.group(2)))
        overlay[e] = int(m.group(3))
    return Colouring(S, overlay)


def loads(text: str) -> Colouring:
    S, rest = parse_header(text.splitlines())
    return parse_edges(S, rest)
