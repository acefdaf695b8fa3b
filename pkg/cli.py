"""
Command line front end for Hamilton Tools.

Exit codes: 0 clean, 2 bad input, 3 verification violations, 4 internal errors.
Logs go to stderr; standard output carries only data.
"""

from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, List, Optional

import typer
from mcp.server.fastmcp.utilities.logging import configure_logging
from pydantic import ValidationError

from tools.abelian import CoordinateBox, GroupElement
from tools.colouring import Colouring, EdgeRef, dumps, loads
from tools.covering import cover_with_report
from tools.decomposer import Session
from tools.errors import (
    EdgeNotInDecomposition,
    HamiltonError,
    InvalidGenerators,
    NotOneEnded,
    ParseError,
    SpecMismatch,
    WindowNotStable,
)
from tools.product import ProductSession, parse_decomposition, render_colour
from tools.settings import get_settings
from tools.verifier import WindowReport, verify_colouring, verify_covering, verify_decomposition_window
from utils.parsing import parse_group, parse_square, parse_vertex_set, parse_window

app = typer.Typer(
    help="Hamilton decompositions of one-ended abelian Cayley graphs and of graph products.",
    no_args_is_help=True,
    add_completion=False,
)

_BAD_INPUT = (
    ParseError,
    SpecMismatch,
    InvalidGenerators,
    NotOneEnded,
    WindowNotStable,
    EdgeNotInDecomposition,
    ValidationError,
)


class ExportFormat(str, Enum):
    DOT = "dot"
    SVG = "svg"


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, help="Log level (default from HAMILTON_TOOLS_LOG_LEVEL).")):
    configure_logging(log_level or get_settings().log_level)


@contextmanager
def exit_codes() -> Iterator[None]:
    try:
        yield
    except _BAD_INPUT as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=2)
    except HamiltonError as exc:
        typer.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        raise typer.Exit(code=4)


def _finish(reports: List[WindowReport]) -> None:
    for report in reports:
        for line in report.lines():
            typer.echo(line)
    if any(not r.ok for r in reports):
        raise typer.Exit(code=3)


def _read_colouring(path: Path) -> Colouring:
    return loads(path.read_text())


@app.command()
def cover(
    group: str = typer.Option(..., help='Group, e.g. "Z^2" or "Z^2 x Z_3".'),
    gens: str = typer.Option(..., help='Generators, e.g. "(1,0) (0,1)", or "units".'),
    targets: str = typer.Option(..., "--set", help='Vertices to cover, e.g. "(0,0) (1,2)".'),
    colour: int = typer.Option(..., help="Colour of the covering double-ray (1-based)."),
    colouring: Optional[Path] = typer.Option(None, exists=True, dir_okay=False, help="Start from a saved colouring."),
    out: Optional[Path] = typer.Option(None, help="Also write the resulting colouring here."),
):
    """Recolour so one double-ray of COLOUR covers the given vertices."""
    settings = get_settings()
    with exit_codes():
        c = _read_colouring(colouring) if colouring else Colouring.standard(parse_group(group, gens))
        X = parse_vertex_set(c.spec, targets)
        result = cover_with_report(c, X, colour, max_search=settings.max_path_search, budget_factor=settings.budget_factor)
        text = dumps(result.colouring)
        if out is not None:
            out.write_text(text)
        typer.echo(text, nl=False)
        summary = result.summary()
        typer.echo(
            f"plan target {summary['target']} partner {summary['partner']} t {summary['t']} "
            f"N0 {summary['n0']} N1 {summary['n1']} N2 {summary['n2']} N3 {summary['n3']}"
        )
        report = verify_covering(c, result.colouring, X, colour, budget_factor=settings.budget_factor)
    _finish([report])


@app.command()
def decompose(
    group: Optional[str] = typer.Option(None, help="Group, e.g. Z^3; not needed with --resume."),
    gens: str = typer.Option("units", help='Generators, or "units".'),
    steps: int = typer.Option(1, min=0, help="Covering steps to run."),
    window: Optional[str] = typer.Option(None, help='Window to check, e.g. "-2..2" or "3".'),
    checkpoint: Optional[Path] = typer.Option(None, help="Write the session checkpoint here when done."),
    resume: Optional[Path] = typer.Option(None, exists=True, dir_okay=False, help="Continue from a checkpoint."),
):
    """Run the decomposition driver and check a stable window."""
    settings = get_settings()
    with exit_codes():
        if resume is not None:
            session = Session.restore(resume.read_text(), max_search=settings.max_path_search, budget_factor=settings.budget_factor)
        elif group is None:
            raise ParseError("decompose needs --group or --resume")
        else:
            session = Session(parse_group(group, gens), max_search=settings.max_path_search, budget_factor=settings.budget_factor)
        render = session.spec.render_element
        for r in session.run(steps):
            typer.echo(
                f"step {r.n} colour {r.colour} box {r.box} switched {r.switched} "
                f"path {render(r.path_start)} .. {render(r.path_end)} length {r.path_length}"
            )
        if checkpoint is not None:
            checkpoint.write_text(session.checkpoint())
        reports = []
        if window is not None:
            W = parse_window(session.spec, window)
            edges = session.stable_window(W)
            for col in session.colour_labels():
                typer.echo(f"colour {col}: {sum(1 for _, k in edges if k == col)} window edges")
            reports.append(verify_decomposition_window(session, W))
    _finish(reports)


@app.command()
def product(
    left: Path = typer.Option(..., exists=True, dir_okay=False, help="Ray-stream fixture of G."),
    right: Path = typer.Option(..., exists=True, dir_okay=False, help="Ray-stream fixture of H."),
    steps: int = typer.Option(1, min=0, help="Product steps to run."),
    window: Optional[str] = typer.Option(None, help='Window [lo,hi]^2 of vertex ids, e.g. "0..4".'),
):
    """Decompose G x H from decompositions of G and H."""
    settings = get_settings()
    with exit_codes():
        session = ProductSession(
            parse_decomposition(left.read_text()), parse_decomposition(right.read_text()), budget_factor=settings.budget_factor
        )
        for r in session.run(steps):
            typer.echo(
                f"step {r.k} colour {r.colour} plane {r.plane} M {r.m} N {r.n} "
                f"switched {r.switched} path length {r.path_length}"
            )
        reports = []
        if window is not None:
            W = parse_square(window)
            edges = session.window_edges(W)
            for col in session.colour_labels():
                typer.echo(f"colour {render_colour(col)}: {sum(1 for _, k in edges if k == col)} window edges")
            reports.append(verify_decomposition_window(session, W))
    _finish(reports)


@app.command()
def verify(
    colouring: Path = typer.Option(..., exists=True, dir_okay=False, help="Saved colouring."),
    window: Optional[str] = typer.Option(None, help="Also scan this window."),
):
    """Re-check a saved colouring: canonical, 2-regular, double-rays only."""
    settings = get_settings()
    with exit_codes():
        text = colouring.read_text()
        c = loads(text)
        listed = sum(1 for ln in text.splitlines() if ln.strip().startswith("edge "))
        W = parse_window(c.spec, window) if window else None
        report = verify_colouring(c, W, budget_factor=settings.budget_factor, listed=listed)
    _finish([report])


@app.command()
def trace(
    colouring: Path = typer.Option(..., exists=True, dir_okay=False, help="Saved colouring."),
    vertex: str = typer.Option(..., help='Start vertex, e.g. "(0,0)".'),
    colour: int = typer.Option(..., help="Colour to follow."),
):
    """Walk one colour component and print its shape."""
    settings = get_settings()
    with exit_codes():
        c = _read_colouring(colouring)
        v = c.spec.parse_element(vertex)
        t = c.trace(v, colour, budget_factor=settings.budget_factor)
        render = c.spec.render_element
        typer.echo(f"kind {t.kind.value}")
        typer.echo(f"edges {len(t.edges)}")
        typer.echo(f"from {render(t.vertices[0])} to {render(t.vertices[-1])}")
        for tail in t.tails:
            typer.echo(f"tail at {render(tail.anchor)} direction {tail.direction:+d} standard {tail.check(c)}")


def _window_edges(c: Colouring, W: CoordinateBox) -> List[tuple]:
    inside = set(W.vertices())
    out = []
    for v in sorted(inside):
        for k in c.S.indices():
            e = EdgeRef(v, k)
            w: GroupElement = c.endpoints(e)[1]
            if w in inside:
                out.append((v, w, c.colour_of(e)))
    return out


@app.command()
def export(
    window: str = typer.Option(..., help='Window, e.g. "-3..3".'),
    fmt: ExportFormat = typer.Option(ExportFormat.DOT, "--format", help="dot or svg."),
    colouring: Optional[Path] = typer.Option(None, exists=True, dir_okay=False, help="Saved colouring."),
    group: Optional[str] = typer.Option(None, help="Group, when exporting the standard colouring."),
    gens: str = typer.Option("units", help="Generators, when exporting the standard colouring."),
    out: Optional[Path] = typer.Option(None, help="Write here instead of standard output."),
):
    """Render a window of a colouring with its colour classes."""
    from utils.rendering import to_dot, to_svg

    with exit_codes():
        if colouring is not None:
            c = _read_colouring(colouring)
        elif group is not None:
            c = Colouring.standard(parse_group(group, gens))
        else:
            raise ParseError("export needs --colouring or --group")
        W = parse_window(c.spec, window)
        edges = _window_edges(c, W)
        text = to_dot(edges) if fmt is ExportFormat.DOT else to_svg(edges, title=W.render())
    if out is not None:
        out.write_text(text)
    else:
        typer.echo(text, nl=False)


if __name__ == "__main__":
    app()
