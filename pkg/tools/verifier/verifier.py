"""
Verifier tool for the Hamilton Tools MCP server.
"""

from datetime import datetime
from typing import List, Optional

from pydantic import BaseModel, Field

from utils.parsing import parse_window

from ..base import BaseTool
from ..colouring.serialize import loads
from ..settings import get_settings
from .windows import brute_force_components, verify_colouring


class CheckRecord(BaseModel):
    group: str
    exceptional: int
    window: str
    violations: int
    inconclusive: int
    ok: bool
    checked_at: datetime = Field(default_factory=datetime.now)


class VerifierTool(BaseTool):
    """Re-check saved colourings against the almost-standard conditions."""

    @property
    def name(self) -> str:
        return "verifier"

    @property
    def description(self) -> str:
        return "Brute-force checks of edge colourings: 2-regularity, double-ray components and window components"

    def get_capabilities(self) -> List[str]:
        return ["check_colouring", "components"]

    def check(self, colouring: str, window: Optional[str] = None) -> dict:
        c = loads(colouring)
        listed = sum(1 for ln in colouring.splitlines() if ln.strip().startswith("edge "))
        W = parse_window(c.spec, window) if window else None
        report = verify_colouring(c, W, budget_factor=get_settings().budget_factor, listed=listed)
        summary = report.summary()
        self._append_record(
            CheckRecord(
                group=c.spec.render(),
                exceptional=len(c),
                window=summary["window"],
                violations=summary["violations"],
                inconclusive=summary["inconclusive"],
                ok=summary["ok"],
            )
        )
        return {**summary, "details": report.violations + report.inconclusive}

    def register(self, mcp):
        @mcp.tool()
        async def verifier_check_colouring(colouring: str, window: str = None) -> dict:
            """Check a serialized colouring; optionally also scan a window for degree defects."""
            return self.check(colouring, window)

        @mcp.tool()
        async def verifier_components(colouring: str, window: str, colour: int) -> list:
            """List the colour components of a serialized colouring inside a window."""
            c = loads(colouring)
            W = parse_window(c.spec, window)
            render = c.spec.render_element
            return [
                {
                    "kind": comp.kind,
                    "edges": comp.edges,
                    "touches_boundary": comp.touches_boundary,
                    "vertices": [render(v) for v in comp.vertices],
                }
                for comp in brute_force_components(c, W, colour)
            ]

        @mcp.resource("resource://verifier/history")
        def resource_verifier_history() -> list:
            """Return every colouring check made so far."""
            return [r.model_dump(mode="json") for r in self._read_records(CheckRecord)]
