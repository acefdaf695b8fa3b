"""
Covering tool for the Hamilton Tools MCP server.
"""

from datetime import datetime
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from utils.parsing import parse_group, parse_vertex_set

from ..base import BaseTool
from ..colouring import Colouring
from ..colouring.serialize import dumps, loads
from ..settings import get_settings
from ..verifier.windows import verify_covering
from .engine import cover_with_report
from .plan import plan


class CoveringRecord(BaseModel):
    group: str
    gens: str
    targets: List[str]
    colour: int
    summary: Dict[str, Any]
    ok: bool
    created_at: datetime = Field(default_factory=datetime.now)


class CoveringTool(BaseTool):
    """Run the covering engine on a Cayley graph colouring."""

    @property
    def name(self) -> str:
        return "covering"

    @property
    def description(self) -> str:
        return "Recolour a Cayley graph so one double-ray of a chosen colour covers a finite vertex set"

    def get_capabilities(self) -> List[str]:
        return ["cover", "plan"]

    def _input(self, group: str, gens: str, colouring: Optional[str]) -> Colouring:
        if colouring:
            return loads(colouring)
        return Colouring.standard(parse_group(group, gens))

    def cover(self, group: str, gens: str, targets: str, colour: int, colouring: Optional[str] = None) -> dict:
        settings = get_settings()
        c = self._input(group, gens, colouring)
        X = parse_vertex_set(c.spec, targets)
        result = cover_with_report(c, X, colour, max_search=settings.max_path_search, budget_factor=settings.budget_factor)
        check = verify_covering(c, result.colouring, X, colour, budget_factor=settings.budget_factor)
        summary = result.summary()
        self._append_record(
            CoveringRecord(
                group=c.spec.render(),
                gens=c.S.render(),
                targets=[c.spec.render_element(x) for x in X],
                colour=colour,
                summary=summary,
                ok=check.ok,
            )
        )
        return {"plan": summary, "report": check.summary(), "colouring": dumps(result.colouring)}

    def register(self, mcp):
        @mcp.tool()
        async def covering_cover(
            group: str, gens: str, targets: str, colour: int, colouring: str = None
        ) -> dict:
            """Cover the target vertices by one double-ray of the given colour.

            Starts from the standard colouring unless a serialized colouring is given.
            """
            return self.cover(group, gens, targets, colour, colouring)

        @mcp.tool()
        async def covering_plan(group: str, gens: str, targets: str, colour: int, colouring: str = None) -> dict:
            """Show the coset path, reserved rays and grid sizes a covering would use."""
            settings = get_settings()
            c = self._input(group, gens, colouring)
            p = plan(c, parse_vertex_set(c.spec, targets), colour, max_search=settings.max_path_search)
            render = c.spec.render_element
            return {
                "target": p.target,
                "partner": p.partner,
                "t": p.t,
                "sizes": p.sizes.model_dump(),
                "representatives": [render(x) for x in p.coset_path.representatives],
                "reserved_rays": [
                    [{"base": render(r.base), "gen": r.gen, "family": r.family} for r in row]
                    for row in p.reservation.rays
                ],
            }

        @mcp.resource("resource://covering/history")
        def resource_covering_history() -> list:
            """Return every covering run so far."""
            return [r.model_dump(mode="json") for r in self._read_records(CoveringRecord)]
