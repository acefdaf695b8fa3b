"""
Product decomposer tool for the Hamilton Tools MCP server.
"""

from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from utils.parsing import parse_square

from ..base import BaseTool
from ..settings import get_settings
from ..verifier.windows import verify_decomposition_window
from .colouring import render_colour
from .rays import parse_decomposition
from .session import ProductSession, ProductStepReport


class ProductRecord(BaseModel):
    session_id: str
    left: str
    right: str
    report: Optional[ProductStepReport] = None
    created_at: datetime = Field(default_factory=datetime.now)


class ProductTool(BaseTool):
    """Decompose G x H from ray-stream decompositions of G and H."""

    def __init__(self, data_dir: Path):
        super().__init__(data_dir)
        self.sessions: Dict[str, ProductSession] = {}
        self.fixtures: Dict[str, Tuple[str, str]] = {}

    @property
    def name(self) -> str:
        return "product"

    @property
    def description(self) -> str:
        return "Build Hamilton decompositions of Cartesian products from decompositions of the factors"

    def get_capabilities(self) -> List[str]:
        return ["new_session", "step", "window"]

    def new_session(self, left: str, right: str) -> ProductRecord:
        session = ProductSession(
            parse_decomposition(left), parse_decomposition(right), budget_factor=get_settings().budget_factor
        )
        known = {r.session_id for r in self._read_records(ProductRecord)} | set(self.sessions)
        k = len(known) + 1
        while f"p{k}" in known:
            k += 1
        record = ProductRecord(session_id=f"p{k}", left=left, right=right)
        self.sessions[record.session_id] = session
        self.fixtures[record.session_id] = (left, right)
        self._append_record(record)
        return record

    def get_session(self, session_id: str) -> ProductSession:
        session = self.sessions.get(session_id)
        if session is not None:
            return session
        records = [r for r in self._read_records(ProductRecord) if r.session_id == session_id]
        if not records:
            raise KeyError(f"no product session {session_id!r}")
        # replay: product sessions are deterministic in their fixtures
        session = ProductSession(
            parse_decomposition(records[0].left),
            parse_decomposition(records[0].right),
            budget_factor=get_settings().budget_factor,
        )
        session.run(max((r.report.k for r in records if r.report), default=0))
        self.sessions[session_id] = session
        self.fixtures[session_id] = (records[0].left, records[0].right)
        return session

    def step(self, session_id: str, steps: int = 1) -> List[ProductStepReport]:
        session = self.get_session(session_id)
        left, right = self.fixtures[session_id]
        reports = []
        for _ in range(steps):
            report = session.step()
            self._append_record(ProductRecord(session_id=session_id, left=left, right=right, report=report))
            reports.append(report)
        return reports

    def list_sessions(self) -> List[Dict[str, Any]]:
        latest: Dict[str, ProductRecord] = {}
        for record in self._read_records(ProductRecord):
            latest[record.session_id] = record
        return [{"session_id": r.session_id, "steps": r.report.k if r.report else 0} for r in latest.values()]

    def register(self, mcp):
        @mcp.tool()
        async def product_new_session(left: str, right: str) -> dict:
            """Start a product decomposition from two ray-stream fixtures (one 'ray' line per ray)."""
            record = self.new_session(left, right)
            session = self.sessions[record.session_id]
            return {"session_id": record.session_id, "colours": [render_colour(c) for c in session.labels]}

        @mcp.tool()
        async def product_step(session_id: str, steps: int = 1) -> list:
            """Run product steps and return one report per step."""
            return [r.model_dump() for r in self.step(session_id, steps)]

        @mcp.tool()
        async def product_window(session_id: str, window: str) -> dict:
            """Return the final colouring on [lo,hi]^2 with its check."""
            session = self.get_session(session_id)
            W = parse_square(window)
            edges = session.window_edges(W)
            report = verify_decomposition_window(session, W)
            return {
                "window": f"[{W[0]},{W[1]}]^2",
                "edges": [
                    {"ends": [list(v) for v in session.edge_endpoints(e)], "colour": render_colour(col)}
                    for e, col in edges
                ],
                "report": report.summary(),
            }

        @mcp.resource("resource://product/sessions")
        def resource_product_sessions() -> list:
            """Return every product session with its step count."""
            return self.list_sessions()
