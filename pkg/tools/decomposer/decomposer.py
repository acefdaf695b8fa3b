"""
Decomposer tool for the Hamilton Tools MCP server.
"""

from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from mcp.server.fastmcp.utilities.logging import get_logger
from pydantic import BaseModel, Field

from utils.parsing import parse_group, parse_window

from ..base import BaseTool
from ..settings import get_settings
from ..verifier.windows import verify_decomposition_window
from .session import Session, StepReport

logger = get_logger(__name__)


class SessionRecord(BaseModel):
    session_id: str
    group: str
    gens: str
    report: Optional[StepReport] = None
    created_at: datetime = Field(default_factory=datetime.now)


class DecomposerTool(BaseTool):
    """Step Hamilton decompositions of Cayley graphs, one covering per step."""

    def __init__(self, data_dir: Path):
        super().__init__(data_dir)
        self.sessions: Dict[str, Session] = {}

    @property
    def name(self) -> str:
        return "decomposer"

    @property
    def description(self) -> str:
        return "Build Hamilton decompositions of one-ended abelian Cayley graphs step by step and read off stable windows"

    def get_capabilities(self) -> List[str]:
        return ["new_session", "step", "window"]

    def _new_id(self) -> str:
        ids = {r.session_id for r in self._read_records(SessionRecord)} | set(self.sessions)
        k = len(ids) + 1
        while f"d{k}" in ids:
            k += 1
        return f"d{k}"

    def new_session(self, group: str, gens: str = "units") -> SessionRecord:
        settings = get_settings()
        S = parse_group(group, gens)
        session = Session(S, max_search=settings.max_path_search, budget_factor=settings.budget_factor)
        record = SessionRecord(session_id=self._new_id(), group=S.spec.render(), gens=S.render())
        self.sessions[record.session_id] = session
        self._append_record(record)
        self._save(record.session_id)
        return record

    def _save(self, session_id: str) -> None:
        path = self.checkpoint_path(session_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.sessions[session_id].checkpoint())

    def get_session(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            path = self.checkpoint_path(session_id)
            if not path.exists():
                raise KeyError(f"no decomposer session {session_id!r}")
            settings = get_settings()
            session = Session.restore(
                path.read_text(), max_search=settings.max_path_search, budget_factor=settings.budget_factor
            )
            self.sessions[session_id] = session
        return session

    def step(self, session_id: str, steps: int = 1) -> List[StepReport]:
        session = self.get_session(session_id)
        reports = []
        for _ in range(steps):
            report = session.step()
            self._append_record(
                SessionRecord(session_id=session_id, group=session.spec.render(), gens=session.S.render(), report=report)
            )
            reports.append(report)
        self._save(session_id)
        return reports

    def list_sessions(self) -> List[Dict[str, Any]]:
        latest: Dict[str, SessionRecord] = {}
        for record in self._read_records(SessionRecord):
            latest[record.session_id] = record
        return [
            {
                "session_id": r.session_id,
                "group": r.group,
                "gens": r.gens,
                "steps": r.report.n if r.report else 0,
            }
            for r in latest.values()
        ]

    def register(self, mcp):
        @mcp.tool()
        async def decomposer_new_session(group: str, gens: str = "units") -> dict:
            """Start a decomposition of Cay(group, gens) from the standard colouring."""
            record = self.new_session(group, gens)
            session = self.sessions[record.session_id]
            return {
                "session_id": record.session_id,
                "group": record.group,
                "gens": record.gens,
                "colours": session.s,
                "v0": list(session.vertex(0)),
            }

        @mcp.tool()
        async def decomposer_step(session_id: str, steps: int = 1) -> list:
            """Run covering steps and return one report per step."""
            return [r.model_dump() for r in self.step(session_id, steps)]

        @mcp.tool()
        async def decomposer_window(session_id: str, window: str) -> dict:
            """Return the final colouring on a window inside the exhaustion set, with its check."""
            session = self.get_session(session_id)
            W = parse_window(session.spec, window)
            edges = session.stable_window(W)
            report = verify_decomposition_window(session, W)
            render = session.spec.render_element
            return {
                "window": W.render(),
                "edges": [{"base": render(e.base), "gen": e.gen, "colour": col} for e, col in edges],
                "report": report.summary(),
            }

        @mcp.resource("resource://decomposer/sessions")
        def resource_decomposer_sessions() -> list:
            """Return every decomposer session with its step count."""
            return self.list_sessions()
