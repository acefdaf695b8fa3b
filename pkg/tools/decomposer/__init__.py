"""
Step-by-step Hamilton decompositions of one-ended abelian Cayley graphs.
"""

from .session import Session, StepReport, extend_path, new_session, stable_window, step

__all__ = ["Session", "StepReport", "extend_path", "new_session", "stable_window", "step"]
