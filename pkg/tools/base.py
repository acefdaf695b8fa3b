"""
Base tool interface for the Hamilton Tools MCP server.
"""

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Type, TypeVar

from pydantic import BaseModel

Record = TypeVar("Record", bound=BaseModel)


class BaseTool(ABC):
    """Base class for all tools in the Hamilton Tools server."""

    def __init__(self, data_dir: Path):
        self.data_dir = data_dir
        self.data_file = data_dir / f"{self.name}.jsonl"

    @property
    @abstractmethod
    def name(self) -> str:
        """Tool name identifier."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Tool description for MCP clients."""
        pass

    @abstractmethod
    def get_capabilities(self) -> List[str]:
        """List of tool capabilities."""
        pass

    async def initialize(self, mcp) -> None:
        """Create the tool's data file and register it with the MCP server."""
        self.data_file.parent.mkdir(parents=True, exist_ok=True)
        self.data_file.touch(exist_ok=True)
        self.register(mcp)

    async def cleanup(self) -> None:
        """Cleanup resources when the tool is shut down."""
        pass

    def _append_record(self, record: BaseModel) -> None:
        self.data_file.parent.mkdir(parents=True, exist_ok=True)
        with open(self.data_file, "a") as f:
            f.write(record.model_dump_json() + "\n")

    def _read_records(self, model: Type[Record]) -> List[Record]:
        if not self.data_file.exists():
            return []
        with open(self.data_file, "r") as f:
            return [model(**json.loads(line)) for line in f if line.strip()]

    def checkpoint_path(self, key: str) -> Path:
        return self.data_dir / "checkpoints" / self.name / f"{key}.txt"

    def get_tool_functions(self) -> List[Dict[str, Any]]:
        """MCP tool function names exposed by this tool."""
        return [{"name": f"{self.name}_{cap}"} for cap in self.get_capabilities()]

    @abstractmethod
    def register(self, mcp):
        """Register all tool functions and resources with the MCP server."""
        pass
