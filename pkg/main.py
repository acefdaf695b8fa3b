"""
Hamilton Tools - MCP server for Hamilton decompositions

Main entry point for the Hamilton Tools MCP server with all tools registered.
"""

import asyncio

from mcp.server.fastmcp import FastMCP
from mcp.server.fastmcp.utilities.logging import configure_logging

from tools import CoveringTool, DecomposerTool, ProductTool, VerifierTool
from tools.settings import get_settings


def create_mcp_server() -> FastMCP:
    """Create and configure the MCP server with all tools."""
    settings = get_settings()
    configure_logging(settings.log_level)

    data_dir = settings.data_dir
    data_dir.mkdir(parents=True, exist_ok=True)

    mcp = FastMCP("Hamilton Tools")

    # Initialize tools (this will also register them with MCP)
    for tool in (CoveringTool, DecomposerTool, ProductTool, VerifierTool):
        asyncio.run(tool(data_dir).initialize(mcp))

    return mcp


# Expose a global MCP server object for MCP CLI compatibility
mcp = create_mcp_server()


def main():
    mcp.run()


if __name__ == "__main__":
    main()
