"""
Tools package for the Hamilton Tools MCP server.
"""

from .base import BaseTool
from .covering.covering import CoveringTool
from .decomposer.decomposer import DecomposerTool
from .product.product import ProductTool
from .verifier.verifier import VerifierTool

__all__ = [
    "BaseTool",
    "CoveringTool",
    "DecomposerTool",
    "ProductTool",
    "VerifierTool",
]
