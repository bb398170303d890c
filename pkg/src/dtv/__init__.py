"""Boundary-verified decoding for code translation.

Interleaves token generation with deterministic verifier calls at
structural code boundaries, with structure-aware rollback, scope
escalation, diagnostic feedback, and an evaluation harness.
"""

from dtv.scopes import ScopeLevel, Task

__all__ = ["ScopeLevel", "Task"]

__version__ = "0.1.0"
