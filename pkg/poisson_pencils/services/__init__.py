from .loader import build_pencil, load_pencil_file, parse_pencil_document, resolve_target
from .render import ReportRenderer
from .runner import RunConfig, Runner, RunResult, run
from .suites import VerificationService

__all__ = [
    "build_pencil",
    "load_pencil_file",
    "parse_pencil_document",
    "resolve_target",
    "ReportRenderer",
    "RunConfig",
    "Runner",
    "RunResult",
    "run",
    "VerificationService",
]
