from .__main__ import main

CLI_DESCRIPTION = "Export a classical Lie algebra with its Coxeter numbers and leaf dimension (e.g. B2)."

__all__ = ["main", "CLI_DESCRIPTION"]
