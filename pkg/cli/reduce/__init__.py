from .__main__ import main

CLI_DESCRIPTION = "Reduce a pencil to its gauge slice by the Schur complement."

__all__ = ["main", "CLI_DESCRIPTION"]
