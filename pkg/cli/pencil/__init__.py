from .__main__ import main

CLI_DESCRIPTION = "Show a pencil with its exactness and kernel-intersection reports."

__all__ = ["main", "CLI_DESCRIPTION"]
