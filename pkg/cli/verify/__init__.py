from .__main__ import main

CLI_DESCRIPTION = "Run the verification suites."

__all__ = ["main", "CLI_DESCRIPTION"]
