from .__main__ import main

CLI_DESCRIPTION = "Characteristic polynomial, lam-roots and central invariants of a pencil."

__all__ = ["main", "CLI_DESCRIPTION"]
