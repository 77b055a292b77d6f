"""
robustrank - Entry point for command-line execution
"""

import sys


def main() -> None:
    """Main entry point for the robustrank command line."""
    from robustrank.app import main as app_main

    sys.exit(app_main())


if __name__ == "__main__":
    main()
