"""Entry point for the gfkit CLI.

Usage:
    python -m gfkit <command> [args...]
    gfkit <command> [args...]          (after pip install -e .)
"""

from gfkit.adapters.cli import run_cli


def main() -> None:
    run_cli()


if __name__ == "__main__":
    main()
