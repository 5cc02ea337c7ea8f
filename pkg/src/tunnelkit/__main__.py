"""Allow running the command-line interface as ``python -m tunnelkit``."""
from .cli import run

if __name__ == "__main__":
    run()
