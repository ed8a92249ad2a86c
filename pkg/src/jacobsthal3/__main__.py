"""Allow `python -m jacobsthal3`."""

from .cli import run

run()
