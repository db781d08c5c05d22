"""Cocommutative bialgebras, split extensions and commutators.

Monoids and groups are lists of rows with the identity at index 0.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__, run_cli

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]


def main(argv=None):
    """Entry point mirroring the ``bialg`` executable."""
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
