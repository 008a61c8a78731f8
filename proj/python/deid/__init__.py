"""Speech de-identification toolkit (Python bindings)."""

from ._core import *  # noqa: F401,F403
from ._core import DeidError, ParseError, run_cli

__version__ = "0.1.0"


def main():
    import sys

    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    raise SystemExit(code)
