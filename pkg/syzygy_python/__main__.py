"""Allow ``python -m syzygy_python``."""

from .cli import cli_main

cli_main()
