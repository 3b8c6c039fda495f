"""Allow ``python -m akizuki`` to behave like the console script."""

from .cli import app

app()
