# mongeops/__init__.py
import importlib
import logging
import pkgutil
import sys

import click

from . import config

log = logging.getLogger(__name__)


def setup_logging(level: int = None) -> None:
    root = logging.getLogger(__name__)
    if not any(getattr(h, "_mongeops", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._mongeops = True
        root.addHandler(handler)
    root.setLevel(config.LOG_LEVEL if level is None else level)


def create_cli() -> click.Group:
    @click.group(help="Exact checks for third-order nonlocal Hamiltonian operators.")
    @click.version_option("1.0.0", prog_name="mongeops")
    def cli():
        setup_logging()

    # Auto-discover and register all commands: mongeops.commands.<name>.command:cmd
    from . import commands
    for _finder, name, ispkg in pkgutil.iter_modules(commands.__path__, commands.__name__ + "."):
        if not ispkg:
            continue  # shared helpers (common.py)
        try:
            mod = importlib.import_module(f"{name}.command")
        except ModuleNotFoundError as exc:
            if exc.name != f"{name}.command":
                raise
            continue  # package without command.py is fine
        cmd = getattr(mod, "cmd", None)
        if cmd:
            cli.add_command(cmd)
    return cli
