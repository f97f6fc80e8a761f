# mongeops/commands/catalog/command.py
import logging

import click

from ... import registry
from ...catalog import entries, entry, verify_all, verify_entry
from ..common import common_options, emit_report, guarded, write_text

log = logging.getLogger(__name__)


@click.command("catalog", help="List, verify or emit the normal forms of the classification.")
@click.option("--list", "show", is_flag=True, help="List entry names.")
@click.option("--verify", "verify", metavar="NAME|all", help="Replay the claims of one entry or of all.")
@click.option("--emit", "emit", metavar="NAME", help="Write the operator file of an entry.")
@click.option("--pva", is_flag=True, help="With --verify, also run the lambda-bracket checks.")
@common_options
@guarded("catalog")
def cmd(show, verify, emit, pva, seed, fmt, output, verbose):
    if sum(bool(x) for x in (show, verify, emit)) != 1:
        raise click.UsageError("give exactly one of --list, --verify, --emit")

    if show:
        lines = [f"{e['name']:<26} n={e['n']}  {e['description']}" for e in registry.ENTRIES]
        lines += [f"{note['segre']:<26} {note['text']}" for note in registry.NOTES]
        write_text("\n".join(lines) + "\n", output)
        return 0

    if emit:
        write_text(entry(emit).emit(), output)
        return 0

    if verify == "all":
        report = verify_all(entries(), seed, pva)
    else:
        report = verify_entry(entry(verify), seed, pva)
    log.info(f"[CATALOG] {report.title}: {report.overall}")
    return emit_report(report, fmt, output)
