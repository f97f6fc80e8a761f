"""Normal forms of the classification with their stated invariants, and a verifier."""
from .entries import CatalogEntry, Degeneration, entries, entry
from .verify import verify_all, verify_entry

__all__ = ["CatalogEntry", "Degeneration", "entries", "entry", "verify_all", "verify_entry"]
