# One sub-package per command; each exposes command.py:cmd
