"""
Command-line front end.
"""

from src.cli.commands import (
    CommandResult, cmd_chern, cmd_chi, cmd_classify, cmd_coh, cmd_delpezzo,
    cmd_trisecant, cmd_verify_paper,
)
from src.cli.output import render, to_json, to_text
