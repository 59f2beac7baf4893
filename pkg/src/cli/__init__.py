from src.cli.ast import Command, Script
from src.cli.command import CommandResult, ScriptCommand
from src.cli.environment import Environment
from src.cli.parser import parse
from src.cli.printer import print_script, print_statement
from src.cli.report import canonical, render_json, render_text
from src.cli.runner import EXIT_OK, EXIT_SCRIPT_ERROR, EXIT_VERIFY_FAILED, Report, run
from src.cli.validate import validate

__all__ = [
    "Command",
    "Script",
    "CommandResult",
    "ScriptCommand",
    "Environment",
    "parse",
    "print_script",
    "print_statement",
    "canonical",
    "render_json",
    "render_text",
    "EXIT_OK",
    "EXIT_SCRIPT_ERROR",
    "EXIT_VERIFY_FAILED",
    "Report",
    "run",
    "validate",
]
