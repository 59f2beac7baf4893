"""Executes a validated script statement by statement and collects the report."""

from dataclasses import dataclass, field
from typing import List, Optional

import src.cli.commands  # noqa: F401  (fills the registry)
from src.cli.ast import Command, Script
from src.cli.command import CommandResult
from src.cli.environment import Environment
from src.cli.printer import print_statement
from src.cli.validate import validate
from src.exception import CommandFailed, ModpairError
from src.logger import Monitor, logger
from src.registry import REGISTED_COMMANDS

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_SCRIPT_ERROR = 2


@dataclass
class Outcome:
    index: int
    text: str
    verify: bool
    result: CommandResult


@dataclass
class Report:
    outcomes: List[Outcome] = field(default_factory=list)
    failure: Optional[CommandFailed] = None
    monitor: Optional[Monitor] = None

    @property
    def exit_code(self) -> int:
        if self.failure is not None:
            return EXIT_SCRIPT_ERROR
        if any(o.verify and o.result.verdict is not True for o in self.outcomes):
            return EXIT_VERIFY_FAILED
        return EXIT_OK


def _head(statement) -> str:
    return print_statement(statement).splitlines()[0].split(" {")[0].rstrip(";")


def run(script: Script, order: str = "grevlex") -> Report:
    """
    Run every statement in order.

    Validation errors are raised before anything is computed. The first hard
    error inside a declaration or command stops the run; the report keeps the
    outcomes so far and records the failure.
    """
    validate(script)
    env = Environment(order)
    report = Report(monitor=Monitor(logger))
    for statement in script.statements:
        if not isinstance(statement, Command):
            try:
                env.declare(statement)
            except ModpairError as error:
                report.failure = CommandFailed(_head(statement), error)
                logger.log_error(f"line {statement.line}: {report.failure.message}")
                break
            continue

        text = print_statement(statement)[:-1]
        index = len(report.outcomes) + 1
        logger.log_rule(f"[{index}] {text}")
        command = REGISTED_COMMANDS[statement.name]()
        try:
            with report.monitor.track(f"[{index}] {statement.name}"):
                result = command(env, statement)
        except ModpairError as error:
            report.failure = CommandFailed(text, error)
            logger.log_error(f"line {statement.line}: {report.failure.message}")
            break
        logger.info(f"verdict: {result.verdict_text}")
        report.outcomes.append(Outcome(index, text, statement.verify, result))
    return report
