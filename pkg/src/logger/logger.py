import logging
from enum import IntEnum
from typing import Iterable, Optional, Sequence

from rich.console import Console, Group
from rich.markup import escape
from rich.panel import Panel
from rich.rule import Rule
from rich.table import Table
from rich.text import Text

from src.utils import Singleton

YELLOW_HEX = "#d4b702"


class LogLevel(IntEnum):
    OFF = -1  # No output
    ERROR = 0  # Only errors
    INFO = 1  # Normal output (default)
    DEBUG = 2  # Gröbner sizes, chart counts


_LEVELS = {
    LogLevel.OFF: logging.CRITICAL + 10,
    LogLevel.ERROR: logging.ERROR,
    LogLevel.INFO: logging.INFO,
    LogLevel.DEBUG: logging.DEBUG,
}


class ToolkitLogger(logging.Logger, metaclass=Singleton):
    """Process-wide logger. Everything goes to stderr or the log file; stdout is reserved for reports."""

    def __init__(self, name="modpair", level=logging.INFO):
        super().__init__(name, level)

        self.formatter = logging.Formatter(
            fmt="\033[92m%(asctime)s - %(name)s:%(levelname)s\033[0m: %(filename)s:%(lineno)s - %(message)s",
            datefmt="%H:%M:%S",
        )
        self.console = Console(stderr=True, width=100)
        self.file_console: Optional[Console] = None
        self.propagate = False

    def init_logger(self, log_path: Optional[str] = None, level: int | str | LogLevel = LogLevel.INFO):
        """
        Attach a stderr handler and, when a path is given, a file handler.

        Args:
            log_path (str, optional): The log file path.
            level (LogLevel | str | int): Verbosity; strings are LogLevel names.
        """
        if isinstance(level, str):
            level = LogLevel[level.upper()]
        py_level = _LEVELS.get(LogLevel(level), logging.INFO) if isinstance(level, LogLevel) else level
        self.setLevel(py_level)

        for handler in list(self.handlers):
            self.removeHandler(handler)
            handler.close()

        console_handler = logging.StreamHandler()
        console_handler.setLevel(py_level)
        console_handler.setFormatter(self.formatter)
        self.addHandler(console_handler)

        if log_path:
            file_handler = logging.FileHandler(log_path, mode="a")
            file_handler.setLevel(py_level)
            file_handler.setFormatter(self.formatter)
            self.addHandler(file_handler)
            self.file_console = Console(file=open(log_path, "a"), width=100)

    def info(self, msg, *args, **kwargs):
        """
        Overridden info method: rich renderables go to the consoles, plain messages to the handlers.
        """
        if isinstance(msg, (Rule, Panel, Group, Table, Text)):
            if self.isEnabledFor(logging.INFO):
                self.console.print(msg)
                if self.file_console is not None:
                    self.file_console.print(msg)
        else:
            kwargs.setdefault("stacklevel", 2)
            super().info(msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().warning(msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().error(msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().debug(msg, *args, **kwargs)

    def log_error(self, error_message: str) -> None:
        if not self.isEnabledFor(logging.ERROR):
            return
        text = Text(error_message, style="bold red")
        self.console.print(text)
        if self.file_console is not None:
            self.file_console.print(text)

    def log_rule(self, title: str) -> None:
        self.info(
            Rule(
                "[bold]" + escape(title),
                characters="━",
                style=YELLOW_HEX,
            )
        )

    def log_table(self, title: str, columns: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
        """Render chart tables (one row per chart) for the current command."""
        table = Table(title=escape(title), show_header=True, header_style="bold")
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*[escape(str(cell)) for cell in row])
        self.info(table)


logger = ToolkitLogger()
