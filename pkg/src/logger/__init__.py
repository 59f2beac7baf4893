from src.logger.logger import logger, LogLevel, ToolkitLogger, YELLOW_HEX
from src.logger.monitor import Monitor

__all__ = ["logger", "LogLevel", "ToolkitLogger", "Monitor", "YELLOW_HEX"]
