from src.config.cfg import config


__all__ = [
    "config",
]