from pathlib import Path
import os


def get_project_root() -> str:
    return str(Path(__file__).resolve().parents[2])


def assemble_project_path(path: str) -> str:
    """Resolve a path relative to the project root; absolute paths pass through."""
    if not os.path.isabs(path):
        path = os.path.join(get_project_root(), path)
    return path
