from src.utils.path_utils import assemble_project_path, get_project_root
from src.utils.singleton import Singleton

__all__ = [
    "assemble_project_path",
    "get_project_root",
    "Singleton",
]
