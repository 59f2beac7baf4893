from src.msch.ore import OreSquare, ore_complete
from src.msch.roof import Roof, compose_roofs, identity_roof, roofs_equal

__all__ = [
    "OreSquare",
    "ore_complete",
    "Roof",
    "compose_roofs",
    "identity_roof",
    "roofs_equal",
]
