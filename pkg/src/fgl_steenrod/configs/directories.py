from dataclasses import dataclass
from pathlib import Path

import fgl_steenrod


@dataclass
class Directories:
    """Class with all paths used in the repository."""
    MODULE_PATH = Path(fgl_steenrod.__file__).parent
    REPOSITORY_PATH = Path(fgl_steenrod.__file__).parent.parent.parent
    DATA_FOLDER = MODULE_PATH / "data"
    RING_CONFIGS = DATA_FOLDER / "rings"
