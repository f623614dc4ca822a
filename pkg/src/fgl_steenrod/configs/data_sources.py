from dataclasses import dataclass

from fgl_steenrod.configs.directories import Directories


@dataclass
class DataSources:
    """Bundled ring configuration files."""
    RINGS = Directories().RING_CONFIGS
    GROUND_FIELD = RINGS / "ground_field.json"
    POLYNOMIAL_T = RINGS / "polynomial_t.json"
    DUAL_STEENROD_3 = RINGS / "dual_steenrod_k3.json"
    MO_COOPERATIONS_3 = RINGS / "mo_cooperations_m3.json"
    SOLVER_A2_A6 = RINGS / "solver_a2_a6.json"
