from __future__ import annotations
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from SWARMcreator.classes import World, RunConfig


class SimulationProperties:
    world: World = None
    config: RunConfig = None
    run_directory: str = ""
