from __future__ import annotations

import hashlib
import logging
import os
from typing import TYPE_CHECKING

import numpy as np

import SWARMcreator
from SWARMcreator import tool
from SWARMcreator.classes import ItemStore, RunConfig, World
from SWARMcreator.constants import config_constants
from SWARMcreator.filehandling import config as config_files

if TYPE_CHECKING:
    from SWARMcreator.module.simulation import SimulationProperties


class Simulation:
    @classmethod
    def get_properties(cls) -> SimulationProperties:
        return SWARMcreator.SimulationProperties

    @classmethod
    def get_world(cls) -> World:
        return cls.get_properties().world

    @classmethod
    def set_world(cls, world: World | None):
        cls.get_properties().world = world

    @classmethod
    def get_config(cls) -> RunConfig:
        return cls.get_properties().config

    @classmethod
    def set_config(cls, config: RunConfig):
        cls.get_properties().config = config

    @classmethod
    def get_run_directory(cls) -> str:
        return cls.get_properties().run_directory

    @classmethod
    def set_run_directory(cls, path: str):
        cls.get_properties().run_directory = path

    @classmethod
    def config_hash(cls, config: RunConfig) -> str:
        flat = config_files.write(config)
        text = "\n".join(f"{key}={value}" for key, value in sorted(flat.items())
                         if key not in config_constants.HASH_EXCLUDED)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:10]

    @classmethod
    def run_directory_name(cls, config: RunConfig) -> str:
        return f"seed{config.seed}_{cls.config_hash(config)}"

    @classmethod
    def prepare_run_directory(cls, config: RunConfig) -> str:
        path = os.path.join(config.output_dir, cls.run_directory_name(config))
        os.makedirs(path, exist_ok=True)
        if not os.access(path, os.W_OK):
            raise PermissionError(f"output directory '{path}' is not writable")
        cls.set_run_directory(path)
        return path

    @classmethod
    def random_streams(cls, seed: int) -> tuple[np.random.Generator, np.random.Generator]:
        """independent PCG64 streams for the simulation and for evaluation"""
        simulation_seq, evaluation_seq = np.random.SeedSequence(seed).spawn(2)
        return np.random.Generator(np.random.PCG64(simulation_seq)), np.random.Generator(np.random.PCG64(evaluation_seq))

    @classmethod
    def create_world(cls, config: RunConfig) -> World:
        items, space = tool.DataStream.load_items(config)
        store = ItemStore(items, space)
        schedule = tool.DataStream.schedule_for(config, items)
        grid = tool.Habitat.create_grid(config.grid_width, config.grid_height)
        if schedule.item_count > grid.width * grid.height:
            logging.warning(f"{schedule.item_count} items will not fit on a {grid.width}x{grid.height} grid")
        field = tool.Habitat.create_field(grid)
        simulation_rng, evaluation_rng = cls.random_streams(config.seed)
        colony = tool.Kinetics.create_colony(config.colony_size_for(schedule.item_count), grid, simulation_rng)
        world = World(config, grid, field, colony, store, schedule, evaluation_rng)
        cls.set_config(config)
        cls.set_world(world)
        logging.info(f"world {grid.width}x{grid.height}: {len(store)} items in {len(schedule.groups)} group(s), "
                     f"{len(colony)} ants, seed {config.seed}")
        return world
