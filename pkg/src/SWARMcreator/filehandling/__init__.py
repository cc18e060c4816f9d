from __future__ import annotations

import logging
import os
from typing import Iterable, TYPE_CHECKING

import jinja2

import SWARMcreator
from . import constants, config, items, results
from .typing import ManifestDict
from ..Template import HOME_DIR, MANIFEST_TEMPLATE, available_presets, preset_path

if TYPE_CHECKING:
    from SWARMcreator.classes import RunConfig


def resolve_config_path(name_or_path: str) -> str:
    """A path to a config file, or the name of a bundled preset"""
    if os.path.isfile(name_or_path):
        return name_or_path
    path = preset_path(name_or_path)
    if path is not None:
        logging.debug(f"using preset '{name_or_path}' ({path})")
        return path
    raise FileNotFoundError(f"File '{name_or_path}' does not exist! Known presets: {', '.join(available_presets())}")


def open_config(name_or_path: str | None, overrides: Iterable[str] = ()) -> RunConfig:
    layers = list()
    if name_or_path is not None:
        layers.append(config.read(resolve_config_path(name_or_path)))
    layers.append(config.parse_overrides(overrides))
    return config.load(*layers)


def create_manifest(run_config: RunConfig, run_directory: str, wall_time: float) -> str:
    manifest: ManifestDict = {
        "version": SWARMcreator.__version__,
        "seed": run_config.seed,
        "run_directory": run_directory,
        "wall_time": round(wall_time, 3),
        "config": config.write(run_config),
    }
    file_loader = jinja2.FileSystemLoader(HOME_DIR)
    env = jinja2.Environment(loader=file_loader)
    env.trim_blocks = True
    env.lstrip_blocks = True
    template = env.get_template(MANIFEST_TEMPLATE)
    return template.render(**manifest)


def write_manifest(run_config: RunConfig, run_directory: str, wall_time: float) -> str:
    path = os.path.join(run_directory, constants.MANIFEST_FILE)
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(create_manifest(run_config, run_directory, wall_time))
    return path
