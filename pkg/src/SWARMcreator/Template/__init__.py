from __future__ import annotations

import os

HOME_DIR = os.path.dirname(__file__)
MANIFEST_TEMPLATE = "manifest_template.txt"
PRESET_DIR = os.path.join(HOME_DIR, "presets")
PRESET_SUFFIX = ".cfg"

PRESET_ALIASES = {
    "four-class-batch":  "fig2-batch",
    "four-class-stream": "sec4-stream",
}


def available_presets() -> list[str]:
    return sorted(os.path.splitext(name)[0] for name in os.listdir(PRESET_DIR) if name.endswith(PRESET_SUFFIX))


def preset_path(name: str) -> str | None:
    name = PRESET_ALIASES.get(name, name)
    path = os.path.join(PRESET_DIR, f"{name}{PRESET_SUFFIX}")
    return path if os.path.isfile(path) else None
