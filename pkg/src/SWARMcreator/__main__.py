from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

import SWARMcreator
from SWARMcreator import filehandling, tool
from SWARMcreator.constants import config_constants
from SWARMcreator.core import simulation
from SWARMcreator.errors import ConfigError, DataFormatError, GridOverflow, SwarmError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


def _seed_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(config_constants.LIST_SEPARATOR) if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")


def _overrides(args: argparse.Namespace) -> list[str]:
    overrides = list(args.set or [])
    if getattr(args, "seed", None) is not None:
        overrides.append(f"{config_constants.RUN_SEED}={args.seed}")
    if getattr(args, "out", None) is not None:
        overrides.append(f"{config_constants.RUN_OUTPUT}={args.out}")
    return overrides


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swarmcreator",
                                     description="Ant colony clustering on a toroidal pheromone grid")
    parser.add_argument("--version", action="version", version=SWARMcreator.__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="simulate one configuration")
    run_parser.add_argument("config", help="config file or preset name")
    run_parser.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config value")
    run_parser.add_argument("--seed", type=int, help="run seed")
    run_parser.add_argument("--out", help="output directory")

    compare_parser = subparsers.add_parser("compare", help="batch against streaming feed over several seeds")
    compare_parser.add_argument("config", help="config file or preset name")
    compare_parser.add_argument("--seeds", type=_seed_list, required=True, help="comma separated seeds")
    compare_parser.add_argument("--workers", type=int, default=1, help="parallel runs")
    compare_parser.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config value")
    compare_parser.add_argument("--out", help="output directory")

    generate_parser = subparsers.add_parser("gen-synthetic", help="write the synthetic data set as CSV")
    generate_parser.add_argument("spec", help="config file or preset name holding the synthetic.* keys")
    generate_parser.add_argument("--out", required=True, dest="items_path", help="CSV file to write")
    generate_parser.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config value")
    return parser


def _run(args: argparse.Namespace) -> int:
    config = filehandling.open_config(args.config, _overrides(args))
    result = simulation.run(config, tool.Simulation, tool.Habitat, tool.Kinetics, tool.DataStream,
                            tool.Evaluation, tool.ExportExcel)
    print(result.run_directory)
    return result.status


def _compare(args: argparse.Namespace) -> int:
    if args.workers < 1:
        raise ConfigError([f"--workers must be >= 1, got {args.workers}"])
    config = filehandling.open_config(args.config, _overrides(args))
    directory, _ = simulation.compare(config, args.seeds, tool.Simulation, tool.ExportExcel, args.workers)
    print(directory)
    return EXIT_OK


def _generate(args: argparse.Namespace) -> int:
    config = filehandling.open_config(args.spec, list(args.set or []))
    items = tool.DataStream.generate_synthetic(config.synthetic)
    print(tool.DataStream.export_items_csv(items, args.items_path))
    return EXIT_OK


COMMANDS = {
    "run": _run,
    "compare": _compare,
    "gen-synthetic": _generate,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = create_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, DataFormatError, FileNotFoundError, GridOverflow) as error:
        logging.error(str(error))
        return EXIT_CONFIG
    except (SwarmError, OSError, AssertionError) as error:
        logging.error(str(error))
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
