import warnings
warnings.simplefilter("ignore", DeprecationWarning)

import argparse
import sys
from pathlib import Path

root = str(Path(__file__).resolve().parents[0])
sys.path.append(root)

from src.logger import logger
from src.config import config
from src.cli import EXIT_SCRIPT_ERROR, parse, render_json, render_text, run
from src.exception import ScriptError


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description="Check modulus-pair constructions described in a script.")
    parser.add_argument("script", help="Path of the script to run")
    parser.add_argument("--config", default=None, help="toml configuration (default: $MODPAIR_CONFIG or built-in)")
    parser.add_argument("--order", choices=["grevlex", "lex"], default=None, help="Monomial order of the report")
    parser.add_argument("--max-degree", type=int, default=None, help="Degree slack of the membership oracle")
    parser.add_argument("--json", action="store_true", help="Print the JSON mirror of the report")
    parser.add_argument("--log-level", choices=["OFF", "ERROR", "INFO", "DEBUG"], default=None,
                        help="Verbosity of diagnostics on stderr")
    parser.add_argument("--no-timing", action="store_true", help="Leave out the timing footer")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)

    # Init config and logger; flags override the file
    config.init_config(config_path=args.config)
    if args.order is not None:
        config.order = args.order
    if args.max_degree is not None:
        config.max_degree = args.max_degree
    if args.json:
        config.json_report = True
    if args.log_level is not None:
        config.log_level = args.log_level
    if args.no_timing:
        config.timing_footer = False
    logger.init_logger(config.log_path, config.log_level)
    logger.info(f"Load config: {config}")

    try:
        text = Path(args.script).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as error:
        logger.log_error(f"{args.script}: cannot read script: {error}")
        return EXIT_SCRIPT_ERROR

    try:
        report = run(parse(text), order=config.order)
    except ScriptError as error:
        logger.console.print(f"{args.script}: {error.dict()}", markup=False, highlight=False)
        return EXIT_SCRIPT_ERROR

    if config.json_report:
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_text(report, timing=config.timing_footer))
    if report.failure is not None:
        logger.console.print(f"{args.script}: {report.failure.dict()}", markup=False, highlight=False)
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
