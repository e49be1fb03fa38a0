"""
Shared plumbing for the command scripts: arguments, configuration, output.
"""

import argparse
import json
import logging
from typing import Any, Callable, Optional

from algebra.cache import BasisCache
from config.config_manager import ConfigError, ConfigManager, get_config, set_config
from quiver.dynkin import QuiverError
from utils.file_utils import FileOperationError
from utils.logging_utils import setup_logging
from verification.context import QuiverContext
from verification.verifier import CHECK_ERRORS

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "latex")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

COMMAND_ERRORS = CHECK_ERRORS + (FileOperationError,)


def add_common_arguments(parser: argparse.ArgumentParser, multiple: bool = False) -> None:
    """Flags shared by every command."""
    selector_help = ("Comma-separated quiver selectors, e.g. d6,d7,e6" if multiple
                     else "Quiver selector: d<n+1> (n >= 3), e6, e7 or e8")
    parser.add_argument("--quiver", type=str, required=True, help=selector_help)
    parser.add_argument("--format", type=str, choices=FORMATS, help="Output format (default from config)")
    parser.add_argument("--cache-dir", dest="cache_dir", type=str, help="Basis cache directory")
    parser.add_argument("--no-cache", dest="no_cache", action="store_true", help="Neither read nor write the cache")
    parser.add_argument("--max-degree", dest="max_degree", type=int,
                        help="Only build the basis through this internal degree (partial run)")
    parser.add_argument("--config", type=str, help="Path to custom config file")
    parser.add_argument("--log_level", type=str, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging level")


def parse_standalone(description: str, extra: Optional[Callable[[argparse.ArgumentParser], None]] = None,
                     multiple: bool = False) -> argparse.Namespace:
    """Parse sys.argv for a script run on its own."""
    parser = argparse.ArgumentParser(description=description)
    add_common_arguments(parser, multiple)
    if extra:
        extra(parser)
    return parser.parse_args()


def prepare(args: argparse.Namespace) -> ConfigManager:
    """Load the configuration named by --config, apply CLI overrides and set up logging."""
    config = get_config()
    if getattr(args, "config", None):
        config = ConfigManager(args.config)
        set_config(config)
    config.update_from_args(args)
    setup_logging(getattr(args, "log_level", None))
    return config


def output_format() -> str:
    return get_config().output_format


def build_context(selector: Any) -> QuiverContext:
    """Context for one quiver using the configured cache and degree bound."""
    return QuiverContext(selector, get_config().max_degree, BasisCache())


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def emit(payload: Any, text: Callable[[], str], latex: Optional[Callable[[], str]] = None) -> None:
    """
    Print a command result in the configured format.

    Args:
        payload: JSON-ready result
        text: Renders the plain-text report
        latex: Renders the LaTeX report (falls back to text)
    """
    fmt = output_format()
    if fmt == "json":
        print(dump_json(payload))
    elif fmt == "latex" and latex is not None:
        print(latex())
    else:
        print(text())


def run_command(args: argparse.Namespace, body: Callable[[argparse.Namespace], int]) -> int:
    """
    Prepare configuration and logging, run a command body and map failures to exit codes.

    Returns:
        The body's exit code, 2 for a bad selector or flag value, 1 for a computation failure
    """
    try:
        prepare(args)
        return body(args)
    except (ConfigError, QuiverError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except COMMAND_ERRORS as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        return EXIT_FAILURE
