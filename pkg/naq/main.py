#!/usr/bin/env python3
"""
Main entry point for the NAQ command line.
"""
import argparse
import json
import logging
import sys

from naq import __version__
from naq.core.config import SessionConfig
from naq.core.errors import NaqError
from naq.core.report import EXIT_ERROR, EXIT_OK, write_document
from naq.core.session_manager import SessionManager

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level=logging.INFO, log_file=None):
    """Configure application logging

    Logs go to standard error; standard output carries the JSON documents.
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        prog="naq", description="NAQ - exact checks of nearly associative star products")
    parser.add_argument("--version", action="version", version=f"naq {__version__}")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--log-file", help="Also write the log to this file")

    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", help="Run a session and emit its report")
    check.add_argument("config", help="Path to a JSON session file")
    check.add_argument("--no-timing", action="store_true",
                       help="Leave the timing block out of the report")

    jacobiator = subparsers.add_parser("jacobiator", help="Emit the Jacobiator entries J^ijk")
    jacobiator.add_argument("config", help="Path to a JSON session file")

    evaluate = subparsers.add_parser("eval", help="Evaluate a star expression")
    evaluate.add_argument("config", help="Path to a JSON session file")
    evaluate.add_argument("--expr", required=True, help="Star expression, e.g. 'x1*x2 - x2*x1'")

    for sub in (check, jacobiator, evaluate):
        sub.add_argument("--out", help="Write the JSON document to this path instead of stdout")

    return parser.parse_args(argv)


def run_command(args):
    """Execute a parsed command and return (document text, exit code)"""
    session = SessionConfig.load(args.config)
    manager = SessionManager(session)
    if args.command == "check":
        report = manager.run()
        return report.to_json(include_timing=not args.no_timing), report.exit_code
    if args.command == "jacobiator":
        return json.dumps(manager.jacobiator_document(), indent=2) + "\n", EXIT_OK
    return json.dumps(manager.evaluate(args.expr), indent=2) + "\n", EXIT_OK


def main(argv=None):
    """Main application entry point"""
    args = parse_arguments(argv)

    setup_logging(logging.DEBUG if args.debug else logging.INFO, args.log_file)
    logger = logging.getLogger(__name__)
    logger.info(f"Starting naq {args.command}")

    try:
        text, code = run_command(args)
    except (NaqError, OSError, json.JSONDecodeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_ERROR

    try:
        write_document(text, args.out)
    except OSError as e:
        logger.error(f"Could not write {args.out}: {e}")
        return EXIT_ERROR
    if args.out is None:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
