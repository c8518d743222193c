"""CLI main entry point."""

import logging
import sys
from typing import TextIO

from attnet.cli.args import RunConfig, config_from_namespace, parse_arguments
from attnet.constants import EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_OK
from attnet.exceptions import AttnetError
from attnet.services.commands import COMMANDS
from attnet.services.renderers import OutputFormat, render, render_error
from attnet.services.writer import write_report

logger = logging.getLogger("attnet")


def configure_logging(verbose: bool) -> None:
    """Log to stderr only, so stdout stays machine-readable."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False


def _report_error(config: RunConfig, kind: str, message: str, exit_code: int, stdout: TextIO, stderr: TextIO) -> int:
    print(f"Error: {message}", file=stderr)
    if config.output is OutputFormat.JSON:
        stdout.write(render_error(config.command.value, kind, message, exit_code))
    return exit_code


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Run one command and return its exit status.

    Exit codes:
        0: Success
        1: Mismatch (reference tables or independence cases)
        2: Input error (bad option, malformed rational, unknown node, t = 0 for d^t)
        3: Domain error (divergent delta)
        4: Capacity error (enumeration bound exceeded)
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        result = COMMANDS[config.command](config)
        text = render(result, config.output, config.exact, config.digits)
        if config.out is not None:
            write_report(text, config.out, force=config.force)
        else:
            stdout.write(text)
    except AttnetError as e:
        return _report_error(config, e.kind, e.message, e.exit_code, stdout, stderr)
    except OSError as e:
        return _report_error(config, "input", f"{type(e).__name__}: {e}", EXIT_INPUT_ERROR, stdout, stderr)

    return EXIT_OK if result.ok else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, configure logging and run."""
    args = parse_arguments(argv)
    configure_logging(getattr(args, "verbose", False))
    try:
        config = config_from_namespace(args)
    except AttnetError as e:
        print(f"Error: {e.message}", file=sys.stderr)
        if getattr(args, "output", None) == OutputFormat.JSON.value:
            sys.stdout.write(render_error(args.command, e.kind, e.message, e.exit_code))
        return e.exit_code
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
