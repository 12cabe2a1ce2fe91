#!/usr/bin/env python3
"""
Koszul toolkit - main CLI entry point

Computes Gröbner bases and colon ideals, recognises closed graphs, builds
and certifies Koszul filtrations of binomial edge rings and Hibi rings.

Exit codes: 0 verified, 1 mathematical failure, 2 input, configuration or
resource-limit error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to Python path for relative imports
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

from errors import GroebnerLimitExceeded, KoszulToolkitError, ParseError
from config_loader import ConfigLoader, get_nested
from logger import log_config, log_section, setup_logging
from models import Command, ExitCode, Invocation
from algebra import groebner
from commands import CommandRunner, ReportFormatter, report_summary

__version__ = "1.0.0"


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--json', action='store_true', help='Print the report as JSON')
    parser.add_argument('--certify', action='store_true',
                        help='Re-validate every combinatorial formula against the Gröbner oracle')
    parser.add_argument('--seed', type=int, default=0, help='Seed for randomized checks (default: 0)')
    parser.add_argument('--config', type=str, default=None, help='Path to configuration YAML file')
    parser.add_argument('--order', type=str, default=None,
                        help="Monomial order spec, e.g. 'revlex:y1..y3>x1..x3'")
    parser.add_argument('--workers', type=int, default=None, help='Worker threads for verification')
    parser.add_argument('--progress', action='store_true', help='Show progress bars')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Increase verbosity (-v for INFO, -vv for DEBUG)')


def create_argument_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser for CLI."""
    parser = argparse.ArgumentParser(
        prog='koszulcheck',
        description="Gröbner bases, colon ideals and Koszul filtration certificates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  koszulcheck gb data/empty.ideal
  koszulcheck closed data/nonclosed6.graph --search
  koszulcheck bei data/path3.graph --filtration --certify
  koszulcheck koszul-verify data/nonclosed6.filtration --json
  koszulcheck hibi data/b3.poset --filtration
  koszulcheck toric --squarefree 5 2 --linear-quotients
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    gb = sub.add_parser('gb', help='Reduced Gröbner basis of an ideal file')
    gb.add_argument('input')
    gb.add_argument('--naive', action='store_true', help='Disable the pair criteria')
    _add_common_arguments(gb)

    colon = sub.add_parser('colon', help='Colon ideal I : f')
    colon.add_argument('input')
    colon.add_argument('divisor', help="Polynomial f, e.g. 'x3' or 'x1 - x2'")
    _add_common_arguments(colon)

    closed = sub.add_parser('closed', help='Closedness of a graph labeling')
    closed.add_argument('input')
    closed.add_argument('--search', action='store_true', help='Search for a closed relabeling')
    _add_common_arguments(closed)

    bei = sub.add_parser('bei', help='Binomial edge ideal checks')
    bei.add_argument('input')
    modes = bei.add_mutually_exclusive_group()
    modes.add_argument('--check-closed', dest='mode', action='store_const', const='check-closed')
    modes.add_argument('--quadratic-gb', dest='mode', action='store_const', const='quadratic-gb')
    modes.add_argument('--colon', dest='vertex', type=int, metavar='I')
    modes.add_argument('--linear-quotients', dest='mode', action='store_const', const='linear-quotients')
    modes.add_argument('--filtration', dest='mode', action='store_const', const='filtration')
    modes.add_argument('--c-universal', dest='mode', action='store_const', const='c-universal')
    bei.add_argument('--emit', type=str, default=None, help='Write the filtration to this file')
    _add_common_arguments(bei)

    verify = sub.add_parser('koszul-verify', help='Certify a filtration file')
    verify.add_argument('input')
    verify.add_argument('--minimality', action='store_true', help='Probe which members can be dropped')
    _add_common_arguments(verify)

    hibi = sub.add_parser('hibi', help='Hibi rings of distributive lattices')
    hibi.add_argument('input', help='Poset file (Birkhoff lattice) or lattice file')
    hibi_modes = hibi.add_mutually_exclusive_group()
    hibi_modes.add_argument('--ideals', dest='mode', action='store_const', const='ideals')
    hibi_modes.add_argument('--joinmeet', dest='mode', action='store_const', const='joinmeet')
    hibi_modes.add_argument('--filtration', dest='mode', action='store_const', const='filtration')
    hibi_modes.add_argument('--upsets', dest='mode', action='store_const', const='upsets')
    hibi_modes.add_argument('--colon', nargs=2, metavar=('I', 'J'), help="Poset ideals, e.g. 'I_' 'I_,I_p1'")
    hibi_modes.add_argument('--reduced', type=str, metavar='FAMILY_FILE')
    _add_common_arguments(hibi)

    toric = sub.add_parser('toric', help='Toric ideal of a monomial map')
    toric.add_argument('input', nargs='?', help='Images file')
    toric.add_argument('--squarefree', nargs=2, type=int, metavar=('M', 'D'),
                       help='Use the squarefree monomials of degree D in M parameters')
    toric.add_argument('--linear-quotients', action='store_true',
                       help='Check linear quotients of the reversed variable sequence')
    _add_common_arguments(toric)

    return parser


def build_invocation(args: argparse.Namespace) -> Invocation:
    """Translate parsed arguments into an :class:`Invocation`.

    Raises:
        ValueError: If required arguments for the subcommand are missing
    """
    command = Command(args.command)
    inputs = [args.input] if getattr(args, 'input', None) else []
    options = {}
    if command == Command.GB:
        options['naive'] = args.naive
    elif command == Command.COLON:
        options['divisor'] = args.divisor
    elif command == Command.CLOSED:
        options['search'] = args.search
    elif command == Command.BEI:
        if args.vertex is not None:
            options.update(mode='colon', vertex=args.vertex)
        else:
            options['mode'] = args.mode or 'check-closed'
        options['emit'] = args.emit
    elif command == Command.KOSZUL_VERIFY:
        options['minimality'] = args.minimality
    elif command == Command.HIBI:
        if args.colon:
            options.update(mode='colon', lower=args.colon[0], upper=args.colon[1])
        elif args.reduced:
            options.update(mode='reduced', family=args.reduced)
        else:
            options['mode'] = args.mode or 'ideals'
    elif command == Command.TORIC:
        options['squarefree'] = tuple(args.squarefree) if args.squarefree else None
        options['linear_quotients'] = args.linear_quotients
        if not inputs and not args.squarefree:
            raise ValueError("toric needs an images file or --squarefree M D")
    return Invocation(
        command=command,
        inputs=inputs,
        order=args.order,
        json=args.json,
        certify=args.certify,
        seed=args.seed,
        options=options,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command line and return its exit code."""
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else int(ExitCode.INPUT_ERROR)

    setup_logging(verbosity=args.verbose)
    logger = logging.getLogger('koszul_toolkit.cli')

    try:
        config_loader = ConfigLoader()
        config = config_loader.load(args.config)
        config = config_loader.apply_environment(config)
        config = config_loader.merge_with_args(config, args)
        config_loader.validate(config)

        logging_config = config.get('logging', {})
        if args.verbose == 0 or logging_config.get('file'):
            setup_logging(
                verbosity=args.verbose,
                level=logging_config.get('level') if args.verbose == 0 else None,
                log_file=logging_config.get('file'),
                log_format=logging_config.get('format'),
                date_format=logging_config.get('date_format'),
            )
        log_section(f"koszulcheck {args.command}")
        log_config(config)

        groebner.configure(
            max_pairs=get_nested(config, 'groebner.max_pairs'),
            debug_recompute=get_nested(config, 'groebner.debug_recompute', False),
        )
        invocation = build_invocation(args)
        report = CommandRunner(config, logger).run(invocation)
    except ParseError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except GroebnerLimitExceeded as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except (FileNotFoundError, OSError) as e:
        print(f"ERROR: File not found: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except ValueError as e:
        print(f"ERROR: Configuration error: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except KoszulToolkitError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    finally:
        groebner.configure()

    formatter = ReportFormatter(logger)
    if invocation.json:
        print(formatter.to_json(report))
    else:
        print(formatter.format_console_report(report))
    logger.info(f"Summary: {report_summary(report)}")
    return report.exit_code


def main() -> int:
    """Main entry point for the CLI."""
    try:
        return int(run())
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
