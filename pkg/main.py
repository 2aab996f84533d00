"""
Main script for the quadric bundle calculator.

Run `python main.py <command> --help` for the options of each command.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional

from config import config_by_name, get_config
from src.cli.commands import (
    BUNDLE_NAMES, cmd_chern, cmd_chi, cmd_classify, cmd_coh, cmd_delpezzo,
    cmd_trisecant, cmd_verify_paper,
)
from src.cli.output import render
from src.verification.suites import SECTIONS


def int_list(count: int):
    """argparse type for `count` comma-separated integers."""
    def parse(text: str):
        try:
            values = tuple(int(v) for v in text.split(','))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got '{text}'")
        if len(values) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got '{text}'")
        return values
    return parse


CLASS_OPTIONS = ('-c', '--classes')
NEGATIVE_LIST = re.compile(r'^-\d+(,-?\d+)+$')


def attach_negative_lists(argv: List[str]) -> List[str]:
    """Rewrite `-c -1,1,0` as `--classes=-1,1,0`; argparse reads a leading minus as an option."""
    attached, i = [], 0
    while i < len(argv):
        if argv[i] in CLASS_OPTIONS and i + 1 < len(argv) and NEGATIVE_LIST.match(argv[i + 1]):
            attached.append(f"--classes={argv[i + 1]}")
            i += 2
        else:
            attached.append(argv[i])
            i += 1
    return attached


def non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="Emit machine-readable JSON")

    parser = argparse.ArgumentParser(description="Bundle computations on the smooth quadric threefold.")
    parser.add_argument('--profile', default='default', choices=sorted(config_by_name),
                        help="Configuration profile (default: default)")
    parser.add_argument('-v', '--verbose', action='store_true', help="Debug logging on stderr")
    commands = parser.add_subparsers(dest='command', required=True)

    chern = commands.add_parser('chern', parents=[common], help="Chern-class calculus")
    chern.add_argument('operation', choices=['twist', 'dual', 'tensor', 'whitney'])
    chern.add_argument('-r', '--rank', type=non_negative, default=0)
    chern.add_argument('-c', '--classes', type=int_list(3), default=(0, 0, 0), help="c1,c2,c3")
    chern.add_argument('-k', type=int, default=0, help="Twist")
    chern.add_argument('--with', dest='other', type=int_list(4), help="r,c1,c2,c3 of the second factor")
    chern.add_argument('--sub', type=int_list(4), help="r,c1,c2,c3 of the subbundle")
    chern.add_argument('--ambient-rank', type=non_negative, help="Rank of a trivial middle term")
    chern.add_argument('--total', type=int_list(4), help="r,c1,c2,c3 of the middle term")

    chi = commands.add_parser('chi', parents=[common], help="Euler characteristic")
    chi.add_argument('-r', '--rank', type=non_negative, required=True)
    chi.add_argument('-c', '--classes', type=int_list(3), required=True, help="c1,c2,c3")
    chi.add_argument('--method', choices=['formula', 'hrr', 'both'], default='both')

    coh = commands.add_parser('coh', parents=[common], help="Cohomology tables")
    coh.add_argument('bundle', help=f"One of {', '.join(BUNDLE_NAMES)} or pair:<name>")
    coh.add_argument('twist', type=int, nargs='?', default=0)

    classify = commands.add_parser('classify', parents=[common], help="Classification tables")
    classify.add_argument('--c1', type=int, choices=[0, 1, 2], required=True)
    classify.add_argument('--c2', type=int, help="Restrict to one second Chern class")
    classify.add_argument('--rank3-only', action='store_true')
    classify.add_argument('--indecomposable', action='store_true')

    delpezzo = commands.add_parser('delpezzo', parents=[common], help="Classes on a quartic del Pezzo surface")
    delpezzo.add_argument('d', type=int)
    delpezzo.add_argument('g', type=int)
    delpezzo.add_argument('--all-forms', action='store_true', help="List every member of a Cremona orbit")
    delpezzo.add_argument('--filter', action='store_true', help="Keep classes with a plane model of enough genus")

    trisecant = commands.add_parser('trisecant', parents=[common], help="Trisecant line count")
    trisecant.add_argument('d', type=int)
    trisecant.add_argument('g', type=int)

    verify = commands.add_parser('verify-paper', parents=[common], help="Check published values")
    verify.add_argument('--section', action='append', choices=SECTIONS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(attach_negative_lists(argv))
    config = get_config(args.profile)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )

    handlers = {
        'chern': cmd_chern,
        'chi': cmd_chi,
        'coh': cmd_coh,
        'classify': cmd_classify,
        'delpezzo': cmd_delpezzo,
        'trisecant': cmd_trisecant,
    }
    if args.command == 'verify-paper':
        result = cmd_verify_paper(args, config)
    else:
        result = handlers[args.command](args)
    print(render(result, args.json))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
