"""
Command-line runner for welded Milnor invariants
Reports go to stdout, status and errors to stderr
"""

import argparse
import copy
import sys
from typing import Dict, List, Optional

import yaml

from arrows import RELATIONS, format_exponents_tsv, generator_power, normal_form
from classify import (
    BudgetExceeded,
    count_sm,
    count_wm,
    equivalent_2n_sv,
    equivalent_sv,
    equivalent_Vn_sv,
    fingerprint_report,
    order_Vn_group,
)
from diagram import (
    CrossingSite,
    DiagramFormatError,
    GaussCode,
    Move,
    MoveSite,
    dumps,
    load_code,
    reidemeister,
    save_code,
    scramble,
)
from evaluator import MilnorEvaluator, format_table_tsv
from moves import Direction, apply_Vn, delete_2n, insert_2n, virtualize_crossing
from suites import SUITES, all_passed
from utils.validation import validate_code

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SUITE_FAILURE = 3

DEFAULT_CONFIG = {
    'invariants': {'max_len': 3},
    'scramble': {'steps': 30},
    'verification': {
        'seed': 2024,
        'trials': 50,
        'max_strands': 4,
        'max_crossings': 12,
        'scramble_steps': 30,
        'max_len': 4,
        'moduli': [2, 3],
        'primes': [2, 3],
    },
    'classify': {'enumeration_budget': 10000},
    'output': {'verbose': False},
}


class UsageError(Exception):
    """Bad flags, unknown names or an unusable config (exit code 1)"""


class InputError(Exception):
    """Unreadable, malformed or invalid diagram input (exit code 2)"""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose errors map to the usage exit code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ERROR: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def load_config(config_path: str = "config.yaml") -> dict:
    """
    Load configuration from YAML file, falling back to built-in defaults

    Raises:
        UsageError: if the file exists but is not a YAML mapping
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    try:
        with open(config_path, 'r') as f:
            loaded = yaml.safe_load(f) or {}
    except FileNotFoundError:
        return config
    except yaml.YAMLError as e:
        raise UsageError(f"Invalid YAML in configuration file: {e}") from e
    if not isinstance(loaded, dict):
        raise UsageError(f"Configuration file {config_path} must hold a mapping")
    for section, values in loaded.items():
        if isinstance(values, dict) and isinstance(config.get(section), dict):
            config[section].update(values)
        else:
            config[section] = values
    return config


def status(args, message: str):
    if args.verbose:
        print(message, file=sys.stderr)


def read_diagram(path: str) -> GaussCode:
    """Load and validate a diagram file"""
    try:
        code = load_code(path)
    except DiagramFormatError as e:
        raise InputError(str(e)) from e
    is_valid, violations = validate_code(code)
    if not is_valid:
        raise InputError(f"Invalid Gauss code in {path}: " + "; ".join(violations))
    return code


def parse_sequence(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"Index sequence must be comma-separated integers, got '{text}'") from e


def write_output(text: str, path: Optional[str]):
    if path:
        with open(path, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args, config: dict, evaluator: MilnorEvaluator) -> int:
    code = read_diagram(args.file)
    max_len = args.max_len if args.max_len is not None else config['invariants']['max_len']
    if max_len < 2:
        raise UsageError(f"--max-len must be >= 2, got {max_len}")
    if args.mod is not None and args.mod < 1:
        raise UsageError(f"--mod must be >= 1, got {args.mod}")
    status(args, f"[1/2] Loaded {code.m}-strand diagram with {code.crossing_count()} crossings")
    table = evaluator.table(code, max_len, args.non_repeated)
    status(args, f"[2/2] Computed {len(table)} invariants")
    sys.stdout.write(format_table_tsv(table, args.mod))
    return EXIT_OK


def cmd_normal_form(args, config: dict, evaluator: MilnorEvaluator) -> int:
    code = read_diagram(args.file)
    if args.relation != "sv" and args.n is None:
        raise UsageError(f"--n is required for relation {args.relation}")
    if args.relation != "sv" and args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    status(args, f"[1/2] Peeling normal form ({args.relation})...")
    nf = normal_form(code, args.relation, None if args.relation == "sv" else args.n, evaluator)
    status(args, f"[2/2] ✓ Representative has {nf.code.crossing_count()} crossings")
    diagram_text = dumps(nf.code) + "\n"
    exponent_text = format_exponents_tsv(nf)
    if args.out or args.exponents_out:
        write_output(diagram_text, args.out)
        write_output(exponent_text, args.exponents_out)
    else:
        sys.stdout.write(diagram_text + "\n" + exponent_text)
    return EXIT_OK


def _move_site(args) -> MoveSite:
    if args.strands is None or args.positions is None:
        raise UsageError("This move needs --strands A B and --positions PA PB")
    return MoveSite(args.strands[0], args.positions[0], args.strands[1], args.positions[1])


def cmd_apply_move(args, config: dict, evaluator: MilnorEvaluator) -> int:
    code = read_diagram(args.file)
    move = args.move
    if move in ("R1", "R2", "R3", "OC"):
        site = CrossingSite(tuple(args.ids)) if args.ids else _move_site(args)
        result = reidemeister(code, Move(move), site, sign=args.sign)
    elif move == "2n":
        result = insert_2n(code, _move_site(args), args.n, args.sign)
    elif move == "2n-delete":
        result = delete_2n(code, _move_site(args), args.n)
    elif move == "vn":
        result = apply_Vn(code, args.n, Direction(args.direction), _move_site(args), args.sign)
    elif move == "virtualize":
        if not args.ids or len(args.ids) != 1:
            raise UsageError("virtualize needs exactly one --ids crossing id")
        result = virtualize_crossing(code, args.ids[0])
    else:
        steps = args.steps if args.steps is not None else config['scramble']['steps']
        result = scramble(code, steps, args.seed)
    status(args, f"✓ {move}: {code.crossing_count()} -> {result.crossing_count()} crossings")
    if args.out:
        save_code(result, args.out)
    else:
        sys.stdout.write(dumps(result) + "\n")
    return EXIT_OK


def cmd_equiv(args, config: dict, evaluator: MilnorEvaluator) -> int:
    a, b = read_diagram(args.file_a), read_diagram(args.file_b)
    if a.m != b.m:
        raise InputError(f"Strand counts differ: {a.m} vs {b.m}")
    if args.relation == "sv":
        result = equivalent_sv(a, b, evaluator)
    else:
        if args.n is None or args.n < 1:
            raise UsageError(f"--n >= 1 is required for relation {args.relation}")
        check = equivalent_2n_sv if args.relation == "2n-sv" else equivalent_Vn_sv
        result = check(a, b, args.n, evaluator)
    sys.stdout.write(f"relation={args.relation} equivalent={'true' if result else 'false'}\n")
    return EXIT_OK


def cmd_verify(args, config: dict, evaluator: MilnorEvaluator) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"Unknown suite '{args.suite}', expected one of {', '.join(SUITES)}")
    settings: Dict = dict(config['verification'])
    if args.seed is not None:
        settings['seed'] = args.seed
    if args.trials is not None:
        settings['trials'] = args.trials
    status(args, f"[1/2] Running suite {args.suite} (seed={settings['seed']}, trials={settings['trials']})...")
    suite = SUITES[args.suite](evaluator, settings, verbose=args.verbose)
    history = suite.run()
    for record in history:
        sys.stdout.write(suite.format_record(record) + "\n")
    passed = all_passed(history)
    if passed:
        status(args, f"[2/2] ✓ All {len(history)} trials passed")
        return EXIT_OK
    status(args, "[2/2] ⚠️  WARNING: suite reported failures")
    return EXIT_SUITE_FAILURE


def cmd_count(args, config: dict, evaluator: MilnorEvaluator) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be >= 1")
    lines = [
        f"m={args.m} s_m={count_sm(args.m)} w_m={count_wm(args.m)} "
        f"order={order_Vn_group(args.m, args.n)} n={args.n}"
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if args.enumerate:
        budget = args.budget if args.budget is not None else config['classify']['enumeration_budget']
        status(args, f"[1/1] Enumerating representatives (budget {budget})...")
        text, _, _ = fingerprint_report(args.m, args.n, budget, evaluator)
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args, config: dict, evaluator: MilnorEvaluator) -> int:
    seq = parse_sequence(args.I)
    power = -args.power if args.inverse else args.power
    code = generator_power(args.m, seq, args.i, power)
    if args.out:
        save_code(code, args.out)
    else:
        sys.stdout.write(dumps(code) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(description="Welded Milnor invariants, normal forms and local moves")
    parser.add_argument("--config", default="config.yaml", help="Path to config.yaml")
    parser.add_argument("--verbose", action="store_true", help="Status lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    p = sub.add_parser("invariants", help="Invariant table as TSV")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--non-repeated", action="store_true")
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("normal-form", help="Representative diagram and exponent TSV")
    p.add_argument("file")
    p.add_argument("--relation", choices=RELATIONS, default="sv")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None, help="Write the representative diagram here")
    p.add_argument("--exponents-out", default=None, help="Write the exponent TSV here")
    p.set_defaults(handler=cmd_normal_form)

    p = sub.add_parser("apply-move", help="Rewrite a diagram")
    p.add_argument("file")
    p.add_argument("--move", required=True,
                   choices=["R1", "R2", "R3", "OC", "2n", "2n-delete", "vn", "virtualize", "scramble"])
    p.add_argument("--strands", type=int, nargs=2, default=None)
    p.add_argument("--positions", type=int, nargs=2, default=None)
    p.add_argument("--ids", type=int, nargs="+", default=None)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--sign", type=int, choices=[1, -1], default=1)
    p.add_argument("--direction", choices=[d.value for d in Direction], default="classicalize")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_apply_move)

    p = sub.add_parser("equiv", help="Decide an equivalence relation")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--relation", choices=RELATIONS, default="sv")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("count", help="Counting formulas and representative fingerprints")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("gen", help="Generator link W_Ii^x")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--I", required=True, help="Comma-separated sequence in S_k(i)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_gen)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        args.verbose = args.verbose or bool(config['output'].get('verbose', False))
        evaluator = MilnorEvaluator(verbose=False)
        return args.handler(args, config, evaluator)
    except InputError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, BudgetExceeded) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
