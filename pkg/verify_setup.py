"""
Verification script to check if setup is correct
Checks dependencies, config values and a few known invariant values
"""

import sys
from typing import Dict, List

import numpy as np
import yaml


def check_environment() -> bool:
    """Check the interpreter and the third-party packages"""
    print("[1/5] Checking environment...")
    version = sys.version_info
    ok = version >= (3, 10)
    mark = "✓" if ok else "✗"
    print(f"  {mark} Python {version.major}.{version.minor}.{version.micro} (requires 3.10+)")
    print(f"  ✓ pyyaml {yaml.__version__}")
    print(f"  ✓ numpy {np.__version__}")
    return ok


def config_problems(config: Dict) -> List[str]:
    """Values in the verification and classify sections that no suite can run with"""
    problems = []
    v = config['verification']
    if v['max_strands'] < 2:
        problems.append(f"verification.max_strands must be >= 2, got {v['max_strands']}")
    if v['max_len'] < 2:
        problems.append(f"verification.max_len must be >= 2, got {v['max_len']}")
    if v['trials'] < 1:
        problems.append(f"verification.trials must be >= 1, got {v['trials']}")
    problems.extend(f"modulus {n} in verification.moduli is < 1" for n in v['moduli'] if n < 1)
    for p in v['primes']:
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            problems.append(f"{p} in verification.primes is not prime")
    if config['classify']['enumeration_budget'] < 1:
        problems.append("classify.enumeration_budget must be >= 1")
    return problems


def check_config(config_path: str) -> bool:
    """Load config through the CLI loader and validate its values"""
    print("\n[2/5] Checking configuration...")
    from main import UsageError, load_config

    try:
        config = load_config(config_path)
    except UsageError as e:
        print(f"  ✗ {e}")
        return False
    problems = config_problems(config)
    for problem in problems:
        print(f"  ✗ {problem}")
    if not problems:
        v = config['verification']
        print(f"  ✓ seed={v['seed']} trials={v['trials']} moduli={v['moduli']} primes={v['primes']}")
    return not problems


def check_calibration() -> bool:
    """Generator links carry their defining invariant"""
    print("\n[3/5] Checking generator calibration...")
    from arrows import generator
    from evaluator import invariant_table, longitude, longitude_series, wirtinger
    from algebra import magnus_expand

    expected = {
        (2, (2,), 1): {(2, 1): 1, (1, 2): 0},
        (3, (2, 3), 1): {(2, 3, 1): 1, (3, 2, 1): -1, (1, 2, 3): 0},
    }
    ok = True
    for (m, seq, i), values in expected.items():
        code = generator(m, seq, i)
        table = invariant_table(code, len(seq) + 1, True)
        got = {s: table[s] for s in values}
        data = wirtinger(code)
        agree = magnus_expand(longitude(data, i, m), m, m - 1) == longitude_series(data, m)[i]
        name = f"W_{''.join(map(str, seq))},{i}"
        if got != values or not agree:
            print(f"  ✗ {name}: {got}, pipelines agree={agree}")
            ok = False
        else:
            print(f"  ✓ {name}: " + ", ".join(f"mu({''.join(map(str, s))})={x}" for s, x in got.items()))
    return ok


def check_isotopy(seed: int) -> bool:
    """A scrambled generator keeps its table"""
    print("\n[4/5] Checking welded isotopy...")
    from arrows import generator
    from diagram import scramble
    from evaluator import invariant_table

    code = generator(3, (2, 3), 1)
    moved = scramble(code, 20, seed)
    if invariant_table(moved, 3).values != invariant_table(code, 3).values:
        print(f"  ✗ Table changed after scramble (seed={seed})")
        return False
    print(f"  ✓ {code.crossing_count()} -> {moved.crossing_count()} crossings, table unchanged (seed={seed})")
    return True


def check_counting() -> bool:
    """Closed-form class counts"""
    print("\n[5/5] Checking class counts...")
    from classify import count_sm, count_wm, order_Vn_group

    got = (count_sm(3), count_wm(3), order_Vn_group(3, 2))
    if got != (4, 9, 512):
        print(f"  ✗ s_3, w_3, order(3, 2) = {got}, expected (4, 9, 512)")
        return False
    print("  ✓ s_3=4 w_3=9 order(3, 2)=512")
    return True


def main(config_path: str = "config.yaml") -> int:
    """Run all verification checks"""
    print("="*60)
    print("welded-milnor Setup Verification")
    print("="*60)
    print()

    from main import DEFAULT_CONFIG

    results = {
        'Environment': check_environment(),
        'Configuration': check_config(config_path),
        'Generator calibration': check_calibration(),
        'Welded isotopy': check_isotopy(DEFAULT_CONFIG['verification']['seed']),
        'Class counts': check_counting(),
    }

    print("\n" + "="*60)
    print("Summary")
    print("="*60)

    for check, status in results.items():
        symbol = "✓" if status else "✗"
        print(f"{symbol} {check}")

    print("\n" + "="*60)

    if all(results.values()):
        print("✓ All checks passed! Ready to run.")
        print("\nTry:")
        print("  python main.py verify --suite counting")
        return 0
    print("✗ Setup incomplete. Please fix the errors above.")
    return 1


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:2]))
