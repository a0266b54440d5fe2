"""
Property checks, small suite runs and CLI exit codes
Seeded with numpy generators so every failure reproduces from its seed
"""

import json

import pytest

import main
from algebra import TruncSeries, magnus_expand, series_mul
from arrows import (
    basis_keys,
    build_product,
    generator,
    generator_power,
    normal_form_2n_sv,
    normal_form_sv,
    normal_form_Vn_sv,
)
from classify import equivalent_2n_sv, equivalent_sv, equivalent_Vn_sv, fingerprint_report, vlk_differences
from diagram import braid_to_code, load_code, pure_generator, save_code, scramble, stack
from evaluator import MilnorEvaluator, invariant_table, milnor
from moves import Direction, apply_Vn, insert_2n, self_crossings, virtualize_crossing
from suites import SUITES, all_passed
from suites.random_codes import (
    random_classical_code,
    random_code,
    random_meridian_word,
    random_sign,
    random_two_strand_site,
    trial_rng,
    with_self_crossing,
)

SEEDS = range(5)

SMALL_SETTINGS = {
    'seed': 7,
    'trials': 2,
    'max_strands': 3,
    'max_crossings': 5,
    'scramble_steps': 8,
    'max_len': 3,
    'moduli': [2, 3],
    'primes': [2, 3],
}


# --- invariance --------------------------------------------------------------

@pytest.mark.parametrize("seed", SEEDS)
def test_isotopy_invariance(seed):
    rng = trial_rng(seed, 0)
    code = random_code(rng, 3, 6)
    scrambled = scramble(code, 15, seed)
    assert invariant_table(scrambled, 3).values == invariant_table(code, 3).values


@pytest.mark.parametrize("seed", SEEDS)
def test_self_virtualization_keeps_non_repeated(seed):
    rng = trial_rng(seed, 1)
    code = with_self_crossing(rng, random_code(rng, 3, 5))
    for cid in self_crossings(code):
        assert equivalent_sv(code, virtualize_crossing(code, cid))


@pytest.mark.parametrize("seed", SEEDS)
def test_local_moves_keep_congruences(seed):
    rng = trial_rng(seed, 2)
    code = random_code(rng, 3, 5)
    n = 2 + seed % 2
    site = random_two_strand_site(rng, code)

    twisted = insert_2n(code, site, n, random_sign(rng))
    assert equivalent_2n_sv(code, twisted, n)
    assert vlk_differences(code) == vlk_differences(twisted)

    classical = apply_Vn(code, n, Direction.CLASSICALIZE, site, sign=random_sign(rng))
    assert equivalent_Vn_sv(code, classical, n)


@pytest.mark.parametrize("seed", SEEDS)
def test_classical_links_have_symmetric_linking(seed):
    code = random_classical_code(trial_rng(seed, 3), 3, 3)
    assert not any(vlk_differences(code).values())


@pytest.mark.parametrize("seed", SEEDS)
def test_framing_shift_leaves_non_repeated_invariants(seed):
    code = random_code(trial_rng(seed, 4), 3, 6)
    for seq in [(1, 2), (3, 1), (2, 3, 1), (1, 3, 2)]:
        assert milnor(code, seq, framing_shift=seed + 1) == milnor(code, seq)


@pytest.mark.parametrize("seed", SEEDS)
def test_magnus_is_a_homomorphism(seed):
    rng = trial_rng(seed, 5)
    u = random_meridian_word(rng, 3, 6)
    v = random_meridian_word(rng, 3, 6)
    assert magnus_expand(u * v, 3, 4) == series_mul(magnus_expand(u, 3, 4), magnus_expand(v, 3, 4))
    assert series_mul(magnus_expand(u, 3, 4), magnus_expand(~u, 3, 4)) == TruncSeries.one(3, 4)


# --- normal forms ------------------------------------------------------------

@pytest.mark.parametrize("seed", SEEDS)
def test_normal_forms_match_their_relations(seed):
    evaluator = MilnorEvaluator()
    code = random_code(trial_rng(seed, 6), 3, 6)
    n = 2 + seed % 2

    sv = normal_form_sv(code, evaluator)
    assert equivalent_sv(code, sv.code, evaluator)

    vn = normal_form_Vn_sv(code, n, evaluator)
    assert equivalent_Vn_sv(code, vn.code, n, evaluator)
    assert all(0 <= x < n for x in vn.exponents.values())
    assert normal_form_Vn_sv(vn.code, n, evaluator).exponents == vn.exponents


@pytest.mark.parametrize("seed", range(12))
def test_2n_normal_form_stays_congruent(seed):
    evaluator = MilnorEvaluator()
    code = random_code(trial_rng(seed, 7), 3, 8)
    n = 2 + seed % 2
    two_n = normal_form_2n_sv(code, n, evaluator)
    assert equivalent_2n_sv(code, two_n.code, n, evaluator)
    assert vlk_differences(code, evaluator) == vlk_differences(two_n.code, evaluator)
    assert all(0 <= x < n for (k, _, _), x in two_n.exponents.items() if k >= 2)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2)])
@pytest.mark.parametrize("seed", SEEDS)
def test_Vn_normal_form_recovers_perturbed_representative(m, n, seed):
    evaluator = MilnorEvaluator()
    rng = trial_rng(seed, 8)
    rep = normal_form_Vn_sv(random_code(rng, m, 6), n, evaluator)

    moved = apply_Vn(rep.code, n, Direction.CLASSICALIZE, random_two_strand_site(rng, rep.code),
                     sign=random_sign(rng))
    moved = scramble(with_self_crossing(rng, moved), 10, seed)

    assert equivalent_Vn_sv(rep.code, moved, n, evaluator)
    assert normal_form_Vn_sv(moved, n, evaluator).exponents == rep.exponents


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("seed", SEEDS)
def test_classical_pairs_agree_on_2n_and_Vn(n, seed):
    evaluator = MilnorEvaluator()
    rng = trial_rng(seed, 9)
    a = random_classical_code(rng, 3, 3)
    twisted = stack(a, braid_to_code(3, pure_generator(1, 3, n)))
    for b in (random_classical_code(rng, 3, 3), twisted):
        assert equivalent_2n_sv(a, b, n, evaluator) == equivalent_Vn_sv(a, b, n, evaluator)
    assert equivalent_2n_sv(a, twisted, n, evaluator)


def test_product_order_within_one_degree():
    factors = [(key, x) for key, x in zip(basis_keys(3, 2), (1, -2, 1))]
    forward = build_product(3, factors)
    backward = build_product(3, list(reversed(factors)))
    assert invariant_table(forward, 3, True).values == invariant_table(backward, 3, True).values


def test_stacking_adds_linking_numbers():
    a = generator_power(3, (2,), 1, 2)
    b = scramble(generator(3, (1,), 3), 5, 1)
    ab = invariant_table(stack(a, b), 2, True)
    ta, tb = invariant_table(a, 2, True), invariant_table(b, 2, True)
    for seq in ab.sequences():
        assert ab[seq] == ta[seq] + tb[seq]


def test_fingerprints_separate_classes():
    _, classes, expected = fingerprint_report(2, 3)
    assert classes == expected == 9


# --- suites ------------------------------------------------------------------

@pytest.mark.parametrize("name", [n for n in SUITES if n != "counting"])
def test_suites_pass_on_small_settings(name):
    history = SUITES[name](MilnorEvaluator(), SMALL_SETTINGS).run()
    assert history
    assert all_passed(history), [r for r in history if not r['passed']]


@pytest.mark.parametrize("name,label", [("2n", "n"), ("vn", "n"), ("prime-p", "p")])
def test_local_move_suites_run_every_modulus(name, label):
    suite = SUITES[name](settings=SMALL_SETTINGS)
    assert suite.cases() == [(2, 1), (2, 2), (3, 1), (3, 2)]
    params = [r['params'] for r in suite.run()]
    assert sum(f" {label}=2 " in p for p in params) == 2
    assert sum(f" {label}=3 " in p for p in params) == 2


def test_suite_records_are_reproducible():
    first = SUITES["isotopy"](settings=SMALL_SETTINGS).run()
    second = SUITES["isotopy"](settings=SMALL_SETTINGS).run()
    assert [r["params"] for r in first] == [r["params"] for r in second]
    assert SUITES["isotopy"].format_record(first[0]).startswith("trial=1 seed=7 m=")
    assert SUITES["isotopy"].format_record(first[0]).endswith("PASS identical")


# --- CLI ---------------------------------------------------------------------

def run_cli(tmp_path, *argv):
    return main.main(["--config", str(tmp_path / "missing.yaml"), *argv])


def write_generator(tmp_path, name, power=1):
    path = tmp_path / name
    save_code(generator_power(2, (2,), 1, power), str(path))
    return str(path)


def test_cli_gen_and_invariants(tmp_path, capsys):
    path = str(tmp_path / "w21.json")
    assert run_cli(tmp_path, "gen", "--m", "2", "--I", "2", "--i", "1", "--out", path) == 0
    assert load_code(path) == generator(2, (2,), 1)

    assert run_cli(tmp_path, "invariants", path, "--max-len", "2", "--non-repeated") == 0
    assert capsys.readouterr().out == "sequence\tvalue\n1,2\t0\n2,1\t1\n"


def test_cli_normal_form_and_equiv(tmp_path, capsys):
    cube = write_generator(tmp_path, "cube.json", 3)
    single = write_generator(tmp_path, "single.json", 1)
    exponents = str(tmp_path / "exp.tsv")

    assert run_cli(tmp_path, "normal-form", cube, "--relation", "2n-sv", "--n", "2",
                   "--exponents-out", exponents) == 0
    with open(exponents) as f:
        assert f.read() == "k\ti\tI\texponent\n1\t1\t2\t1\n1\t2\t1\t-2\n"
    capsys.readouterr()

    assert run_cli(tmp_path, "equiv", cube, single, "--relation", "vn-sv", "--n", "2") == 0
    assert capsys.readouterr().out == "relation=vn-sv equivalent=true\n"
    assert run_cli(tmp_path, "equiv", cube, single, "--relation", "2n-sv", "--n", "2") == 0
    assert capsys.readouterr().out == "relation=2n-sv equivalent=false\n"


def test_cli_scramble_keeps_invariants(tmp_path, capsys):
    source = str(tmp_path / "w.json")
    save_code(generator(3, (2, 3), 1), source)
    out = str(tmp_path / "scrambled.json")
    assert run_cli(tmp_path, "apply-move", source, "--move", "scramble", "--steps", "12",
                   "--seed", "3", "--out", out) == 0
    assert equivalent_sv(load_code(source), load_code(out))


def test_cli_count(tmp_path, capsys):
    assert run_cli(tmp_path, "count", "--m", "2", "--n", "2", "--enumerate") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m=2 s_m=1 w_m=2 order=4 n=2"
    assert lines[-1] == "classes=4 expected=4"
    assert run_cli(tmp_path, "count", "--m", "4", "--n", "2", "--enumerate", "--budget", "100") == 1


def test_cli_verify_with_config(tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text("verification:\n  max_strands: 3\n")
    assert main.main(["--config", str(config), "verify", "--suite", "calibration"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(" PASS" in line for line in lines)
    assert all(not line.startswith("m=4") for line in lines)


def test_cli_exit_codes(tmp_path, capsys):
    garbage = tmp_path / "bad.json"
    garbage.write_text("{not json")
    assert run_cli(tmp_path, "invariants", str(garbage)) == 2

    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"m": 2, "strands": [
        [{"id": 1, "role": "o", "sign": 1}], [{"id": 1, "role": "o", "sign": 1}],
    ]}))
    assert run_cli(tmp_path, "invariants", str(invalid)) == 2
    assert run_cli(tmp_path, "invariants", str(tmp_path / "absent.json")) == 2

    assert run_cli(tmp_path, "verify", "--suite", "no-such-suite") == 1
    single = write_generator(tmp_path, "w.json")
    assert run_cli(tmp_path, "normal-form", single, "--relation", "vn-sv") == 1
    assert run_cli(tmp_path, "invariants", single, "--max-len", "0") == 1
    assert run_cli(tmp_path, "count", "--m", "2", "--n", "2", "--enumerate", "--budget", "0") == 1
    assert run_cli(tmp_path, "gen", "--m", "3", "--I", "3,2", "--i", "1") == 1

    broken = tmp_path / "broken.yaml"
    broken.write_text("verification: [\n")
    assert main.main(["--config", str(broken), "count", "--m", "2"]) == 1

    with pytest.raises(SystemExit) as exit_info:
        run_cli(tmp_path, "invariants", single, "--no-such-flag")
    assert exit_info.value.code == 1


def test_setup_checker(tmp_path, capsys):
    import verify_setup

    assert verify_setup.main(str(tmp_path / "missing.yaml")) == 0
    assert "✓ All checks passed!" in capsys.readouterr().out

    config = main.load_config(str(tmp_path / "missing.yaml"))
    config['verification']['primes'] = [2, 4]
    config['verification']['max_strands'] = 1
    problems = verify_setup.config_problems(config)
    assert len(problems) == 2 and "4 in verification.primes is not prime" in problems
