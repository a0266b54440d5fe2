"""
Classification suites: counting, normal forms, generator calibration and
the (2n+sv) => (V^n+sv) implication
"""

import itertools
from typing import Dict, List, Tuple

from arrows.normal_form import normal_form_2n_sv, normal_form_sv, normal_form_Vn_sv
from arrows.w_tree import generator, s_k
from classify.counting import count_basis_sequences, count_wm, fingerprint_report
from classify.equivalence import equivalent_2n_sv, equivalent_Vn_sv, vlk_differences
from diagram.gauss_code import stack
from diagram.reidemeister import scramble
from evaluator.milnor import invariant_table, iter_sequences, longitude, longitude_series
from evaluator.report import describe_differences, find_differences
from evaluator.wirtinger import wirtinger
from algebra.magnus import magnus_expand
from moves.local_moves import insert_2n
from suites.base import VerificationSuite
from suites.random_codes import random_code, random_sign, random_two_strand_site, trial_rng

COUNTING_CASES: List[Tuple[int, int]] = [(2, 2), (2, 3), (3, 2)]


class CountingSuite(VerificationSuite):
    """Representatives of the (V^n+sv) classes have n^w_m distinct fingerprints"""

    name = "counting"

    def cases(self) -> List[Tuple[int, int]]:
        return list(COUNTING_CASES)

    def run_trial(self, case: Tuple[int, int]) -> Dict:
        m, n = case
        _, classes, expected = fingerprint_report(m, n, evaluator=self.evaluator)
        passed = classes == expected and count_basis_sequences(m) == count_wm(m)
        return {'params': f"m={m} n={n} classes={classes} expected={expected}", 'passed': passed, 'detail': ""}


class NormalFormSuite(VerificationSuite):
    """Normal forms keep the invariants their relation promises"""

    name = "normal-form"

    def run_trial(self, case: int) -> Dict:
        s = self.settings
        rng = trial_rng(self.seed, case)
        m = int(rng.integers(2, min(s['max_strands'], 3) + 1))
        n = int(s['moduli'][int(rng.integers(0, len(s['moduli'])))])
        code = random_code(rng, m, min(s['max_crossings'], 8))
        ev = self.evaluator
        failures = []

        original = ev.non_repeated(code)
        sv = normal_form_sv(code, ev)
        if find_differences(original, ev.non_repeated(sv.code)):
            failures.append("sv: " + describe_differences(original, ev.non_repeated(sv.code)))

        vn = normal_form_Vn_sv(code, n, ev)
        if find_differences(original, ev.non_repeated(vn.code), modulus=n):
            failures.append("vn-sv: invariants not congruent")
        if normal_form_Vn_sv(vn.code, n, ev).exponents != vn.exponents:
            failures.append("vn-sv: representative not a fixpoint")

        two_n = normal_form_2n_sv(code, n, ev)
        if find_differences(original, ev.non_repeated(two_n.code), modulus=n):
            failures.append("2n-sv: invariants not congruent")
        if vlk_differences(code, ev) != vlk_differences(two_n.code, ev):
            failures.append("2n-sv: mu(ij)-mu(ji) changed")

        params = f"trial={case} seed={self.seed} m={m} n={n} crossings={code.crossing_count()}"
        return {'params': params, 'passed': not failures, 'detail': "; ".join(failures)}


def _calibration_cases(max_strands: int) -> List[Tuple[int, Tuple[int, ...], int]]:
    cases = []
    for m in range(2, max_strands + 1):
        for k in range(1, min(3, m - 1) + 1):
            for i in range(1, m + 1):
                for seq in s_k(m, i, k):
                    cases.append((m, seq, i))
    return cases


class CalibrationSuite(VerificationSuite):
    """
    mu(Ii) of W_Ii is +1 (-1 for the inverse), the dual-basis property holds
    over S_k(i), all other non-repeated invariants of length <= k+1 vanish,
    W_Ii * W_Ii^-1 is trivial, and word and series longitudes agree
    """

    name = "calibration"

    def cases(self):
        return _calibration_cases(int(self.settings['max_strands']))

    def run_trial(self, case) -> Dict:
        m, seq, i = case
        k = len(seq)
        w = generator(m, seq, i)
        w_inv = generator(m, seq, i, inverse=True)
        table = invariant_table(w, k + 1, True)
        failures = []
        if table[seq + (i,)] != 1:
            failures.append(f"mu(Ii)={table[seq + (i,)]}")
        inv_table = invariant_table(w_inv, k + 1, True)
        if inv_table[seq + (i,)] != -1:
            failures.append(f"inverse mu(Ii)={inv_table[seq + (i,)]}")
        for other in s_k(m, i, k):
            expected = 1 if other == seq else 0
            if table[other + (i,)] != expected:
                failures.append(f"dual basis at {other}")
        perms = {p + (i,) for p in itertools.permutations(seq)}
        for J in iter_sequences(m, k + 1, True):
            if J not in perms and table[J] != 0:
                failures.append(f"mu({','.join(map(str, J))})={table[J]}")
        if any(invariant_table(stack(w, w_inv), k + 1, True).values.values()):
            failures.append("W * W^-1 not trivial")
        data = wirtinger(w)
        series = longitude_series(data, k + 1)
        if magnus_expand(longitude(data, i, k + 1), m, k) != series[i]:
            failures.append("word/series longitude mismatch")
        params = f"m={m} I={','.join(map(str, seq))} i={i}"
        return {'params': params, 'passed': not failures, 'detail': "; ".join(failures[:3])}


class ImplicationSuite(VerificationSuite):
    """(2n+sv)-equivalent pairs are (V^n+sv)-equivalent"""

    name = "implication"

    def run_trial(self, case: int) -> Dict:
        s = self.settings
        rng = trial_rng(self.seed, case)
        m = int(rng.integers(2, s['max_strands'] + 1))
        n = int(s['moduli'][int(rng.integers(0, len(s['moduli'])))])
        a = random_code(rng, m, s['max_crossings'])
        if rng.integers(0, 2):
            b = insert_2n(a, random_two_strand_site(rng, a), n, random_sign(rng))
            b = scramble(b, int(s['scramble_steps']) // 3, int(rng.integers(0, 2**31)))
            kind = "2n-move"
        else:
            b = random_code(rng, m, s['max_crossings'])
            kind = "random"
        premise = equivalent_2n_sv(a, b, n, self.evaluator)
        conclusion = equivalent_Vn_sv(a, b, n, self.evaluator)
        passed = conclusion if premise else True
        if kind == "2n-move":
            passed = passed and premise
        params = f"trial={case} seed={self.seed} m={m} n={n} pair={kind} 2n-sv={premise} vn-sv={conclusion}"
        return {'params': params, 'passed': passed, 'detail': ""}
