"""
Invariance suites: welded isotopy, self-crossing virtualization, Magnus checks
"""

from typing import Dict

from algebra.magnus import TruncSeries, coefficient, magnus_expand, series_mul
from diagram.reidemeister import scramble
from evaluator.milnor import invariant_table, longitude, longitude_series
from evaluator.report import describe_differences, find_differences
from evaluator.wirtinger import wirtinger
from moves.local_moves import self_crossings, virtualize_crossing
from suites.base import VerificationSuite
from suites.random_codes import (
    random_code,
    random_meridian_word,
    trial_rng,
    with_self_crossing,
)


class IsotopySuite(VerificationSuite):
    """Every invariant (repeated sequences included) survives random welded rewrites"""

    name = "isotopy"

    def run_trial(self, case: int) -> Dict:
        s = self.settings
        rng = trial_rng(self.seed, case)
        m = int(rng.integers(1, s['max_strands'] + 1))
        code = random_code(rng, m, s['max_crossings'])
        scramble_seed = int(rng.integers(0, 2**31))
        scrambled = scramble(code, s['scramble_steps'], scramble_seed)
        L = s['max_len']
        before = invariant_table(code, L)
        after = invariant_table(scrambled, L)
        params = (f"trial={case} seed={self.seed} m={m} crossings={code.crossing_count()} "
                  f"steps={s['scramble_steps']} L={L}")
        return {
            'params': params,
            'passed': not find_differences(before, after),
            'detail': describe_differences(before, after),
        }


class SelfVirtualizationSuite(VerificationSuite):
    """Virtualizing a self-crossing keeps every non-repeated invariant"""

    name = "sv"

    def run_trial(self, case: int) -> Dict:
        s = self.settings
        rng = trial_rng(self.seed, case)
        m = int(rng.integers(2, s['max_strands'] + 1))
        code = random_code(rng, m, s['max_crossings'])
        candidates = self_crossings(code)
        if not candidates:
            code = with_self_crossing(rng, code)
            candidates = self_crossings(code)
        cid = candidates[int(rng.integers(0, len(candidates)))]
        before = self.evaluator.non_repeated(code)
        after = self.evaluator.non_repeated(virtualize_crossing(code, cid))
        params = f"trial={case} seed={self.seed} m={m} crossing={cid}"
        return {
            'params': params,
            'passed': not find_differences(before, after),
            'detail': describe_differences(before, after),
        }


class MagnusSuite(VerificationSuite):
    """
    Magnus expansion checks on random words, plus agreement of the word and
    series pipelines for longitudes of random diagrams
    """

    name = "magnus"

    def run_trial(self, case: int) -> Dict:
        s = self.settings
        rng = trial_rng(self.seed, case)
        m = int(rng.integers(1, s['max_strands'] + 1))
        q = int(rng.integers(1, 5))
        u = random_meridian_word(rng, m, int(rng.integers(0, 13)))
        v = random_meridian_word(rng, m, int(rng.integers(0, 13)))
        eu, ev = magnus_expand(u, m, q), magnus_expand(v, m, q)
        failures = []
        if magnus_expand(u * v, m, q) != series_mul(eu, ev):
            failures.append("homomorphism")
        if series_mul(eu, magnus_expand(~u, m, q)) != TruncSeries.one(m, q):
            failures.append("inverse")
        if coefficient(eu, ()) != 1:
            failures.append("constant term")
        for i in range(1, m + 1):
            if coefficient(eu, (i,)) != sum(e for g, e in u.letters if g.index[0] == i):
                failures.append(f"degree-1 X{i}")

        code = random_code(rng, m, min(s['max_crossings'], 8))
        data = wirtinger(code)
        depth = min(q + 1, 4)
        series = longitude_series(data, depth)
        for i in range(1, m + 1):
            if magnus_expand(longitude(data, i, depth), m, depth - 1) != series[i]:
                failures.append(f"longitude {i}")

        params = f"trial={case} seed={self.seed} m={m} q={q} |u|={len(u)} |v|={len(v)}"
        return {'params': params, 'passed': not failures, 'detail': ", ".join(failures)}
