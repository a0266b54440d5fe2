"""
Local-move suites: V^n-move, 2n-move and prime V^p-move congruences
"""

from typing import Dict, List, Tuple

from evaluator.milnor import invariant_table
from evaluator.report import describe_differences, find_differences
from moves.local_moves import Direction, apply_Vn, insert_2n, vn_sites
from suites.base import VerificationSuite
from suites.random_codes import random_code, random_sign, random_two_strand_site, trial_rng


class PerModulusSuite(VerificationSuite):
    """Runs `trials` cases for every modulus listed under settings[modulus_key]"""

    modulus_key = "moduli"

    def cases(self) -> List[Tuple[int, int]]:
        return [(int(n), t) for n in self.settings[self.modulus_key] for t in range(1, self.trials + 1)]


class VnSuite(PerModulusSuite):
    """One V^n-move keeps every non-repeated invariant mod n"""

    name = "vn"

    def run_trial(self, case: Tuple[int, int]) -> Dict:
        s = self.settings
        n, trial = case
        rng = trial_rng(self.seed, n, trial)
        m = int(rng.integers(2, s['max_strands'] + 1))
        code = random_code(rng, m, s['max_crossings'])
        sites = vn_sites(code, n)
        if sites and rng.integers(0, 2):
            site = sites[int(rng.integers(0, len(sites)))]
            direction = Direction.VIRTUALIZE
            moved = apply_Vn(code, n, direction, site)
        else:
            site = random_two_strand_site(rng, code)
            direction = Direction.CLASSICALIZE
            moved = apply_Vn(code, n, direction, site, sign=random_sign(rng))
        L = min(s['max_len'], m)
        before = invariant_table(code, L, True)
        after = invariant_table(moved, L, True)
        params = f"trial={trial} seed={self.seed} m={m} n={n} {direction.value} strands={site.strand_a},{site.strand_b}"
        return {
            'params': params,
            'passed': not find_differences(before, after, modulus=n),
            'detail': describe_differences(before, after, modulus=n),
        }


class TwoNSuite(PerModulusSuite):
    """One 2n-move keeps non-repeated invariants mod n and mu(ij) - mu(ji) exactly"""

    name = "2n"

    def run_trial(self, case: Tuple[int, int]) -> Dict:
        s = self.settings
        n, trial = case
        rng = trial_rng(self.seed, n, trial)
        m = int(rng.integers(2, s['max_strands'] + 1))
        sign = random_sign(rng)
        code = random_code(rng, m, s['max_crossings'])
        site = random_two_strand_site(rng, code)
        moved = insert_2n(code, site, n, sign)
        L = min(s['max_len'], m)
        before = invariant_table(code, L, True)
        after = invariant_table(moved, L, True)
        failures = []
        if find_differences(before, after, modulus=n):
            failures.append(describe_differences(before, after, modulus=n))
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                if before.vlk_difference(i, j) != after.vlk_difference(i, j):
                    failures.append(f"mu({i}{j})-mu({j}{i}) changed")
        a, b = site.strand_a, site.strand_b
        for pair in ((a, b), (b, a)):
            if after[pair] - before[pair] != sign * n:
                failures.append(f"mu({pair[0]}{pair[1]}) moved by {after[pair] - before[pair]}, expected {sign * n}")
        params = f"trial={trial} seed={self.seed} m={m} n={n} sign={sign:+d} strands={site.strand_a},{site.strand_b}"
        return {'params': params, 'passed': not failures, 'detail': "; ".join(failures)}


class PrimeSuite(PerModulusSuite):
    """For prime p, one V^p-move keeps every invariant of length <= p mod p"""

    name = "prime-p"
    modulus_key = "primes"

    def run_trial(self, case: Tuple[int, int]) -> Dict:
        s = self.settings
        p, trial = case
        rng = trial_rng(self.seed, p, trial)
        m = int(rng.integers(2, s['max_strands'] + 1))
        code = random_code(rng, m, s['max_crossings'])
        site = random_two_strand_site(rng, code)
        moved = apply_Vn(code, p, Direction.CLASSICALIZE, site, sign=random_sign(rng))
        L = max(p, 2)
        before = invariant_table(code, L)
        after = invariant_table(moved, L)
        params = f"trial={trial} seed={self.seed} m={m} p={p} strands={site.strand_a},{site.strand_b}"
        return {
            'params': params,
            'passed': not find_differences(before, after, modulus=p),
            'detail': describe_differences(before, after, modulus=p),
        }
