"""
Verification suite base class
A suite runs seeded trials and keeps a history of PASS/FAIL records
"""

import sys
from typing import Dict, List, Optional

from evaluator.milnor import MilnorEvaluator

DEFAULT_SETTINGS = {
    'seed': 2024,
    'trials': 50,
    'max_strands': 4,
    'max_crossings': 12,
    'scramble_steps': 30,
    'max_len': 4,
    'moduli': [2, 3],
    'primes': [2, 3],
}


class VerificationSuite:
    """Base class: subclasses implement run_trial() or override cases()"""

    name = "base"

    def __init__(
        self,
        evaluator: Optional[MilnorEvaluator] = None,
        settings: Optional[Dict] = None,
        verbose: bool = False,
    ):
        """
        Initialize a suite

        Args:
            evaluator: Shared Milnor evaluator
            settings: Verification settings (config.yaml `verification` section)
            verbose: Print a one-line summary to stderr after run()
        """
        self.evaluator = evaluator or MilnorEvaluator()
        self.settings = dict(DEFAULT_SETTINGS)
        self.settings.update(settings or {})
        self.verbose = verbose

    @property
    def seed(self) -> int:
        return int(self.settings['seed'])

    @property
    def trials(self) -> int:
        return int(self.settings['trials'])

    def cases(self) -> List[int]:
        """Trial indices; fixed-case suites override this"""
        return list(range(1, self.trials + 1))

    def run_trial(self, case) -> Dict:
        """
        Run one trial

        Returns:
            Record with 'params' (str), 'passed' (bool) and 'detail' (str)
        """
        raise NotImplementedError

    def run(self) -> List[Dict]:
        """
        Run every trial

        Returns:
            History of trial records in case order
        """
        history = []
        for case in self.cases():
            record = self.run_trial(case)
            history.append(record)
            # tables of one trial are not reused by the next
            self.evaluator.clear_cache()
        if self.verbose:
            passed = sum(1 for r in history if r['passed'])
            print(f"✓ {self.name}: {passed}/{len(history)} trials passed", file=sys.stderr)
        return history

    @staticmethod
    def format_record(record: Dict) -> str:
        status = "PASS" if record['passed'] else "FAIL"
        detail = f" {record['detail']}" if record.get('detail') else ""
        return f"{record['params']} {status}{detail}"


def all_passed(history: List[Dict]) -> bool:
    return all(record['passed'] for record in history)
