"""
Report text for invariant tables
TSV output and concise comparisons between two tables
"""

from typing import List, Optional, Sequence

from evaluator.milnor import InvariantTable


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)


def format_table_tsv(table: InvariantTable, modulus: Optional[int] = None) -> str:
    """
    Invariant table as TSV

    Args:
        table: Invariant table
        modulus: Reduce values into [0, modulus) when given

    Returns:
        Header `sequence<TAB>value` followed by one row per sequence, ordered
        by length then lexicographic; ends with a newline
    """
    if modulus is not None:
        table = table.reduced_mod(modulus)
    lines = ["sequence\tvalue"]
    for seq in table.sequences():
        lines.append(f"{format_sequence(seq)}\t{table[seq]}")
    return "\n".join(lines) + "\n"


def find_differences(
    a: InvariantTable,
    b: InvariantTable,
    modulus: Optional[int] = None,
) -> List[tuple]:
    """
    Sequences on which two tables disagree

    Args:
        a: First table
        b: Second table, same sequences
        modulus: Compare values mod n when given

    Returns:
        List of (sequence, value_a, value_b) tuples in table order
    """
    diffs = []
    for seq in a.sequences():
        va, vb = a[seq], b.values.get(seq, 0)
        if modulus is None:
            same = va == vb
        else:
            same = (va - vb) % modulus == 0
        if not same:
            diffs.append((seq, va, vb))
    return diffs


def describe_differences(
    a: InvariantTable,
    b: InvariantTable,
    modulus: Optional[int] = None,
    limit: int = 3,
) -> str:
    """
    One-line summary of table differences for PASS/FAIL reports

    Returns:
        "identical" (or "congruent mod n"), or the first few differing entries
    """
    diffs = find_differences(a, b, modulus)
    if not diffs:
        return "identical" if modulus is None else f"congruent mod {modulus}"
    shown = [f"mu({format_sequence(s)}): {va} vs {vb}" for s, va, vb in diffs[:limit]]
    more = f" (+{len(diffs) - limit} more)" if len(diffs) > limit else ""
    return "; ".join(shown) + more
