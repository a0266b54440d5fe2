"""
Example usage of the welded Milnor invariant library
Demonstrates the main operations programmatically
"""

from arrows import generator, generator_power, normal_form_sv, normal_form_Vn_sv, format_exponents_tsv
from classify import count_wm, equivalent_2n_sv, equivalent_Vn_sv, order_Vn_group
from diagram import MoveSite, braid_to_code, scramble, stack
from evaluator import MilnorEvaluator, format_table_tsv
from moves import insert_2n


def invariants_example(evaluator: MilnorEvaluator):
    """
    Invariants of the generator links and of a classical full twist
    """
    print("="*60)
    print("Invariants Example")
    print("="*60)

    w21 = generator(2, (2,), 1)
    print("\nW_21 (one crossing, strand 2 over strand 1):")
    print(format_table_tsv(evaluator.table(w21, 2, True)))

    twist = braid_to_code(2, [1, 1])
    print("Full twist (classical, linking number 1):")
    print(format_table_tsv(evaluator.table(twist, 2, True)))

    w231 = generator(3, (2, 3), 1)
    print("W_{23,1} (degree-2 generator):")
    print(format_table_tsv(evaluator.table(w231, 3, True)))

    scrambled = scramble(w231, 30, seed=7)
    same = evaluator.table(scrambled, 3, True).values == evaluator.table(w231, 3, True).values
    print(f"After 30 random welded rewrites ({scrambled.crossing_count()} crossings): unchanged={same}")


def normal_form_example(evaluator: MilnorEvaluator):
    """
    Peel the sv-normal form of a product and reduce it mod 2
    """
    print("\n" + "="*60)
    print("Normal Form Example")
    print("="*60)

    sigma = stack(generator_power(3, (2,), 1, 3), generator(3, (2, 3), 1))
    nf = normal_form_sv(sigma, evaluator)
    print("\nsv exponents:")
    print(format_exponents_tsv(nf))

    vn = normal_form_Vn_sv(sigma, 2, evaluator)
    print("V^2+sv exponents:")
    print(format_exponents_tsv(vn))


def classification_example(evaluator: MilnorEvaluator):
    """
    Equivalence predicates and the counting formula
    """
    print("="*60)
    print("Classification Example")
    print("="*60)

    a = generator(2, (2,), 1)
    b = insert_2n(a, MoveSite(1, 0, 2, 0), 2, 1)
    print(f"\nW_21 vs W_21 + 2-full-twists: 2n+sv (n=2) {equivalent_2n_sv(a, b, 2, evaluator)}, "
          f"V^2+sv {equivalent_Vn_sv(a, b, 2, evaluator)}")

    for m in (2, 3, 4):
        print(f"m={m}: w_m={count_wm(m)}, order of the V^2+sv group = {order_Vn_group(m, 2)}")


if __name__ == "__main__":
    evaluator = MilnorEvaluator(verbose=True)
    invariants_example(evaluator)
    normal_form_example(evaluator)
    classification_example(evaluator)
    print(f"\nCache size: {evaluator.get_cache_size()} tables")
