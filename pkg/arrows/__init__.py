"""
Arrow calculus: w-trees, surgery, generator links and normal forms
"""

from .w_tree import (
    WArrow,
    TreeLeaf,
    TreeNode,
    WTree,
    expand,
    surgery,
    surgery_tree,
    s_k,
    caterpillar,
    generator,
    generator_power,
    validate_basis_index,
)
from .normal_form import (
    NormalForm,
    RELATIONS,
    basis_keys,
    all_basis_keys,
    build_product,
    normal_form,
    normal_form_sv,
    normal_form_2n_sv,
    normal_form_Vn_sv,
    format_exponents_tsv,
)

__all__ = [
    'WArrow',
    'TreeLeaf',
    'TreeNode',
    'WTree',
    'expand',
    'surgery',
    'surgery_tree',
    's_k',
    'caterpillar',
    'generator',
    'generator_power',
    'validate_basis_index',
    'NormalForm',
    'RELATIONS',
    'basis_keys',
    'all_basis_keys',
    'build_product',
    'normal_form',
    'normal_form_sv',
    'normal_form_2n_sv',
    'normal_form_Vn_sv',
    'format_exponents_tsv',
]
