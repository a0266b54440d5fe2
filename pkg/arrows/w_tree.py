"""
w-trees, the expansion move and surgery on Gauss codes
Generator links W_Ii are surgeries on 1_m along caterpillar trees T_Ii
"""

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from diagram.gauss_code import GaussCode, Passage, Role, identity, insert_blocks, stack_all
from utils.validation import validate_position

Endpoint = Tuple[int, int]


@dataclass(frozen=True)
class WArrow:
    """
    A w-arrow: surgery turns it into one classical crossing

    The tail strand passes over, the head strand under. Untwisted arrows give
    sign +1, twisted ones sign -1.
    """

    tail: Endpoint
    head: Endpoint
    twist: int = 0

    @property
    def sign(self) -> int:
        return -1 if self.twist % 2 else 1

    def inverse(self) -> "WArrow":
        return WArrow(self.tail, self.head, (self.twist + 1) % 2)


@dataclass(frozen=True)
class TreeLeaf:
    """A tail at (strand, pos); twist marks the edge leaving the tail"""

    strand: int
    pos: int
    twist: int = 0


@dataclass(frozen=True)
class TreeNode:
    """Trivalent vertex with two ingoing subtrees; twist marks the outgoing edge"""

    left: "Subtree"
    right: "Subtree"
    twist: int = 0


Subtree = Union[TreeLeaf, TreeNode]


def _degree(node: Subtree) -> int:
    if isinstance(node, TreeLeaf):
        return 1
    return _degree(node.left) + _degree(node.right)


def _with_twist(node: Subtree, twist: int) -> Subtree:
    if isinstance(node, TreeLeaf):
        return TreeLeaf(node.strand, node.pos, twist % 2)
    return TreeNode(node.left, node.right, twist % 2)


@dataclass(frozen=True)
class WTree:
    """
    A w-tree attached to a diagram

    root is the subtree feeding the terminal edge (its twist is the terminal
    twist); head is where the terminal edge meets the diagram.
    """

    root: Subtree
    head: Endpoint

    @property
    def degree(self) -> int:
        return _degree(self.root)

    def leaves(self) -> List[TreeLeaf]:
        out: List[TreeLeaf] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, TreeLeaf):
                out.append(node)
            else:
                stack.extend((node.right, node.left))
        return out

    def inverse(self) -> "WTree":
        """Same tree with one more twist on the terminal edge"""
        return WTree(_with_twist(self.root, self.root.twist + 1), self.head)


# A word of tails: (tail endpoint, twist) pairs, all sharing the tree's head

TailWord = List[Tuple[Endpoint, int]]


def _invert_word(word: TailWord) -> TailWord:
    return [(tail, (t + 1) % 2) for tail, t in reversed(word)]


def _tail_word(node: Subtree) -> TailWord:
    if isinstance(node, TreeLeaf):
        return [((node.strand, node.pos), node.twist % 2)]
    left = _tail_word(node.left)
    right = _tail_word(node.right)
    word = left + right + _invert_word(left) + _invert_word(right)
    return _invert_word(word) if node.twist % 2 else word


def expand(tree: WTree) -> List[WArrow]:
    """
    Expand a w-tree into w-arrows

    Each trivalent vertex with subtrees L and R becomes the sequence
    L R L^-1 R^-1 of parallel copies; a twisted edge inverts the copies below
    it. All heads stay at the tree's head.

    Args:
        tree: w-tree of any degree

    Returns:
        w-arrows in insertion order (degree 1: one arrow, degree 2: four)
    """
    return [WArrow(tail, tree.head, twist) for tail, twist in _tail_word(tree.root)]


def surgery(code: GaussCode, arrows: Sequence[WArrow]) -> GaussCode:
    """
    Surgery along a sequence of w-arrows

    Each arrow adds one crossing: an over-passage at its tail and an
    under-passage at its head. Endpoint positions refer to the input code;
    endpoints sharing a gap are laid out in arrow order, tail before head.

    Args:
        code: Gauss code
        arrows: w-arrows attached to code

    Returns:
        Code after surgery

    Raises:
        ValueError: if an endpoint lies outside its strand
    """
    blocks = []
    cid = code.max_id()
    for arrow in arrows:
        for strand, pos in (arrow.tail, arrow.head):
            is_valid, msg = validate_position(code, strand, pos)
            if not is_valid:
                raise ValueError(f"Arrow endpoint out of range: {msg}")
        cid += 1
        blocks.append((arrow.tail[0], arrow.tail[1], [Passage(cid, Role.OVER, arrow.sign)]))
        blocks.append((arrow.head[0], arrow.head[1], [Passage(cid, Role.UNDER, arrow.sign)]))
    return insert_blocks(code, blocks)


def surgery_tree(code: GaussCode, tree: WTree) -> GaussCode:
    return surgery(code, expand(tree))


def s_k(m: int, i: int, k: int) -> List[Tuple[int, ...]]:
    """
    S_k(i): k distinct indices from 1..m other than i, maximum last

    Returns:
        Sequences in lexicographic order
    """
    others = [v for v in range(1, m + 1) if v != i]
    found = []
    for combo in itertools.combinations(others, k):
        top = max(combo)
        rest = [v for v in combo if v != top]
        for perm in itertools.permutations(rest):
            found.append(perm + (top,))
    return sorted(found)


def validate_basis_index(m: int, seq: Sequence[int], i: int) -> Tuple[bool, str]:
    """Check that seq lies in S_k(i) for k = len(seq)"""
    seq = tuple(seq)
    if not 1 <= i <= m:
        return False, f"Head strand {i} outside 1..{m}"
    if not seq:
        return False, "Index sequence must be nonempty"
    if any(v < 1 or v > m for v in seq):
        return False, f"Entries of {seq} outside 1..{m}"
    if len(set(seq)) != len(seq) or i in seq:
        return False, f"Entries of {seq} must be distinct and differ from {i}"
    if seq[-1] != max(seq):
        return False, f"Last entry of {seq} must be its maximum"
    return True, ""


def caterpillar(seq: Sequence[int], i: int, inverse: bool = False) -> WTree:
    """
    T_Ii: the right-normed tree [j_1, [j_2, ..., [j_k-1, j_k]]] on 1_m

    Tails sit at the start of strands j_1..j_k and the head at the start of
    strand i. With inverse=True the terminal edge is twisted.
    """
    node: Subtree = TreeLeaf(seq[-1], 0)
    for j in reversed(seq[:-1]):
        node = TreeNode(TreeLeaf(j, 0), node)
    tree = WTree(node, (i, 0))
    return tree.inverse() if inverse else tree


def generator(m: int, seq: Sequence[int], i: int, inverse: bool = False) -> GaussCode:
    """
    Generator link W_Ii (or its inverse)

    Args:
        m: Strand count
        seq: I in S_k(i)
        i: Head strand
        inverse: Build W_Ii^-1 from the tree with a twisted terminal edge

    Returns:
        Gauss code of W_Ii

    Raises:
        ValueError: if seq is not in S_k(i)
    """
    is_valid, msg = validate_basis_index(m, seq, i)
    if not is_valid:
        raise ValueError(f"Invalid generator index: {msg}")
    return surgery_tree(identity(m), caterpillar(tuple(seq), i, inverse))


def generator_power(m: int, seq: Sequence[int], i: int, x: int) -> GaussCode:
    """W_Ii^x as x stacked copies (|x| inverse copies for x < 0, 1_m for 0)"""
    piece = generator(m, seq, i, inverse=x < 0)
    return stack_all(m, [piece] * abs(x))
