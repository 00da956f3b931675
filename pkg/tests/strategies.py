"""Hypothesis strategies for formulas and free trees."""
from hypothesis import strategies as st

from malleq.bdt import Leaf, Node
from malleq.core import Atom, Imp, Plus

atoms = st.sampled_from(["a", "b", "c", "a1", "bB_2"]).map(Atom)


@st.composite
def formulas(draw, max_depth=4):
    counter = iter(range(10_000))

    def go(depth):
        kind = draw(st.integers(0, 2)) if depth else 0
        if kind == 0:
            return draw(atoms)
        left, right = go(depth - 1), go(depth - 1)
        if kind == 1:
            return Imp(left, right)
        return Plus(f"l{next(counter)}", left, right)

    return go(max_depth)


@st.composite
def free_bdts(draw, names=("x", "y", "z", "t"), max_depth=4):
    def go(avail, depth):
        if depth == 0 or not avail or draw(st.booleans()):
            return Leaf(draw(st.integers(0, 1)))
        var = draw(st.sampled_from(sorted(avail)))
        rest = avail - {var}
        return Node(var, go(rest, depth - 1), go(rest, depth - 1))

    return go(frozenset(names), max_depth)
