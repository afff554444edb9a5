import sys
from pathlib import Path

from hypothesis import strategies as st

from acmkit.complexes import SimplicialComplex
from acmkit.homology import FieldSpec

sys.path.insert(0, str(Path(__file__).parent))

SMALL_FIELDS = [FieldSpec.rational(), FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5)]

fields = st.sampled_from(SMALL_FIELDS)


@st.composite
def complexes(draw, min_n=1, max_n=5, allow_void=True):
    n = draw(st.integers(min_n, max_n))
    lo = 0 if allow_void else 1
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=lo, max_size=7))
    if not allow_void and not masks:
        masks = [0]
    return SimplicialComplex.from_masks(masks, n)


@st.composite
def nonvoid_complexes(draw, min_n=1, max_n=5):
    return draw(complexes(min_n=min_n, max_n=max_n, allow_void=False))
