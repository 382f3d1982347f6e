from pathlib import Path

import pytest
from hypothesis import strategies as st

from pancyclic.digraph import Digraph


@st.composite
def digraphs(draw, min_p=1, max_p=7):
    p = draw(st.integers(min_p, max_p))
    rows = [draw(st.integers(0, (1 << p) - 1)) & ~(1 << u) for u in range(p)]
    return Digraph(p, tuple(rows))


VIOLATIONS_DIR = Path(__file__).resolve().parent.parent / "counterexamples"


def fail_on_violations(result, directory=VIOLATIONS_DIR, tag=""):
    """Persist any violated lemma instance, then fail loudly."""
    if result.violations:
        files = result.persist(directory, tag)
        pytest.fail(f"{result}: violations written to {[str(f) for f in files]}")
