import numpy as np
import pytest
from hypothesis import settings, strategies as st

from apartness import ApartnessSemigroup, ApartnessSet, Carrier, Rel
from apartness.oracle import enumerate as en
from apartness.oracle import predicates as pr
from apartness.structfile import load_fixture

settings.register_profile("default", max_examples=120, deadline=None)
settings.load_profile("default")


def as_mat(rel) -> tuple:
    """Oracle-side tuple-of-tuples view of a Rel or bool array."""
    m = rel.matrix if isinstance(rel, Rel) else np.asarray(rel)
    return tuple(tuple(bool(v) for v in row) for row in m)


def to_rel(carrier: Carrier, mat) -> Rel:
    return Rel(carrier, np.array(mat, dtype=bool).reshape(carrier.n, carrier.n))


@st.composite
def partitions(draw, n):
    """Block label per element, normalised to first-occurrence order."""
    raw = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    seen = {}
    return [seen.setdefault(b, len(seen)) for b in raw]


@st.composite
def apartness_sets(draw, min_size=1, max_size=4):
    """Diagonal equality; an apartness over it is the complement of an equivalence."""
    n = draw(st.integers(min_size, max_size))
    lab = draw(partitions(n))
    c = Carrier.of_size(n)
    blocks = [[i for i in range(n) if lab[i] == b] for b in range(max(lab) + 1)]
    return ApartnessSet.from_partition(c, blocks)


def relations(n):
    return st.lists(st.booleans(), min_size=n * n, max_size=n * n).map(
        lambda bits: tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n)))


@st.composite
def set_with_relation(draw, max_size=4):
    A = draw(apartness_sets(max_size=max_size))
    return A, to_rel(A.carrier, draw(relations(A.n)))


@st.composite
def set_with_coquasiorder(draw, max_size=4):
    """tau = complement of the transitive closure of (random relation + non-apart pairs)."""
    A = draw(apartness_sets(max_size=max_size))
    seed = draw(relations(A.n))
    rho = en.transitive_closure(pr.union(seed, pr.neg(as_mat(A.ap))))
    return A, to_rel(A.carrier, pr.neg(rho))


@st.composite
def set_with_quasiorder(draw, max_size=4):
    A = draw(apartness_sets(max_size=max_size))
    seed = draw(relations(A.n))
    return A, to_rel(A.carrier, en.transitive_closure(pr.union(seed, pr.diag(A.n))))


def _small_semigroups():
    out = []
    for n in (1, 2, 3):
        for E, P in [(pr.diag(n), P) for P in en.apartness_relations(n)]:
            for M in en.semigroups(n, E, P):
                out.append((n, P, M))
    return out


SMALL_SEMIGROUPS = _small_semigroups()


def build_semigroup(n, P, M) -> ApartnessSemigroup:
    c = Carrier.of_size(n)
    A = ApartnessSet(c, Rel.diagonal(c), to_rel(c, P))
    return ApartnessSemigroup(A, M)


semigroups = st.sampled_from(SMALL_SEMIGROUPS).map(lambda t: build_semigroup(*t))


@pytest.fixture(scope="session")
def ex():
    """Loaded fixtures by short name: ex['example2']."""
    return {f"example{i}": load_fixture(f"example{i}") for i in range(1, 7)}


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """record(criterion, passed, detail): one summary line per acceptance criterion."""
    def _record(criterion: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip())
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
