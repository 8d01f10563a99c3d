import functools

import numpy as np
import pytest

from geomseq.gf import ExtFieldContext
from geomseq.seqgen import NtuParams, generalized_ntu, m_sequence


@functools.lru_cache(maxsize=None)
def field(p, m, poly=None):
    return ExtFieldContext(p, m, poly)


@functools.lru_cache(maxsize=None)
def mseq(p, m, poly=None):
    out = m_sequence(field(p, m, poly))
    out.setflags(write=False)
    return out


def ntu(p, m, A, ell=2, poly=None):
    ctx = field(p, m, poly)
    return generalized_ntu(NtuParams.from_context(ctx, ell, A), ctx, mseq=mseq(p, m, poly))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS, key=lambda k: (len(k), k)):
        terminalreporter.write_line(module.RESULTS[key])
