import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomseq._validation import ParameterError
from geomseq.seqgen import SymbolSequence, from_bytes, from_text, to_bytes, to_text

from conftest import ntu


def test_text_header_and_body():
    T = ntu(3, 2, 1, poly=(2, 2, 1))
    text = to_text(T)
    assert text == "p=3 m=2 ell=2 A=1 e=- poly=2,2,1 seq=T period=8\n01011000\n"
    back = from_text(text)
    assert back == T and back.params["poly"] == (2, 2, 1) and back.params["e"] is None


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 11, 13]), st.integers(1, 100), st.integers(0, 2**32))
def test_text_roundtrip(ell, N, seed):
    seq = SymbolSequence.from_symbols(np.random.default_rng(seed).integers(0, ell, N), ell)
    assert from_text(to_text(seq)) == seq


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 200), st.integers(0, 2**32))
def test_binary_roundtrip(N, seed):
    seq = SymbolSequence.from_symbols(np.random.default_rng(seed).integers(0, 2, N), 2)
    data = to_bytes(seq)
    assert len(data) == (N + 7) // 8
    assert from_bytes(data, N) == seq


def test_binary_bit_order():
    seq = SymbolSequence.from_symbols([1, 0, 0, 0, 0, 0, 0, 0, 1], 2)
    assert to_bytes(seq) == b"\x01\x01"


@pytest.mark.parametrize("text", [
    "p=3 ell=2 period=3\n0101\n",
    "p=3 period=3\n010\n",
    "only one line\n",
    "ell=2 period=2\n02\n",
])
def test_text_rejects_malformed(text):
    with pytest.raises(ParameterError):
        from_text(text)


def test_binary_rejects_bad_input():
    with pytest.raises(ParameterError):
        to_bytes(SymbolSequence.from_symbols([0, 1, 2], 3))
    with pytest.raises(ParameterError):
        from_bytes(b"\x00\x00", 3)
    with pytest.raises(ParameterError):
        from_bytes(b"\x08", 3)  # bit 3 set beyond the period
