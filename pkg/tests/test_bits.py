import pytest
from hypothesis import given, strategies as st

from bsxkit.bits import (
    PreorderDecoder,
    codeword,
    codeword_len,
    decode_postorder,
    decode_preorder,
    deframe,
    frame,
    pack_bits,
    read_bits,
    unpack_bits,
)
from bsxkit.errors import InvalidStart, MalformedCodeword, TrailingBits, TruncatedCodeword
from bsxkit.numcodec import decode, encode_text


def test_codeword_goldens():
    assert [codeword(x) for x in range(4)] == ["1", "011", "01011", "00111"]


def test_codeword_length():
    assert codeword_len(0) == 1
    assert codeword_len(8) == 7
    assert codeword_len(23) == 11
    for x in range(3000):
        assert len(codeword(x)) == codeword_len(x)


def test_length_lower_bound():
    for x in range(1, 10**6 + 1, 37):
        assert x.bit_length() - 1 <= codeword_len(x)


def test_codeword_is_encoding_without_leading_paren():
    for x in range(500):
        assert "0" + codeword(x) == encode_text(x).replace("(", "0").replace(")", "1")


def test_prefix_free_small():
    words = sorted(codeword(x) for x in range(3000))
    for a, b in zip(words, words[1:]):
        assert not b.startswith(a)


def test_preorder_examples():
    assert decode_preorder("1") == 0
    assert decode_preorder("01011") == 2
    assert decode_preorder([0, 0, 1, 1, 1]) == 3


def test_postorder_examples():
    assert decode_postorder("1") == 0
    assert decode_postorder("00111") == 3
    with pytest.raises(MalformedCodeword):
        decode_postorder("011011")
    with pytest.raises(MalformedCodeword):
        decode_postorder("")
    with pytest.raises(MalformedCodeword):
        decode_postorder("0")


def test_decoders_agree():
    for x in range(5000):
        bits = codeword(x)
        assert decode_preorder(bits) == x
        assert decode_postorder(bits) == x


@given(st.integers(min_value=0, max_value=10**200))
def test_decoders_agree_big(x):
    bits = codeword(x)
    assert decode_preorder(bits) == decode_postorder(bits) == x


def test_strict_errors():
    with pytest.raises(TruncatedCodeword):
        decode_preorder("")
    with pytest.raises(TruncatedCodeword):
        decode_preorder("0101")
    with pytest.raises(InvalidStart):
        decode_preorder("10")
    with pytest.raises(TrailingBits):
        decode_preorder("0110")


def test_lenient_completion():
    assert decode_preorder("0101", strict=False) == 2
    assert decode_preorder("", strict=False) == 0
    assert decode_preorder("0110", strict=False) == 1


def test_lenient_equals_appending_ones():
    for x in range(2000):
        bits = codeword(x)
        for cut in range(len(bits)):
            prefix = bits[:cut]
            missing = prefix.count("0") + 1 - prefix.count("1") if prefix else 1
            assert decode_preorder(prefix, strict=False) == decode_preorder(prefix + "1" * missing)


def test_streaming_decoder_knows_the_end():
    for x in range(300):
        bits = codeword(x)
        dec = PreorderDecoder()
        for i, ch in enumerate(bits):
            assert dec.feed(ch == "1") == (i == len(bits) - 1)
        assert dec.value == x and dec.consumed == len(bits)
        with pytest.raises(TrailingBits):
            dec.feed(1)


def test_frame_examples():
    assert frame(0) == "011"
    assert frame(2) == "0101011"
    assert frame(3) == "0100111"


def test_deframe_examples():
    assert deframe("111011111").messages == [0]
    assert deframe("0101011" + "0100111").messages == [2, 3]
    noisy = deframe("001111")
    assert noisy.messages == []
    assert noisy.desync_recovered == 1


def test_deframe_truncated():
    with pytest.raises(TruncatedCodeword):
        deframe("11010")
    with pytest.raises(TruncatedCodeword):
        deframe("110")


@given(st.lists(st.tuples(st.integers(0, 10**12), st.integers(0, 5)), max_size=10))
def test_deframe_recovers_stream(messages):
    stream = "".join("1" * idle + frame(x) for x, idle in messages) + "111"
    assert deframe(stream).messages == [x for x, _ in messages]
    assert deframe(stream).desync_recovered == 0


def test_packed_format():
    assert pack_bits("00111") == bytes(7) + b"\x05\x38"
    assert pack_bits("") == bytes(8)
    assert unpack_bits(pack_bits("")) == ""
    with pytest.raises(ValueError):
        unpack_bits(b"\x00")
    with pytest.raises(ValueError):
        unpack_bits(bytes(7) + b"\x05\x39")
    with pytest.raises(ValueError):
        unpack_bits(bytes(7) + b"\x05")


@given(st.text(alphabet="01", max_size=200))
def test_packed_round_trip(bits):
    assert unpack_bits(pack_bits(bits)) == bits


def test_read_bits():
    assert read_bits(" 0 1\n011 ") == "01011"
    with pytest.raises(ValueError):
        read_bits("012")


def test_codeword_decodes_as_string():
    for x in range(200):
        assert decode("(" + codeword(x).replace("0", "(").replace("1", ")")) == x
