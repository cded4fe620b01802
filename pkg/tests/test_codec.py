import pytest
from hypothesis import given, strategies as st

from ordercast import _codec_py
from ordercast import codec

try:
    from ordercast import _codec_c
    BACKENDS = [_codec_py, _codec_c]
except ImportError:
    _codec_c = None
    BACKENDS = [_codec_py]


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def impl(request):
    return request.param


def test_selected_backend_exposes_kernels():
    assert codec.BACKEND in ("c", "python")
    assert callable(codec.pack_envelope)


def test_envelope_round_trip(impl):
    packed = impl.pack_envelope(b"payments", 12, 345, b"\x00\xffdata")
    channel, client, seq, payload, end = impl.unpack_envelope(packed)
    assert (channel, client, seq, payload) == (b"payments", 12, 345, b"\x00\xffdata")
    assert end == len(packed)


def test_envelope_empty_payload(impl):
    packed = impl.pack_envelope(b"c", 0, 0, b"")
    assert impl.unpack_envelope(packed)[3] == b""


def test_envelope_channel_length_bounds(impl):
    with pytest.raises(codec.CodecError):
        impl.pack_envelope(b"", 1, 1, b"x")
    with pytest.raises(codec.CodecError):
        impl.pack_envelope(b"c" * 256, 1, 1, b"x")


def test_envelope_truncation_rejected(impl):
    packed = impl.pack_envelope(b"ch", 1, 2, b"abcdef")
    for cut in (0, 1, 5, len(packed) - 1):
        with pytest.raises(codec.CodecError):
            impl.unpack_envelope(packed[:cut])


def test_envelope_list_round_trip(impl):
    envs = [impl.pack_envelope(b"a", i, i, bytes([i])) for i in range(5)]
    blob = impl.pack_envelope_list(envs)
    out, end = impl.unpack_envelope_list(blob)
    assert out == envs
    assert end == len(blob)


def test_envelope_list_empty(impl):
    blob = impl.pack_envelope_list([])
    assert impl.unpack_envelope_list(blob) == ([], 4)


def test_header_round_trip(impl):
    h = impl.pack_header(2**40, b"p" * 32, b"d" * 32)
    assert len(h) == codec.HEADER_LEN
    assert impl.unpack_header(h) == (2**40, b"p" * 32, b"d" * 32)


def test_header_rejects_bad_digest_len(impl):
    with pytest.raises(codec.CodecError):
        impl.pack_header(0, b"short", b"d" * 32)


def test_message_round_trip(impl):
    wire = impl.pack_message(3, 7, 1, 2, b"body-bytes")
    assert impl.unpack_message(wire) == (3, 7, 1, 2, b"body-bytes")


def test_message_truncation(impl):
    wire = impl.pack_message(1, 0, 0, 0, b"xyz")
    with pytest.raises(codec.CodecError):
        impl.unpack_message(wire[:-1])
    with pytest.raises(codec.CodecError):
        impl.unpack_message(wire[:10])


envelope_fields = st.tuples(
    st.binary(min_size=1, max_size=16),
    st.integers(min_value=0, max_value=2**32 - 1),
    st.integers(min_value=0, max_value=2**64 - 1),
    st.binary(max_size=512),
)


@given(envelope_fields)
def test_envelope_canonical_reserialization(fields):
    channel, client, seq, payload = fields
    packed = _codec_py.pack_envelope(channel, client, seq, payload)
    c2, cl2, s2, p2, _ = _codec_py.unpack_envelope(packed)
    assert _codec_py.pack_envelope(c2, cl2, s2, p2) == packed


@pytest.mark.skipif(_codec_c is None, reason="compiled codec not built")
@given(st.lists(envelope_fields, max_size=8))
def test_backend_parity(items):
    envs_py = [_codec_py.pack_envelope(*it) for it in items]
    envs_c = [_codec_c.pack_envelope(*it) for it in items]
    assert envs_py == envs_c
    blob_py = _codec_py.pack_envelope_list(envs_py)
    blob_c = _codec_c.pack_envelope_list(envs_c)
    assert blob_py == blob_c
    assert _codec_py.unpack_envelope_list(blob_py) == _codec_c.unpack_envelope_list(blob_c)
    msg_py = _codec_py.pack_message(2, 9, 4, 1, blob_py)
    msg_c = _codec_c.pack_message(2, 9, 4, 1, blob_c)
    assert msg_py == msg_c
    assert _codec_py.unpack_message(msg_py) == _codec_c.unpack_message(msg_c)
