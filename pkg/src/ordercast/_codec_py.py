"""Pure-Python serialization kernels.

These functions are the hot path of the whole stack: every protocol message,
batch digest, and block copy goes through them.  `ordercast.codec` prefers the
compiled twin (`_codec_c`) and falls back to this module.  Both must stay
byte-for-byte identical; the wire layouts are documented in FORMAT.md.
All integers are big-endian, fixed width.
"""

import struct

BACKEND = "python"

DIGEST_LEN = 32
HEADER_LEN = 8 + DIGEST_LEN + DIGEST_LEN

_U16 = struct.Struct(">H")
_U32 = struct.Struct(">I")
_U64 = struct.Struct(">Q")
_HDR = struct.Struct(">Q32s32s")
_MSG = struct.Struct(">BQQHI")


class CodecError(ValueError):
    """Malformed or truncated wire data."""


def pack_envelope(channel: bytes, client_id: int, seq: int, payload: bytes) -> bytes:
    if not 1 <= len(channel) <= 255:
        raise CodecError("channel id must be 1..255 bytes")
    return (
        bytes([len(channel)])
        + channel
        + _U32.pack(client_id)
        + _U64.pack(seq)
        + _U32.pack(len(payload))
        + payload
    )


def unpack_envelope(data, offset=0):
    """Returns (channel, client_id, seq, payload, end_offset)."""
    try:
        clen = data[offset]
        offset += 1
        channel = bytes(data[offset:offset + clen])
        if len(channel) != clen or clen == 0:
            raise CodecError("truncated channel id")
        offset += clen
        client_id = _U32.unpack_from(data, offset)[0]
        seq = _U64.unpack_from(data, offset + 4)[0]
        plen = _U32.unpack_from(data, offset + 12)[0]
        offset += 16
        payload = bytes(data[offset:offset + plen])
        if len(payload) != plen:
            raise CodecError("truncated payload")
        return channel, client_id, seq, payload, offset + plen
    except (IndexError, struct.error) as exc:
        raise CodecError(f"truncated envelope: {exc}") from None


def pack_envelope_list(packed_envelopes) -> bytes:
    """Count-prefixed concatenation of length-prefixed envelope encodings."""
    parts = [_U32.pack(len(packed_envelopes))]
    for env in packed_envelopes:
        parts.append(_U32.pack(len(env)))
        parts.append(env)
    return b"".join(parts)


def unpack_envelope_list(data, offset=0):
    """Returns (list of packed envelope bytes, end_offset)."""
    try:
        count = _U32.unpack_from(data, offset)[0]
    except struct.error:
        raise CodecError("truncated envelope list") from None
    offset += 4
    out = []
    for _ in range(count):
        try:
            elen = _U32.unpack_from(data, offset)[0]
        except struct.error:
            raise CodecError("truncated envelope list") from None
        offset += 4
        env = bytes(data[offset:offset + elen])
        if len(env) != elen:
            raise CodecError("truncated envelope list")
        out.append(env)
        offset += elen
    return out, offset


def pack_header(number: int, prev_hash: bytes, data_hash: bytes) -> bytes:
    if len(prev_hash) != DIGEST_LEN or len(data_hash) != DIGEST_LEN:
        raise CodecError("digests must be 32 bytes")
    return _HDR.pack(number, prev_hash, data_hash)


def unpack_header(data, offset=0):
    """Returns (number, prev_hash, data_hash)."""
    try:
        return _HDR.unpack_from(data, offset)
    except struct.error as exc:
        raise CodecError(f"truncated header: {exc}") from None


def pack_message(kind: int, instance: int, regency: int, sender: int, body: bytes) -> bytes:
    return _MSG.pack(kind, instance, regency, sender, len(body)) + body


def unpack_message(data):
    """Returns (kind, instance, regency, sender, body)."""
    try:
        kind, instance, regency, sender, blen = _MSG.unpack_from(data, 0)
    except struct.error as exc:
        raise CodecError(f"truncated message: {exc}") from None
    body = bytes(data[23:23 + blen])
    if len(body) != blen:
        raise CodecError("truncated message body")
    return kind, instance, regency, sender, body
