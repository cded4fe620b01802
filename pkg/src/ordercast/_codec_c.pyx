# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled serialization kernels; byte-identical to `_codec_py`."""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.string cimport memcpy

from ordercast._codec_py import CodecError

BACKEND = "c"

DIGEST_LEN = 32
HEADER_LEN = 72

DEF _DIGEST = 32
DEF _HEADER = 72


cdef inline void _put_u16(char *buf, Py_ssize_t off, unsigned int v):
    buf[off] = <char>((v >> 8) & 0xFF)
    buf[off + 1] = <char>(v & 0xFF)


cdef inline void _put_u32(char *buf, Py_ssize_t off, unsigned long v):
    buf[off] = <char>((v >> 24) & 0xFF)
    buf[off + 1] = <char>((v >> 16) & 0xFF)
    buf[off + 2] = <char>((v >> 8) & 0xFF)
    buf[off + 3] = <char>(v & 0xFF)


cdef inline void _put_u64(char *buf, Py_ssize_t off, unsigned long long v):
    cdef int i
    for i in range(8):
        buf[off + i] = <char>((v >> (56 - 8 * i)) & 0xFF)


cdef inline unsigned int _get_u16(const unsigned char *buf, Py_ssize_t off):
    return (<unsigned int>buf[off] << 8) | buf[off + 1]


cdef inline unsigned long _get_u32(const unsigned char *buf, Py_ssize_t off):
    return ((<unsigned long>buf[off] << 24) | (<unsigned long>buf[off + 1] << 16)
            | (<unsigned long>buf[off + 2] << 8) | buf[off + 3])


cdef inline unsigned long long _get_u64(const unsigned char *buf, Py_ssize_t off):
    cdef unsigned long long v = 0
    cdef int i
    for i in range(8):
        v = (v << 8) | buf[off + i]
    return v


def pack_envelope(bytes channel, unsigned long client_id, unsigned long long seq, bytes payload):
    cdef Py_ssize_t clen = len(channel)
    cdef Py_ssize_t plen = len(payload)
    if clen < 1 or clen > 255:
        raise CodecError("channel id must be 1..255 bytes")
    cdef Py_ssize_t total = 1 + clen + 16 + plen
    out = PyBytes_FromStringAndSize(NULL, total)
    cdef char *buf = PyBytes_AS_STRING(out)
    buf[0] = <char>clen
    memcpy(buf + 1, PyBytes_AS_STRING(channel), clen)
    _put_u32(buf, 1 + clen, client_id)
    _put_u64(buf, 1 + clen + 4, seq)
    _put_u32(buf, 1 + clen + 12, <unsigned long>plen)
    if plen:
        memcpy(buf + 1 + clen + 16, PyBytes_AS_STRING(payload), plen)
    return out


def unpack_envelope(data, Py_ssize_t offset=0):
    cdef const unsigned char[:] view = data
    cdef Py_ssize_t n = view.shape[0]
    cdef Py_ssize_t clen, plen
    if offset + 1 > n:
        raise CodecError("truncated envelope")
    clen = view[offset]
    offset += 1
    if clen == 0 or offset + clen + 16 > n:
        raise CodecError("truncated channel id")
    channel = PyBytes_FromStringAndSize(<const char *>&view[offset], clen)
    offset += clen
    cdef unsigned long client_id = _get_u32(&view[0], offset)
    cdef unsigned long long seq = _get_u64(&view[0], offset + 4)
    plen = <Py_ssize_t>_get_u32(&view[0], offset + 12)
    offset += 16
    if offset + plen > n:
        raise CodecError("truncated payload")
    if plen:
        payload = PyBytes_FromStringAndSize(<const char *>&view[offset], plen)
    else:
        payload = b""
    return channel, client_id, seq, payload, offset + plen


def pack_envelope_list(packed_envelopes):
    cdef Py_ssize_t total = 4
    cdef bytes env
    for env in packed_envelopes:
        total += 4 + len(env)
    out = PyBytes_FromStringAndSize(NULL, total)
    cdef char *buf = PyBytes_AS_STRING(out)
    _put_u32(buf, 0, len(packed_envelopes))
    cdef Py_ssize_t off = 4
    cdef Py_ssize_t elen
    for env in packed_envelopes:
        elen = len(env)
        _put_u32(buf, off, <unsigned long>elen)
        off += 4
        if elen:
            memcpy(buf + off, PyBytes_AS_STRING(env), elen)
        off += elen
    return out


def unpack_envelope_list(data, Py_ssize_t offset=0):
    cdef const unsigned char[:] view = data
    cdef Py_ssize_t n = view.shape[0]
    if offset + 4 > n:
        raise CodecError("truncated envelope list")
    cdef unsigned long count = _get_u32(&view[0], offset)
    offset += 4
    out = []
    cdef Py_ssize_t elen
    cdef unsigned long i
    for i in range(count):
        if offset + 4 > n:
            raise CodecError("truncated envelope list")
        elen = <Py_ssize_t>_get_u32(&view[0], offset)
        offset += 4
        if offset + elen > n:
            raise CodecError("truncated envelope list")
        out.append(PyBytes_FromStringAndSize(<const char *>&view[offset], elen))
        offset += elen
    return out, offset


def pack_header(unsigned long long number, bytes prev_hash, bytes data_hash):
    if len(prev_hash) != _DIGEST or len(data_hash) != _DIGEST:
        raise CodecError("digests must be 32 bytes")
    out = PyBytes_FromStringAndSize(NULL, _HEADER)
    cdef char *buf = PyBytes_AS_STRING(out)
    _put_u64(buf, 0, number)
    memcpy(buf + 8, PyBytes_AS_STRING(prev_hash), _DIGEST)
    memcpy(buf + 40, PyBytes_AS_STRING(data_hash), _DIGEST)
    return out


def unpack_header(data, Py_ssize_t offset=0):
    cdef const unsigned char[:] view = data
    if offset + _HEADER > view.shape[0]:
        raise CodecError("truncated header")
    cdef unsigned long long number = _get_u64(&view[0], offset)
    prev_hash = PyBytes_FromStringAndSize(<const char *>&view[offset + 8], _DIGEST)
    data_hash = PyBytes_FromStringAndSize(<const char *>&view[offset + 40], _DIGEST)
    return number, prev_hash, data_hash


def pack_message(unsigned int kind, unsigned long long instance, unsigned long long regency,
                 unsigned int sender, bytes body):
    cdef Py_ssize_t blen = len(body)
    out = PyBytes_FromStringAndSize(NULL, 23 + blen)
    cdef char *buf = PyBytes_AS_STRING(out)
    buf[0] = <char>(kind & 0xFF)
    _put_u64(buf, 1, instance)
    _put_u64(buf, 9, regency)
    _put_u16(buf, 17, sender)
    _put_u32(buf, 19, <unsigned long>blen)
    if blen:
        memcpy(buf + 23, PyBytes_AS_STRING(body), blen)
    return out


def unpack_message(data):
    cdef const unsigned char[:] view = data
    cdef Py_ssize_t n = view.shape[0]
    if n < 23:
        raise CodecError("truncated message")
    cdef unsigned int kind = view[0]
    cdef unsigned long long instance = _get_u64(&view[0], 1)
    cdef unsigned long long regency = _get_u64(&view[0], 9)
    cdef unsigned int sender = _get_u16(&view[0], 17)
    cdef Py_ssize_t blen = <Py_ssize_t>_get_u32(&view[0], 19)
    if 23 + blen > n:
        raise CodecError("truncated message body")
    if blen:
        body = PyBytes_FromStringAndSize(<const char *>&view[23], blen)
    else:
        body = b""
    return kind, instance, regency, sender, body
