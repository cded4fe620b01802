"""Canonical wire codec: compiled kernels when available, pure Python otherwise.

Set ORDERCAST_PURE_PYTHON=1 to force the fallback (used by the parity tests
and the codec benchmark).
"""

import os

from ordercast._codec_py import (  # noqa: F401  (re-exported constants)
    CodecError,
    DIGEST_LEN,
    HEADER_LEN,
)

if os.environ.get("ORDERCAST_PURE_PYTHON"):
    from ordercast import _codec_py as _impl
else:
    try:
        from ordercast import _codec_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from ordercast import _codec_py as _impl

BACKEND = _impl.BACKEND

pack_envelope = _impl.pack_envelope
unpack_envelope = _impl.unpack_envelope
pack_envelope_list = _impl.pack_envelope_list
unpack_envelope_list = _impl.unpack_envelope_list
pack_header = _impl.pack_header
unpack_header = _impl.unpack_header
pack_message = _impl.pack_message
unpack_message = _impl.unpack_message
