"""Core domain types: envelopes, block headers, blocks, chain verification.

All types are immutable after construction; serialization is canonical
(serialize -> deserialize -> serialize is byte-identical).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from ordercast import codec
from ordercast.codec import CodecError, DIGEST_LEN, HEADER_LEN

GENESIS_PREV_HASH = b"\x00" * DIGEST_LEN

# Client id reserved for ordering-layer control envelopes (blockcutter flush
# markers); never assigned to a real client.
CONTROL_CLIENT_ID = 0xFFFFFFFF


def sha256(data: bytes) -> bytes:
    """32-byte digest used for batch hashes, data hashes and chain links."""
    return hashlib.sha256(data).digest()


@dataclass(frozen=True)
class Envelope:
    """Opaque client transaction payload; the unit of ordering.

    (client_id, seq) uniquely identifies an envelope within a run.
    """

    channel_id: str
    client_id: int
    seq: int
    payload: bytes

    _packed: bytes = field(default=b"", repr=False, compare=False)

    def __post_init__(self):
        if not self._packed:
            packed = codec.pack_envelope(
                self.channel_id.encode("utf-8"), self.client_id, self.seq, self.payload
            )
            object.__setattr__(self, "_packed", packed)

    @property
    def key(self) -> tuple[int, int]:
        return (self.client_id, self.seq)

    def to_bytes(self) -> bytes:
        return self._packed

    @classmethod
    def from_bytes(cls, data: bytes) -> "Envelope":
        channel, client_id, seq, payload, end = codec.unpack_envelope(data)
        if end != len(data):
            raise CodecError("trailing bytes after envelope")
        return cls(channel.decode("utf-8"), client_id, seq, payload, _packed=bytes(data))


def pack_envelopes(envelopes) -> bytes:
    """Canonical serialization of an envelope list (input to the data hash)."""
    return codec.pack_envelope_list([e.to_bytes() for e in envelopes])


def unpack_envelopes(data: bytes, offset: int = 0):
    packed, end = codec.unpack_envelope_list(data, offset)
    return [Envelope.from_bytes(p) for p in packed], end


def data_hash_of(envelopes) -> bytes:
    return sha256(pack_envelopes(envelopes))


@dataclass(frozen=True)
class BlockHeader:
    """Fixed-width header: number, previous header hash, envelope data hash."""

    number: int
    prev_hash: bytes
    data_hash: bytes

    def to_bytes(self) -> bytes:
        return codec.pack_header(self.number, self.prev_hash, self.data_hash)

    @classmethod
    def from_bytes(cls, data: bytes, offset: int = 0) -> "BlockHeader":
        number, prev_hash, data_hash = codec.unpack_header(data, offset)
        return cls(number, prev_hash, data_hash)

    def hash(self) -> bytes:
        return sha256(self.to_bytes())


@dataclass(frozen=True)
class Block:
    """Hash-chained container of envelopes plus header signatures.

    Signatures cover the header bytes only, so they are independent of
    envelope payload sizes.
    """

    header: BlockHeader
    envelopes: tuple
    signatures: tuple  # ordered (node_id, signature bytes) pairs

    def data_bytes(self) -> bytes:
        return pack_envelopes(self.envelopes)

    def to_bytes(self) -> bytes:
        parts = [self.header.to_bytes(), self.data_bytes()]
        parts.append(len(self.signatures).to_bytes(2, "big"))
        for node_id, sig in self.signatures:
            parts.append(node_id.to_bytes(2, "big"))
            parts.append(len(sig).to_bytes(2, "big"))
            parts.append(sig)
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes, offset: int = 0) -> "Block":
        header = BlockHeader.from_bytes(data, offset)
        envs, off = unpack_envelopes(data, offset + HEADER_LEN)
        try:
            nsigs = int.from_bytes(data[off:off + 2], "big")
            off += 2
            sigs = []
            for _ in range(nsigs):
                node_id = int.from_bytes(data[off:off + 2], "big")
                slen = int.from_bytes(data[off + 2:off + 4], "big")
                sig = bytes(data[off + 4:off + 4 + slen])
                if len(sig) != slen:
                    raise CodecError("truncated signature")
                sigs.append((node_id, sig))
                off += 4 + slen
        except IndexError:
            raise CodecError("truncated block") from None
        return cls(header, tuple(envs), tuple(sigs))


def make_block(number: int, prev_hash: bytes, envelopes, signatures=()) -> Block:
    header = BlockHeader(number, prev_hash, data_hash_of(envelopes))
    return Block(header, tuple(envelopes), tuple(signatures))


@dataclass(frozen=True)
class ChainCheck:
    """Result of verify_chain: ok, or the first violated link and why."""

    ok: bool
    reason: str = ""
    block_number: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_chain(blocks, genesis_prev: bytes = GENESIS_PREV_HASH) -> ChainCheck:
    """Check numbering, hash links and data hashes over an ordered block list.

    An empty list is vacuously valid.
    """
    prev = genesis_prev
    expected_number = None
    for block in blocks:
        hdr = block.header
        if expected_number is not None and hdr.number != expected_number:
            return ChainCheck(False, "number_gap", hdr.number)
        if hdr.prev_hash != prev:
            return ChainCheck(False, "prev_hash_mismatch", hdr.number)
        if hdr.data_hash != data_hash_of(block.envelopes):
            return ChainCheck(False, "data_hash_mismatch", hdr.number)
        prev = hdr.hash()
        expected_number = hdr.number + 1
    return ChainCheck(True)
