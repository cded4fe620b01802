"""Header signing: ECDSA over P-256 with deterministic nonces.

Deterministic signing keeps simulator traces and recovery replays
byte-reproducible.  Key files are hex-encoded DER, one per node, referenced
from the cluster config.
"""

from __future__ import annotations

from pathlib import Path

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives import hashes, serialization
from cryptography.hazmat.primitives.asymmetric import ec

_ECDSA = ec.ECDSA(hashes.SHA256(), deterministic_signing=True)


class UnknownNodeError(KeyError):
    """Signature check against a node id with no registered public key."""


class SigningKey:
    """A node's private signing key."""

    def __init__(self, key: ec.EllipticCurvePrivateKey):
        self._key = key

    @classmethod
    def generate(cls) -> "SigningKey":
        return cls(ec.generate_private_key(ec.SECP256R1()))

    @classmethod
    def from_hex(cls, text: str) -> "SigningKey":
        der = bytes.fromhex(text.strip())
        key = serialization.load_der_private_key(der, password=None)
        if not isinstance(key, ec.EllipticCurvePrivateKey):
            raise ValueError("not an EC private key")
        return cls(key)

    @classmethod
    def load(cls, path) -> "SigningKey":
        return cls.from_hex(Path(path).read_text())

    def save(self, path) -> None:
        der = self._key.private_bytes(
            serialization.Encoding.DER,
            serialization.PrivateFormat.PKCS8,
            serialization.NoEncryption(),
        )
        Path(path).write_text(der.hex() + "\n")

    def public_key(self) -> "VerifyKey":
        return VerifyKey(self._key.public_key())

    def sign(self, data: bytes) -> bytes:
        return self._key.sign(data, _ECDSA)


class VerifyKey:
    """A node's public key."""

    def __init__(self, key: ec.EllipticCurvePublicKey):
        self._key = key

    @classmethod
    def from_hex(cls, text: str) -> "VerifyKey":
        der = bytes.fromhex(text.strip())
        key = serialization.load_der_public_key(der)
        if not isinstance(key, ec.EllipticCurvePublicKey):
            raise ValueError("not an EC public key")
        return cls(key)

    @classmethod
    def load(cls, path) -> "VerifyKey":
        return cls.from_hex(Path(path).read_text())

    def save(self, path) -> None:
        Path(path).write_text(self.to_hex() + "\n")

    def to_hex(self) -> str:
        der = self._key.public_bytes(
            serialization.Encoding.DER,
            serialization.PublicFormat.SubjectPublicKeyInfo,
        )
        return der.hex()

    def verify(self, signature: bytes, data: bytes) -> bool:
        try:
            self._key.verify(signature, data, _ECDSA)
            return True
        except InvalidSignature:
            return False


class PublicKeyDirectory:
    """node_id -> public key map, distributed out of band via config."""

    def __init__(self, keys: dict[int, VerifyKey] | None = None):
        self._keys: dict[int, VerifyKey] = dict(keys or {})

    def add(self, node_id: int, key: VerifyKey) -> None:
        self._keys[node_id] = key

    def get(self, node_id: int) -> VerifyKey:
        try:
            return self._keys[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def __contains__(self, node_id: int) -> bool:
        return node_id in self._keys

    def __len__(self) -> int:
        return len(self._keys)


def sign_header(header, key: SigningKey) -> bytes:
    """Sign the canonical header bytes; cost is payload-size independent."""
    return key.sign(header.to_bytes())


def verify_header_sig(header, sig: bytes, node_id: int, directory: PublicKeyDirectory) -> bool:
    """True iff sig is valid over the header bytes under node_id's key.

    Raises UnknownNodeError for ids outside the directory (distinct from a
    bad signature).
    """
    return directory.get(node_id).verify(sig, header.to_bytes())


def generate_keyfiles(node_ids, directory) -> PublicKeyDirectory:
    """Create one key pair per node under `directory`; returns the public map."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    pubdir = PublicKeyDirectory()
    for node_id in node_ids:
        key = SigningKey.generate()
        key.save(directory / f"node{node_id}.key")
        pub = key.public_key()
        pub.save(directory / f"node{node_id}.pub")
        pubdir.add(node_id, pub)
    return pubdir
