"""Common types of the uniform crypto API: statuses, algorithms, key metadata.

Every operation in the library reports exactly one :class:`Status`; errors
are values, not exceptions, so callers on any backend see the same closed
set of results.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace


class Status(enum.IntEnum):
    """Result codes returned by every API operation."""

    SUCCESS = 0
    NOT_PERMITTED = -1
    NOT_SUPPORTED = -2
    INVALID_ARGUMENT = -3
    INVALID_HANDLE = -4
    BUFFER_TOO_SMALL = -5
    INSUFFICIENT_STORAGE = -6
    ALREADY_EXISTS = -7
    DOES_NOT_EXIST = -8
    BAD_STATE = -9
    HARDWARE_FAILURE = -10
    CORRUPTION_DETECTED = -11
    INVALID_SIGNATURE = -12


class KeyType(enum.Enum):
    """Closed set of supported key types."""

    AES = "aes"
    HMAC = "hmac"
    ECC_KEY_PAIR = "ecc-p256-pair"
    ECC_PUBLIC_KEY = "ecc-p256-public"
    RAW_DATA = "raw"


class Algorithm(enum.Enum):
    """Closed set of supported algorithms a key may be bound to.

    NONE is for keys that are stored but never used in an operation
    (RAW_DATA); every other value names exactly one operation family.
    """

    NONE = "none"
    CBC_NO_PADDING = "cbc-aes-no-padding"
    HMAC_SHA256 = "hmac-sha256"
    SHA_256 = "sha-256"
    ECDSA_P256_SHA256 = "ecdsa-p256-sha256"


class UsageFlags(enum.IntFlag):
    """Usage policy flag set; an operation needs its flag in the key policy."""

    NONE = 0
    ENCRYPT = 1 << 0
    DECRYPT = 1 << 1
    SIGN_MESSAGE = 1 << 2
    VERIFY_MESSAGE = 1 << 3
    SIGN_HASH = 1 << 4
    VERIFY_HASH = 1 << 5
    EXPORT = 1 << 6
    COPY = 1 << 7


# Key locations. 0 is local volatile memory; 1..MAX_SE_LOCATION address
# registered secure elements; the accelerator constant marks keys that live
# in local slots but whose operations default to the accelerator backend.
LOCATION_LOCAL = 0
LOCATION_ACCELERATOR = 0x80
MAX_SE_LOCATION = 0x7F

# Identifier ranges. 0 is the reserved null key. Caller-chosen identifiers
# and generated volatile identifiers are disjoint.
KEY_ID_NULL = 0
KEY_ID_USER_MIN = 0x00000001
KEY_ID_USER_MAX = 0x3FFFFFFF
KEY_ID_VOLATILE_MIN = 0x7FFF0000
KEY_ID_VOLATILE_MAX = 0x7FFFFFFF

AES_128_KEY_BYTES = 16
AES_BLOCK_BYTES = 16
SHA256_DIGEST_BYTES = 32
HMAC_SHA256_TAG_BYTES = 32
ECC_P256_PRIVATE_BYTES = 32
ECC_P256_PUBLIC_BYTES = 65  # SEC1 uncompressed: 0x04 || X || Y
ECDSA_P256_SIGNATURE_BYTES = 64  # raw r || s


def is_user_key_id(key_id: int) -> bool:
    return KEY_ID_USER_MIN <= key_id <= KEY_ID_USER_MAX


def is_volatile_key_id(key_id: int) -> bool:
    return KEY_ID_VOLATILE_MIN <= key_id <= KEY_ID_VOLATILE_MAX


def is_se_location(location: int) -> bool:
    return 1 <= location <= MAX_SE_LOCATION


@dataclass(frozen=True)
class KeyAttributes:
    """Immutable creation-time metadata of a key.

    ``key_id`` is the caller-chosen identifier (user range) or 0 to have a
    volatile identifier generated. Attributes never change for a live key;
    a different policy requires destroying and recreating the key.
    """

    key_type: KeyType
    bits: int
    lifetime: int = LOCATION_LOCAL
    usage: UsageFlags = UsageFlags.NONE
    algorithm: Algorithm = Algorithm.NONE
    key_id: int = KEY_ID_NULL

    def with_id(self, key_id: int) -> "KeyAttributes":
        return replace(self, key_id=key_id)


# Required key material length in bytes per (type, bits), None = variable.
_EXACT_KEY_LENGTHS = {
    (KeyType.AES, 128): AES_128_KEY_BYTES,
    (KeyType.ECC_KEY_PAIR, 256): ECC_P256_PRIVATE_BYTES,
    (KeyType.ECC_PUBLIC_KEY, 256): ECC_P256_PUBLIC_BYTES,
}


def expected_import_length(attributes: KeyAttributes) -> int | None:
    """Exact import length for fixed-size key types, None for variable ones."""
    return _EXACT_KEY_LENGTHS.get((attributes.key_type, attributes.bits))


def zeroize(buf) -> None:
    """Overwrite a mutable buffer with zeros in place."""
    if buf is None or len(buf) == 0:
        return
    view = memoryview(buf)
    view[:] = bytes(len(view))
