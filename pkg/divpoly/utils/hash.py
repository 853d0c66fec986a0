import hashlib
import json
from typing import Any


def canonical_json(payload: Any) -> bytes:
    """Key-sorted compact JSON, the byte form every artifact digest covers."""
    return json.dumps(payload, sort_keys=True, separators=(',', ':')).encode('utf-8')


class CalculatedHash:
    """
    SHA-256 digest of a byte sequence, or of a JSON payload in canonical form.

    Attributes:
        value (str): Hexadecimal digest.
    """

    def __init__(self, data: bytes):
        self.value = hashlib.sha256(data).hexdigest()

    @classmethod
    def of_payload(cls, payload: Any) -> 'CalculatedHash':
        return cls(canonical_json(payload))


__all__ = ['CalculatedHash', 'canonical_json']
