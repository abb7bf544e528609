"""Framed wire format.

Frame layout: magic "CHRY" | version u8 | msg_type u8 | length u32 BE |
payload | CRC-32 u32 BE over the payload (polynomial 0xEDB88320, i.e.
plain zlib.crc32).
"""

from __future__ import annotations

import enum
import struct
import zlib
from dataclasses import dataclass

from ..errors import FrameCorrupt, VersionMismatch

MAGIC = b"CHRY"
WIRE_VERSION = 0x01
HEADER_LEN = 4 + 1 + 1 + 4
TRAILER_LEN = 4


class MsgType(enum.IntEnum):
    HELLO = 0x01          # reserved; never sent by version 1 sessions
    BLIP_PUB = 0x02
    BLIP_REQ = 0x03
    TOP_RESP = 0x04
    KEY_CONFIRM = 0x05
    ACK = 0x06
    ERROR = 0x07


@dataclass(frozen=True)
class Frame:
    msg_type: int
    payload: bytes
    version: int = WIRE_VERSION

    def serialize(self) -> bytes:
        return (MAGIC + struct.pack(">BBI", self.version, self.msg_type,
                                    len(self.payload))
                + self.payload
                + struct.pack(">I", zlib.crc32(self.payload) & 0xFFFFFFFF))


def parse_frame(data: bytes) -> Frame:
    """Parse one complete frame; raises FrameCorrupt / VersionMismatch."""
    if len(data) < HEADER_LEN + TRAILER_LEN:
        raise FrameCorrupt("frame shorter than header and trailer")
    if data[:4] != MAGIC:
        raise FrameCorrupt("bad magic")
    version, msg_type, length = struct.unpack(">BBI", data[4:HEADER_LEN])
    if version != WIRE_VERSION:
        raise VersionMismatch(f"wire version {version:#x}")
    if len(data) != HEADER_LEN + length + TRAILER_LEN:
        raise FrameCorrupt("length field does not match frame size")
    payload = data[HEADER_LEN:HEADER_LEN + length]
    (crc,) = struct.unpack(">I", data[HEADER_LEN + length:])
    if crc != (zlib.crc32(payload) & 0xFFFFFFFF):
        raise FrameCorrupt("CRC mismatch")
    if not MsgType.HELLO <= msg_type <= MsgType.ERROR:
        raise FrameCorrupt(f"unknown message type {msg_type:#x}")
    return Frame(msg_type, payload)


# -- payload primitives (all big-endian) --------------------------------------

def pack_f64(x: float) -> bytes:
    return struct.pack(">d", x)


def pack_i64(x: int) -> bytes:
    return struct.pack(">q", x)


def pack_u64(x: int) -> bytes:
    return struct.pack(">Q", x & ((1 << 64) - 1))


def pack_complex(z: complex) -> bytes:
    return struct.pack(">dd", z.real, z.imag)


def pack_bytes(b: bytes) -> bytes:
    return struct.pack(">I", len(b)) + b


class Reader:
    """Sequential big-endian reader over a payload."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise FrameCorrupt("payload truncated")
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out

    def f64(self) -> float:
        return struct.unpack(">d", self._take(8))[0]

    def i64(self) -> int:
        return struct.unpack(">q", self._take(8))[0]

    def u64(self) -> int:
        return struct.unpack(">Q", self._take(8))[0]

    def u32(self) -> int:
        return struct.unpack(">I", self._take(4))[0]

    def complex_(self) -> complex:
        re, im = struct.unpack(">dd", self._take(16))
        return complex(re, im)

    def bytes_(self) -> bytes:
        return self._take(self.u32())

    def raw(self, n: int) -> bytes:
        return self._take(n)

    def done(self) -> bool:
        return self.pos == len(self.data)
