"""Authenticated key-exchange state machine over the framed transport.

Honest flow (five wire frames):

    server                              client
      |-- BLIP_PUB (server blip) -------->|
      |<-- BLIP_REQ (client blip, ct_c) --|
      |-- TOP_RESP (top, ct_s) ---------->|
      |<-- KEY_CONFIRM (client mac) ------|
      |-- ACK (server mac) -------------->|   both Authenticated

ct_c / ct_s carry seed-derived 32-byte secrets encoded against the peer's
blip; the session key is SHA-256(transcript || secret_c || secret_s).  Any
structural or semantic failure emits one ERROR frame and closes the
session; nothing is ever retried.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field

from ..errors import (AuthFailed, FrameCorrupt, ProtocolError,
                      ProtocolViolation, TamperDetected, VersionMismatch)
from .keys import Blip, KeyPair, derive_top, encode, keygen, tap
from .prng import SplitMix64
from .wire import Frame, MsgType, Reader, pack_bytes, parse_frame


class Role(enum.Enum):
    SERVER = "server"
    CLIENT = "client"


class State(enum.Enum):
    START = "start"
    SERVER_AWAIT_REQ = "server_await_req"
    SERVER_AWAIT_CONFIRM = "server_await_confirm"
    CLIENT_AWAIT_PUB = "client_await_pub"
    CLIENT_AWAIT_TOP = "client_await_top"
    CLIENT_AWAIT_ACK = "client_await_ack"
    AUTHENTICATED = "authenticated"
    CLOSED = "closed"


class _PeerError(ProtocolError):
    """Peer sent an ERROR frame; close silently instead of echoing one."""


@dataclass
class SessionState:
    role: Role
    seed: int
    keypair: KeyPair | None = None
    state: State = State.START
    transcript: bytearray = field(default_factory=bytearray)
    session_key: bytes | None = None
    error: str | None = None
    _secret_own: bytes = b""
    _secret_peer: bytes = b""
    _peer_blip: Blip | None = None

    def __post_init__(self):
        if self.keypair is None:
            self.keypair = keygen(seed=self.seed)
        rng = SplitMix64(self.seed ^ 0xC0FFEE)
        self._secret_own = b"".join(
            rng.next_u64().to_bytes(8, "big") for _ in range(4))


def _session_key(transcript: bytes, secret_client: bytes,
                 secret_server: bytes) -> bytes:
    return hashlib.sha256(b"chrysalis-session" + transcript
                          + secret_client + secret_server).digest()


def _mac(label: bytes, key: bytes, transcript: bytes) -> bytes:
    return hashlib.sha256(label + key + transcript).digest()


def handshake_step(session: SessionState,
                   incoming: bytes | None) -> tuple[SessionState, list[bytes]]:
    """Advance the state machine; returns the (mutated) session and the
    frames to put on the wire.

    `incoming` is one raw frame or None for the initial local step.  All
    failures close the session and emit a single ERROR frame.
    """
    try:
        return _step(session, incoming)
    except _PeerError:
        return session, []
    except ProtocolError as exc:
        session.state = State.CLOSED
        session.error = f"{type(exc).__name__}: {exc}"
        err = Frame(MsgType.ERROR, type(exc).__name__.encode())
        return session, [err.serialize()]


def _expect(session: SessionState, frame: Frame, wanted: MsgType) -> None:
    if frame.msg_type == MsgType.ERROR:
        session.state = State.CLOSED
        session.error = "peer error: " + frame.payload.decode("ascii",
                                                              "replace")
        raise _PeerError("peer reported an error")
    if frame.msg_type != wanted:
        raise ProtocolViolation(
            f"got {frame.msg_type:#x} while expecting {wanted:#x}")


def _step(session, incoming):
    if session.state is State.CLOSED:
        raise ProtocolViolation("session is closed")

    if session.state is State.START:
        if incoming is not None:
            raise ProtocolViolation("handshake starts with a local step")
        if session.role is Role.SERVER:
            payload = session.keypair.public.serialize()
            session.transcript += payload
            session.state = State.SERVER_AWAIT_REQ
            return session, [Frame(MsgType.BLIP_PUB, payload).serialize()]
        session.state = State.CLIENT_AWAIT_PUB
        return session, []

    if incoming is None:
        raise ProtocolViolation("no frame to process")
    frame = parse_frame(incoming)

    if session.state is State.CLIENT_AWAIT_PUB:
        _expect(session, frame, MsgType.BLIP_PUB)
        session._peer_blip = Blip.parse(frame.payload)
        if session._peer_blip.params_version != \
                session.keypair.private.params_version:
            raise VersionMismatch("peer params version")
        session.transcript += frame.payload
        ct = encode(session._peer_blip, session._secret_own)
        payload = (pack_bytes(session.keypair.public.serialize())
                   + pack_bytes(ct))
        session.transcript += payload
        session.state = State.CLIENT_AWAIT_TOP
        return session, [Frame(MsgType.BLIP_REQ, payload).serialize()]

    if session.state is State.SERVER_AWAIT_REQ:
        _expect(session, frame, MsgType.BLIP_REQ)
        r = Reader(frame.payload)
        peer_blip = Blip.parse(r.bytes_())
        ct = r.bytes_()
        session._peer_blip = peer_blip
        session._secret_peer = tap(session.keypair,
                                   session.keypair.public, ct)
        session.transcript += frame.payload
        top_bytes = derive_top(session.keypair).serialize()
        ct_back = encode(peer_blip, session._secret_own)
        payload = pack_bytes(top_bytes) + pack_bytes(ct_back)
        session.transcript += payload
        session.state = State.SERVER_AWAIT_CONFIRM
        return session, [Frame(MsgType.TOP_RESP, payload).serialize()]

    if session.state is State.CLIENT_AWAIT_TOP:
        _expect(session, frame, MsgType.TOP_RESP)
        r = Reader(frame.payload)
        top_bytes = r.bytes_()
        ct = r.bytes_()
        # the top must embed exactly the blip the server advertised
        if not top_bytes.endswith(session._peer_blip.serialize()):
            raise TamperDetected("top does not carry the advertised blip")
        session._secret_peer = tap(session.keypair,
                                   session.keypair.public, ct)
        session.transcript += frame.payload
        transcript = bytes(session.transcript)
        session.session_key = _session_key(transcript,
                                           session._secret_own,
                                           session._secret_peer)
        mac = _mac(b"confirm-client", session.session_key, transcript)
        session.state = State.CLIENT_AWAIT_ACK
        return session, [Frame(MsgType.KEY_CONFIRM, mac).serialize()]

    if session.state is State.SERVER_AWAIT_CONFIRM:
        _expect(session, frame, MsgType.KEY_CONFIRM)
        transcript = bytes(session.transcript)
        session.session_key = _session_key(transcript,
                                           session._secret_peer,
                                           session._secret_own)
        expect = _mac(b"confirm-client", session.session_key, transcript)
        if frame.payload != expect:
            raise AuthFailed("client confirmation mismatch")
        mac = _mac(b"confirm-server", session.session_key, transcript)
        session.state = State.AUTHENTICATED
        return session, [Frame(MsgType.ACK, mac).serialize()]

    if session.state is State.CLIENT_AWAIT_ACK:
        _expect(session, frame, MsgType.ACK)
        transcript = bytes(session.transcript)
        expect = _mac(b"confirm-server", session.session_key, transcript)
        if frame.payload != expect:
            raise AuthFailed("server confirmation mismatch")
        session.state = State.AUTHENTICATED
        return session, []

    raise ProtocolViolation(f"no transition from {session.state}")


def run_honest_handshake(seed_server: int, seed_client: int
                         ) -> tuple[SessionState, SessionState, list[bytes]]:
    """Drive both sides locally; returns the sessions and all wire frames."""
    server = SessionState(Role.SERVER, seed_server)
    client = SessionState(Role.CLIENT, seed_client)
    wire: list[bytes] = []
    server, out_s = handshake_step(server, None)
    client, _ = handshake_step(client, None)
    pending = list(out_s)
    wire.extend(out_s)
    direction_to_client = True
    while pending:
        frame = pending.pop(0)
        target = client if direction_to_client else server
        target, out = handshake_step(target, frame)
        wire.extend(out)
        pending.extend(out)
        direction_to_client = not direction_to_client
    return server, client, wire
