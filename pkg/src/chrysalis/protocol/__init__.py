"""Rack/pen graph machinery, key material and the framed handshake."""

from .graphs import (Graph, HClique, Rack, is_homeomorphic, max_clique, pen,
                     rack_default, smooth_degree_two)
from .keys import (Blip, KeyPair, KeyspaceCounts, PrivateAngle, Top,
                   derive_top, encode, keygen, keyspace_counts, make_blip,
                   tap)
from .prng import SplitMix64
from .session import (Role, SessionState, State, handshake_step,
                      run_honest_handshake)
from .wire import Frame, MsgType, parse_frame

__all__ = [
    "Graph", "HClique", "Rack", "is_homeomorphic", "max_clique", "pen",
    "rack_default", "smooth_degree_two",
    "Blip", "KeyPair", "KeyspaceCounts", "PrivateAngle", "Top",
    "derive_top", "encode", "keygen", "keyspace_counts", "make_blip", "tap",
    "SplitMix64",
    "Role", "SessionState", "State", "handshake_step",
    "run_honest_handshake",
    "Frame", "MsgType", "parse_frame",
]
