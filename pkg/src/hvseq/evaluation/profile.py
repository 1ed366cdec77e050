"""Similarity-vs-shift sweeps over a range of radii."""

from __future__ import annotations

import io

from ..encoding import Encoder, EncoderConfig
from ..similarity import SimType, sim


def emit_profile(config: EncoderConfig, a: str, b: str, shifts, radii, simtype="cos") -> list:
    """Rows ``(R, shift, sim)`` comparing ``a`` shifted by ``shift`` against ``b``.

    Each radius gets its own encoder (same seed); shifted vectors are obtained
    by permuting the encoding of ``a`` at position 0.
    """
    t = SimType.parse(simtype)
    rows = []
    for radius in radii:
        enc = Encoder(config.with_(radius=int(radius)))
        ha = enc.encode_string(a, 0)
        hb = enc.encode_string(b, 0)
        for s in shifts:
            rows.append((int(radius), int(s), sim(enc.shift(ha, s), hb, t)))
    return rows


def profile_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("R,shift,sim\n")
    for radius, s, v in rows:
        buf.write(f"{radius},{s},{float(v):.6g}\n")
    return buf.getvalue()
