"""Weak and strong arbitrages, chains, and conversion between the two kinds.

A weak arbitrage ``XYZ`` fires when trading X for Y through the mediator Z
beats the direct rate, i.e. ``r_XZ * r_ZY > r_XY``, and then resets
``r_XY`` to the mediated value. A strong arbitrage resets the rate of the
unordered pair ``{X, Y}`` through ``Z`` unconditionally.

On exponent vectors the strong arbitrages are the integer reassignments in
``STRONG_RULES``; a weak arbitrage is the matching strong one guarded by a
strict inequality between the old and the new value of the target slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .rates import RateEnsemble

WEAK_NAMES = (
    "FAR", "FAM", "FRA", "FRM", "FMA", "FMR",
    "AFR", "AFM", "ARF", "ARM", "AMF", "AMR",
    "RFA", "RFM", "RAF", "RAM", "RMF", "RMA",
    "MFA", "MFR", "MAF", "MAR", "MRF", "MRA",
)
STRONG_NAMES = (
    "FAR", "FAM", "FRA", "FRM", "FMA", "FMR",
    "ARF", "ARM", "AMF", "AMR", "RMF", "RMA",
)

# strong id -> (target slot, first slot, second slot, sign), all 0-based:
# n[target] <- n[first] + sign * n[second]
STRONG_RULES = {
    1: (0, 1, 3, -1),
    2: (0, 2, 4, -1),
    3: (1, 0, 3, +1),
    4: (1, 2, 5, -1),
    5: (2, 0, 4, +1),
    6: (2, 1, 5, +1),
    7: (3, 1, 0, -1),
    8: (3, 4, 5, -1),
    9: (4, 2, 0, -1),
    10: (4, 3, 5, +1),
    11: (5, 2, 1, -1),
    12: (5, 4, 3, -1),
}


def _weak_table():
    table = {}
    for wid, (x, y, z) in enumerate(WEAK_NAMES, start=1):
        if x + y + z in STRONG_NAMES:
            table[wid] = (STRONG_NAMES.index(x + y + z) + 1, +1)
        else:
            table[wid] = (STRONG_NAMES.index(y + x + z) + 1, -1)
    return table


# weak id -> (strong id, direction). Direction +1: fires when the strong
# reassignment would raise the target exponent; -1: when it would lower it.
WEAK_TO_STRONG = _weak_table()
STRONG_TO_WEAK = {
    sid: (min(w for w, (s, d) in WEAK_TO_STRONG.items() if s == sid and d > 0),
          min(w for w, (s, d) in WEAK_TO_STRONG.items() if s == sid and d < 0))
    for sid in STRONG_RULES
}

WEAK = "weak"
STRONG = "strong"


@dataclass(frozen=True)
class Chain:
    flavor: str
    ids: tuple = ()

    def __post_init__(self):
        if self.flavor not in (WEAK, STRONG):
            raise ValueError("chain flavor must be 'weak' or 'strong'")
        ids = tuple(int(i) for i in self.ids)
        top = 24 if self.flavor == WEAK else 12
        for i in ids:
            if not 1 <= i <= top:
                raise ValueError("%s arbitrage id out of range: %d" % (self.flavor, i))
        object.__setattr__(self, "ids", ids)

    def __len__(self):
        return len(self.ids)

    def __str__(self):
        return format_chain(self)

    @classmethod
    def weak(cls, *ids) -> "Chain":
        return cls(WEAK, ids)

    @classmethod
    def strong(cls, *ids) -> "Chain":
        return cls(STRONG, ids)


@dataclass(frozen=True)
class Step:
    id: int
    active: bool
    state: tuple


def parse_chain(text: str) -> Chain:
    """Parse ``"s:7,10"`` / ``"w:5,7,17"`` / ``"5,7"`` (weak by default)."""
    text = text.strip()
    flavor = WEAK
    if text[:2].lower() in ("w:", "s:"):
        flavor = STRONG if text[0].lower() == "s" else WEAK
        text = text[2:]
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    try:
        ids = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError("malformed chain: %r" % text) from None
    return Chain(flavor, ids)


def format_chain(chain: Chain) -> str:
    return ("s:" if chain.flavor == STRONG else "w:") + ",".join(map(str, chain.ids))


def _check_strong_id(sid):
    if sid not in STRONG_RULES:
        raise ValueError("strong arbitrage id out of range: %r" % (sid,))


def strong_value(sid: int, n: Sequence[int]) -> int:
    """Value the strong arbitrage ``sid`` would write into its target slot."""
    _check_strong_id(sid)
    _, a, b, sign = STRONG_RULES[sid]
    return n[a] + sign * n[b]


def apply_strong(sid: int, n: Sequence[int]) -> tuple:
    _check_strong_id(sid)
    t, a, b, sign = STRONG_RULES[sid]
    out = list(n)
    out[t] = n[a] + sign * n[b]
    return tuple(out)


def apply_weak(wid: int, n: Sequence[int]) -> Tuple[tuple, bool]:
    if wid not in WEAK_TO_STRONG:
        raise ValueError("weak arbitrage id out of range: %r" % (wid,))
    sid, direction = WEAK_TO_STRONG[wid]
    t, a, b, sign = STRONG_RULES[sid]
    new = n[a] + sign * n[b]
    if (new - n[t]) * direction > 0:
        out = list(n)
        out[t] = new
        return tuple(out), True
    return tuple(n), False


def apply_chain(chain: Chain, n: Sequence[int]) -> Tuple[tuple, List[Step]]:
    state = tuple(n)
    trace = []
    for i in chain.ids:
        if chain.flavor == WEAK:
            state, active = apply_weak(i, state)
        else:
            new = apply_strong(i, state)
            active = new != state
            state = new
        trace.append(Step(i, active, state))
    return state, trace


def run_chain(chain: Chain, n: Sequence[int]) -> tuple:
    return apply_chain(chain, n)[0]


def strong_to_weak(chain: Chain, n0: Sequence[int]) -> Chain:
    if chain.flavor != STRONG:
        raise ValueError("expected a strong chain")
    state = tuple(n0)
    out = []
    for sid in chain.ids:
        t = STRONG_RULES[sid][0]
        up, down = STRONG_TO_WEAK[sid]
        out.append(down if strong_value(sid, state) < state[t] else up)
        state = apply_strong(sid, state)
    return Chain(WEAK, out)


def weak_to_strong(chain: Chain, n0: Sequence[int]) -> Chain:
    """Strong chain with the same outcome; inactive weak steps are dropped."""
    if chain.flavor != WEAK:
        raise ValueError("expected a weak chain")
    state = tuple(n0)
    out = []
    for wid in chain.ids:
        state, active = apply_weak(wid, state)
        if active:
            out.append(WEAK_TO_STRONG[wid][0])
    return Chain(STRONG, out)


# Rate-level simulation, independent of the exponent encoding above.

def apply_weak_rates(wid: int, r: RateEnsemble) -> Tuple[RateEnsemble, bool]:
    x, y, z = WEAK_NAMES[wid - 1]
    mediated = r.rate(x, z) * r.rate(z, y)
    if mediated > r.rate(x, y):
        return r.with_rate(x, y, mediated), True
    return r, False


def apply_strong_rates(sid: int, r: RateEnsemble) -> RateEnsemble:
    x, y, z = STRONG_NAMES[sid - 1]
    return r.with_rate(x, y, r.rate(x, z) * r.rate(z, y))


def run_chain_rates(chain: Chain, r: RateEnsemble) -> RateEnsemble:
    for i in chain.ids:
        if chain.flavor == WEAK:
            r, _ = apply_weak_rates(i, r)
        else:
            r = apply_strong_rates(i, r)
    return r

