"""Randomized algebra inputs shared by several test modules.

Three generation styles: "zero" leaves the correction map empty,
"random" draws everything freely, and "guided" picks correction
targets so that the character identity for invariance holds, which
makes a useful fraction of the outputs genuinely PBW.

All correction terms within one spec share a single group letter.
The closed-form PBW conditions constrain each source letter's
coefficients separately; with several source letters, second-layer
corrections from different sources can land on the same final letter
and cancel accidentally, so the rewriting may be confluent even when
the per-letter conditions fail.  One shared letter removes that
collision channel and keeps the equivalence exact.
"""

from __future__ import annotations

import math
import random

from qdrinfeld.algebra import AlgebraSpec
from qdrinfeld.groups import AbelianGroup, Character
from qdrinfeld.scalar import Scalar, ScalarContext

GROUP_CHOICES = ((2,), (3,), (4,), (2, 2))

STYLES = ("zero", "random", "guided", "guided")


def random_spec(rng: random.Random, style: str = "random") -> AlgebraSpec:
    orders = rng.choice(GROUP_CHOICES)
    group = AbelianGroup(orders)
    n = rng.randint(2, 3)
    conductor = math.lcm(group.exponent, 6)
    ctx = ScalarContext(conductor=conductor)

    chars = tuple(
        Character(group, tuple(rng.randrange(o) for o in orders)) for _ in range(n)
    )

    def root() -> Scalar:
        return Scalar.zeta(ctx, conductor, rng.randrange(conductor))

    if rng.random() < 0.35:
        q = {}
    else:
        q = {
            (i, j): root()
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.8
        }

    kappa: dict = {}
    if style != "zero":
        g = group.element(tuple(rng.randrange(o) for o in orders))
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() > 0.6:
                    continue
                if style == "guided":
                    target = chars[i] * chars[j]
                    matches = [r for r in range(n) if chars[r] == target]
                    if not matches:
                        continue
                    r = rng.choice(matches)
                else:
                    r = rng.randrange(n)
                kappa[(i, j)] = ((r, g, root()),)

    return AlgebraSpec(ctx, group, chars, q, kappa, name=f"rand-{style}")


def corpus(count: int, seed: int = 20260814) -> list[AlgebraSpec]:
    rng = random.Random(seed)
    return [random_spec(rng, STYLES[t % len(STYLES)]) for t in range(count)]
