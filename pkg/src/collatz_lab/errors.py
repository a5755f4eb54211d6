"""Exception types shared across the package."""

from __future__ import annotations


class NotOddError(ValueError):
    """An operation that requires an odd integer received an even one."""


class NotStandardMapError(ValueError):
    """An operation restricted to the 3n+1 map received a different map."""


class NotOnCycleError(RuntimeError):
    """An odd base element was not revisited while walking its odd successors.

    ``witness`` is the first odd value (different from the base) that was
    revisited, proving the walk fell into a cycle that excludes the base.
    ``witness is None`` means the odd-step budget ran out first, so the
    outcome is a cap, not a proof.
    """

    def __init__(self, base: int, witness: int | None, odd_steps: int):
        self.base = base
        self.witness = witness
        self.odd_steps = odd_steps
        if witness is not None:
            msg = (
                f"trajectory from {base} fell into a cycle through {witness} "
                f"after {odd_steps} odd steps; {base} is not a cycle element"
            )
        else:
            msg = f"no return to {base} within {odd_steps} odd steps (cap exhausted)"
        super().__init__(msg)

    def __reduce__(self):
        # keyword-style constructor args; needed to cross process boundaries
        return type(self), (self.base, self.witness, self.odd_steps)


class CapExhaustedError(RuntimeError):
    """A safety cap fired where every seed is required to be verified."""

    def __init__(self, seed: int, kind: str, limit: int):
        self.seed = seed
        self.kind = kind
        self.limit = limit
        super().__init__(f"seed {seed} exhausted the {kind} cap ({limit}) before descending")

    def __reduce__(self):
        return type(self), (self.seed, self.kind, self.limit)
