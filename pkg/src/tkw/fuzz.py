"""Randomized invariance checks along seeded move walks."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .g2 import phi2
from .gauss import LinearGaussDiagram, serialize
from .gbar import abelianize, compare, phibar
from .moves import random_diagram, walk_with_moves

__all__ = ["Trajectory", "trajectories", "check_phi2", "check_phibar", "run_fuzz"]


@dataclass(frozen=True)
class Trajectory:
    iteration: int
    diagrams: tuple[LinearGaussDiagram, ...]
    moves: tuple


def trajectories(seed: int, iters: int, max_moves: int, max_chords: int = 8):
    """Yield the trajectories of a fuzz run; deterministic in the arguments.

    Each start diagram has at most ``max_chords`` chords; half of them carry a
    planted R3 triangle.  Walk lengths are drawn from ``1..max_moves``.
    """
    for i in range(iters):
        rng = random.Random(f"{seed}/{i}")
        start = random_diagram(rng, max_chords, plant_r3=rng.random() < 0.5)
        steps = rng.randint(1, max_moves) if max_moves > 0 else 0
        diagrams, moves = walk_with_moves(start, steps, rng.randrange(2**32))
        yield Trajectory(i, tuple(diagrams), tuple(moves))


def check_phi2(traj: Trajectory):
    """Return ``(step, reason)`` for the first violation, else ``None``."""
    ref = phi2(traj.diagrams[0])
    for k, d in enumerate(traj.diagrams[1:], start=1):
        got = phi2(d)
        if got != ref:
            return k, f"phi2 changed from {ref} to {got}"
    return None


def check_phibar(traj: Trajectory, budget: int | None = None):
    words = [phibar(d) for d in traj.diagrams]
    ref = abelianize(words[0])
    for k in range(1, len(words)):
        if abelianize(words[k]) != ref:
            return k, f"abelian image changed from {ref} to {abelianize(words[k])}"
        verdict = compare(words[k - 1], words[k], budget)
        if verdict.verdict != "equal":
            return k, f"compare gave {verdict.verdict} after {verdict.budget_spent} words"
    return None


def run_fuzz(
    seed: int, iters: int, max_moves: int, scheme: str = "phi2",
    budget: int | None = None, max_chords: int = 8,
) -> dict:
    """Run the invariance property for ``scheme`` and return a report dict."""
    if scheme not in ("phi2", "phibar"):
        raise ValueError(f"unknown scheme {scheme!r}")
    counts: Counter = Counter()
    steps = 0
    failure = None
    for traj in trajectories(seed, iters, max_moves, max_chords):
        counts.update(mv.schema.name for mv in traj.moves)
        if scheme == "phi2":
            bad = check_phi2(traj)
        else:
            bad = check_phibar(traj, budget)
        if bad is not None:
            step, reason = bad
            steps += step
            failure = {
                "iteration": traj.iteration,
                "step": step,
                "reason": reason,
                "trajectory": [serialize(d) for d in traj.diagrams[: step + 1]],
                "reproduce": (
                    f"tkw fuzz --seed {seed} --iters {traj.iteration + 1} "
                    f"--max-moves {max_moves} --scheme {scheme}"
                ),
            }
            break
        steps += len(traj.moves)
    return {
        "seed": seed,
        "iters": iters,
        "max_moves": max_moves,
        "scheme": scheme,
        "steps_checked": steps,
        "moves": dict(sorted(counts.items())),
        "status": "fail" if failure else "pass",
        "counterexample": failure,
    }
