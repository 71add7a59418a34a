"""Linearised swing dynamics about the synchronous operating point.

Each generator's phase deviation obeys

    d2delta/dt2 = -gamma * ddelta/dt - P @ delta + u(t)

where ``u`` is a rectangular acceleration pulse on one generator standing in
for a short disturbance.  A mode of ``P`` with eigenvalue ``a > 0`` is a
damped oscillator; ``a < 0`` grows exponentially.  Integration is fixed-step
classical RK4 so output is deterministic.
"""

import csv
import enum
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import EmptyWindow, InputError

OVERFLOW = 1e12


@dataclass(frozen=True)
class Pulse:
    target: int = 0
    magnitude: float = 1.0
    t_on: float = 3.0
    t_off: float = 3.1


@dataclass(frozen=True)
class SimConfig:
    gamma: float = 0.2
    dt: float = 1e-3
    t_end: float = 13.0
    pulse: Pulse = Pulse()

    def __post_init__(self):
        if not self.dt > 0:
            raise InputError("dt must be positive")
        if not self.pulse.t_on < self.pulse.t_off <= self.t_end:
            raise InputError("need t_on < t_off <= t_end")
        if not np.isfinite(self.gamma):
            raise InputError("gamma must be finite")

    def scaled_pulse(self, factor):
        return replace(self, pulse=replace(self.pulse, magnitude=self.pulse.magnitude * factor))


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    delta: np.ndarray  # (T, n) rad
    omega: np.ndarray  # (T, n) rad/s
    accel: np.ndarray  # (T, n) rad/s^2
    config: SimConfig
    diverged_at: Optional[float] = None

    @property
    def final_state(self):
        return np.concatenate([self.delta[-1], self.omega[-1]])


def _forcing(cfg, n, t, dt):
    u = np.zeros(n)
    eps = 1e-9 * dt
    if cfg.pulse.t_on - eps <= t < cfg.pulse.t_off - eps:
        u[cfg.pulse.target] = cfg.pulse.magnitude
    return u


def simulate(p, cfg=SimConfig()):
    """Integrate from zero deviation; stops early if the state passes 1e12."""
    p = np.asarray(p, dtype=float)
    n = p.shape[0]
    if p.shape != (n, n):
        raise InputError("coupling matrix must be square")
    if not 0 <= cfg.pulse.target < n:
        raise InputError(f"pulse target {cfg.pulse.target} outside 0..{n - 1}")
    dt, gamma = cfg.dt, cfg.gamma
    steps = int(round(cfg.t_end / dt))

    def rhs(d, w, u):
        return w, -gamma * w - p @ d + u

    delta = np.zeros((steps + 1, n))
    omega = np.zeros((steps + 1, n))
    d = np.zeros(n)
    w = np.zeros(n)
    diverged_at = None
    last = steps
    for i in range(steps):
        t = i * dt
        # one forcing value per step, taken at the midpoint, so a pulse edge
        # on a step boundary does not degrade the RK4 order
        u = _forcing(cfg, n, t + dt / 2, dt)
        k1d, k1w = rhs(d, w, u)
        k2d, k2w = rhs(d + dt / 2 * k1d, w + dt / 2 * k1w, u)
        k3d, k3w = rhs(d + dt / 2 * k2d, w + dt / 2 * k2w, u)
        k4d, k4w = rhs(d + dt * k3d, w + dt * k3w, u)
        d = d + dt / 6 * (k1d + 2 * k2d + 2 * k3d + k4d)
        w = w + dt / 6 * (k1w + 2 * k2w + 2 * k3w + k4w)
        delta[i + 1] = d
        omega[i + 1] = w
        if not (np.abs(d).max() < OVERFLOW and np.abs(w).max() < OVERFLOW):
            diverged_at = (i + 1) * dt
            last = i + 1
            break

    times = np.arange(last + 1) * dt
    delta, omega = delta[:last + 1], omega[:last + 1]
    forcing = np.array([_forcing(cfg, n, t, dt) for t in times])
    accel = -gamma * omega - delta @ p.T + forcing
    return Trajectory(times, delta, omega, accel, cfg, diverged_at)


def ripple_metric(traj, window_start=None):
    """Largest per-generator peak-to-peak acceleration after ``window_start``.

    Acceleration is proportional to rotor torque, so this is a torque-ripple
    proxy.  ``window_start`` defaults to the end of the pulse.
    """
    pulse = traj.config.pulse
    if window_start is None:
        window_start = pulse.t_off
    if not pulse.t_off - 1e-12 <= window_start < traj.config.t_end:
        raise EmptyWindow(f"window start {window_start} outside [{pulse.t_off}, {traj.config.t_end})")
    mask = traj.times >= window_start - 1e-9 * traj.config.dt
    if mask.sum() < 2:
        raise EmptyWindow("fewer than two samples in window")
    return float(np.ptp(traj.accel[mask], axis=0).max())


class Response(enum.Enum):
    DECAYED = "Decayed"
    OSCILLATING = "Oscillating"
    DIVERGED = "Diverged"


DECAY_FRACTION = 0.01
TAIL_FRACTION = 0.25


def divergence_detect(traj):
    """Classify the post-pulse response.

    The envelope is ``max_i |omega_i(t)|`` after the pulse.  Decayed: over
    the final quarter of the run it stays below 1% of its peak.  Diverged:
    the overflow guard tripped, or over the final quarter the envelope rises
    strictly and ends above every earlier value.  Otherwise Oscillating.
    """
    if traj.diverged_at is not None:
        return Response.DIVERGED
    cfg = traj.config
    post = traj.times >= cfg.pulse.t_off - 1e-9 * cfg.dt
    env = np.abs(traj.omega[post]).max(axis=1)
    peak = env.max() if env.size else 0.0
    if peak == 0.0:
        return Response.DECAYED
    tail_start = traj.times[-1] - TAIL_FRACTION * (traj.times[-1] - traj.times[0])
    tail = traj.times[post] >= tail_start
    env_tail = env[tail]
    if np.all(np.diff(env_tail) > 0) and env_tail[-1] > env[~tail].max(initial=0.0):
        return Response.DIVERGED
    if env_tail.max() < DECAY_FRACTION * peak:
        return Response.DECAYED
    return Response.OSCILLATING


def write_trajectory_csv(traj, fh):
    n = traj.delta.shape[1]
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["time"] + [f"delta_{i}" for i in range(n)] + [f"omega_{i}" for i in range(n)]
               + [f"accel_{i}" for i in range(n)])
    for row in np.column_stack([traj.times, traj.delta, traj.omega, traj.accel]):
        w.writerow([format(x, ".12g") for x in row])
