"""
Exact flip-channel trajectories and their nonanalytic events.

Along a trajectory the two decaying components scale as s(t) = exp(-Gamma t)
while the preserved one stays put, so every quantity is a function of s alone:

    discord kink:  max_decaying |c_j| * s = |c_preserved|   (c_max switches)
    sudden death:  s * (sum_decaying |c_j|) + |c_preserved| = 1   (enters O)

For edge-type initial conditions (largest decaying magnitude 1, the other equal
to the preserved one) these have the closed forms s* = |c_p| and
s* = (1 - |c_p|) / (1 + |c_p|); otherwise they are bracketed and bisected in s.
"""
from utils import *
from scipy.optimize import bisect
from bell.state import CorrelationVector, check_physical
from bell.measures import CorrelationMeasures, all_measures, binary_entropy
from . import config
from .channel import FlipKind, ChannelParameterError, scale_components


class EventKind(enum.Enum):
    DISCORD_KINK = 'discord_kink'
    SUDDEN_DEATH = 'sudden_death'
    REACHED_AXIS = 'reached_axis'


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    c: CorrelationVector
    measures: CorrelationMeasures

    def to_dict(self):
        m = self.measures
        return dict(t=self.t, c1=self.c.c1, c2=self.c.c2, c3=self.c.c3,
                    I=m.mutual_info, C=m.classical, D=m.discord,
                    concurrence=m.concurrence, eof=m.eof)


@dataclass(frozen=True)
class TrajectoryEvent:
    kind: EventKind
    t: float
    c_at_event: CorrelationVector

    def to_dict(self):
        c = self.c_at_event
        return dict(kind=self.kind.value, t=self.t, c1=c.c1, c2=c.c2, c3=c.c3)


CSV_COLUMNS = ['t', 'c1', 'c2', 'c3', 'I', 'C', 'D', 'concurrence', 'eof']


def _check_rate(gamma):
    if gamma < 0:
        raise ChannelParameterError(f'rate {gamma} must be nonnegative')

@timeit
def trajectory(c0, kind, gamma=config.defaultRate, t_max=config.defaultTimeSpan,
               steps=config.defaultSteps):
    c0 = check_physical(c0)
    kind = FlipKind(kind)
    _check_rate(gamma)
    if steps < config.minSteps:
        raise DomainError(f'steps must be >= {config.minSteps}')
    if t_max < 0:
        raise ChannelParameterError(f't_max {t_max} must be nonnegative')
    samples = []
    for t in np.linspace(0, t_max, steps):
        c = scale_components(c0, kind, math.exp(-gamma * t))
        samples.append(TrajectorySample(float(t), c, all_measures(c)))
    return samples

def trajectory_frame(samples):
    return pd.DataFrame([s.to_dict() for s in samples], columns=CSV_COLUMNS)


# %% events

def _split(c0, kind):
    d = np.abs([c0[j] for j in kind.decaying])
    q = abs(c0[kind.preserved])
    return d, q

def is_edge_class(c0, kind, tol=config.edgeClassTol):
    d, q = _split(CorrelationVector(*c0), FlipKind(kind))
    return abs(d.max() - 1) <= tol and abs(d.min() - q) <= tol

def _root_in_scale(f):
    """ Root of f (increasing in s) inside (0, 1), or None. """
    f0, f1 = f(0.), f(1.)
    if not f0 < 0 < f1:
        return None
    return bisect(f, 0., 1., xtol=config.bisectTol)

def event_scales(c0, kind):
    """ Scale factors s* in (0, 1) at which each event happens. """
    c0 = CorrelationVector(*c0)
    kind = FlipKind(kind)
    d, q = _split(c0, kind)
    scales = {}
    if is_edge_class(c0, kind):
        if 0 < q < 1:
            scales[EventKind.DISCORD_KINK] = q
        if c0.l1_norm > 1 and q < 1:
            scales[EventKind.SUDDEN_DEATH] = (1 - q) / (1 + q)
    else:
        s = _root_in_scale(lambda s: d.max() * s - q)
        if s is not None:
            scales[EventKind.DISCORD_KINK] = s
        if c0.l1_norm > 1:
            s = _root_in_scale(lambda s: s * d.sum() + q - 1)
            if s is not None:
                scales[EventKind.SUDDEN_DEATH] = s
    return scales

def analytic_event_times(c0, kind, gamma=config.defaultRate):
    """
    Finite-time events, sorted by time. With gamma = 0 nothing moves and no
    event happens; the asymptotic approach to the axis is `reaches_axis`.
    """
    c0 = check_physical(c0)
    kind = FlipKind(kind)
    _check_rate(gamma)
    if gamma == 0:
        return []
    events = []
    for ev, s in event_scales(c0, kind).items():
        t = -math.log(s) / gamma
        if t > 0:
            events.append(TrajectoryEvent(ev, t, scale_components(c0, kind, s)))
    return sorted(events, key=lambda e: e.t)

def reaches_axis(c0, kind, gamma=config.defaultRate):
    """ True if the state only reaches the preserved axis as t -> infinity. """
    c0 = check_physical(c0)
    kind = FlipKind(kind)
    return gamma > 0 and any(c0[j] != 0 for j in kind.decaying)


# %% closed forms on the edge family (c1, -c3 c1, c3) under phase flips

def _check_unit_interval(**kwds):
    for k, v in kwds.items():
        if not 0 <= v <= 1:
            raise DomainError(f'{k} = {v} outside [0, 1]')

def trajectory_discord_closed_form(c1, c3):
    """ Discord on the edge family: frozen at 1 - H2((1+c3)/2) while c1 >= c3. """
    _check_unit_interval(c1=c1, c3=c3)
    return 1 - binary_entropy((1 + min(c1, c3)) / 2)

def trajectory_joint_entropy(c1, c3):
    """ The spectrum factorizes into (1 +- c1)/2 times (1 +- c3)/2. """
    _check_unit_interval(c1=c1, c3=c3)
    return binary_entropy((1 + c1) / 2) + binary_entropy((1 + c3) / 2)
