"""
Independent flip channels on both qubits.

Each qubit gets the Pauli flip sigma with probability p. On a Bell-diagonal
state this keeps the component paired with sigma and multiplies the other two
by s = (1 - 2p)^2. With a rate Gamma the scale is s = exp(-Gamma t); the matching per-qubit
flip probability is only derived for the density-matrix form.
"""
from utils import *
from bell.state import PAULI, I2, CorrelationVector, check_physical
from . import config


class FlipKind(enum.Enum):
    PHASE = 'phase'
    BIT = 'bit'
    BITPHASE = 'bitphase'

    @property
    def preserved(self):
        """ Index of the component the channel leaves unchanged. """
        return {FlipKind.BIT: 0, FlipKind.BITPHASE: 1, FlipKind.PHASE: 2}[self]

    @property
    def decaying(self):
        return tuple(j for j in range(3) if j != self.preserved)

    @property
    def pauli(self):
        return PAULI[self.preserved]


class ChannelParameterError(DomainError):
    pass


@dataclass(frozen=True)
class FlipChannel:
    kind: FlipKind
    p: Optional[float] = None
    gamma: Optional[float] = None
    t: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', FlipKind(self.kind))
        if self.p is not None:
            if self.gamma is not None or self.t is not None:
                raise ChannelParameterError('give either p or (gamma, t), not both')
            if not 0 <= self.p <= config.maxFlipProb:
                raise ChannelParameterError(f'flip probability {self.p} outside [0, 1/2]')
        else:
            if self.gamma is None or self.t is None:
                raise ChannelParameterError('channel needs p or both gamma and t')
            if self.gamma < 0 or self.t < 0:
                raise ChannelParameterError(
                    f'rate and time must be nonnegative ({kwds_str(gamma=self.gamma, t=self.t)})')

    @classmethod
    def from_probability(cls, kind, p):
        return cls(kind, p=p)

    @classmethod
    def from_rate(cls, kind, gamma, t):
        return cls(kind, gamma=gamma, t=t)

    @property
    def scale(self):
        if self.p is not None:
            return (1 - 2 * self.p) ** 2
        return math.exp(-self.gamma * self.t)


def scale_components(c, kind, s):
    kind = FlipKind(kind)
    c = list(c)
    for j in kind.decaying:
        c[j] *= s
    return CorrelationVector(*c)

def apply_channel(c, ch: FlipChannel):
    c = check_physical(c)
    return scale_components(c, ch.kind, ch.scale)


# %% matrix level

def _flip_probability(s):
    return (1 - math.sqrt(s)) / 2

def kraus_operators(kind, p):
    sigma = FlipKind(kind).pauli
    return [math.sqrt(1 - p) * I2, math.sqrt(p) * sigma]

def apply_channel_to_density_matrix(rho, ch: FlipChannel):
    """ The channel acting on each qubit independently, via Kraus operators. """
    p = ch.p if ch.p is not None else _flip_probability(ch.scale)
    ks = kraus_operators(ch.kind, p)
    out = np.zeros((4, 4), dtype=complex)
    for ka, kb in itertools.product(ks, repeat=2):
        k = np.kron(ka, kb)
        out += k @ rho @ k.conj().T
    return out
