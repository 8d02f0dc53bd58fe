import re
import sys
import argparse
from config import DEBUG
from oracle import config as oracle_config
from isosurface import config as surface_config
from decoherence import config as channel_config

FLOAT = r'[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
TRIPLE = re.compile(r'({0}),({0}),({0})'.format(FLOAT))

CHANNELS = ['phase', 'bit', 'bitphase']
FIELDS = ['discord', 'classical', 'mutual_info', 'concurrence', 'eof']


class CliParser(argparse.ArgumentParser):
    """ Usage errors exit with status 1; status 2 is reserved for domain errors. """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f'{self.prog}: error: {message}\n')


def triple(s):
    """ 'c1,c2,c3' with plain decimals, no whitespace. """
    m = TRIPLE.fullmatch(s)
    if m is None:
        raise argparse.ArgumentTypeError(f'expected three comma-separated numbers, got {s!r}')
    return tuple(float(x) for x in m.groups())

def at_least(n):
    def check(s):
        v = int(s)
        if v < n:
            raise argparse.ArgumentTypeError(f'must be >= {n}, got {v}')
        return v
    check.__name__ = 'int'
    return check


def get_config():
    """
    The command-line parser. Every subcommand accepts:
        -L, --log_level <level>
            logging level of the 'main' logger (default NOTICE, DEBUG when DEBUG=1)
        --log-file <path>
            also write the log to this file

    Subcommands:
        measures       I, C, D, concurrence, EoF and classification of one state
        classify       physical / separable / classical flags and the dominant Bell vertex
        trajectory     flip-channel trajectory with its analytic events
        isosurface     level surface of a measure, optionally exported as OBJ or CSV
        verify-oracle  numerical minimization of the conditional entropy vs the closed form
        convexity      midpoint convexity test of a measure over random state pairs
    """
    common = CliParser(add_help=False)
    common.add_argument("-L", "--log_level", "--log-level", type=str,
                        default='DEBUG' if DEBUG else 'NOTICE', help='level of logging')
    common.add_argument("--log-file", help="also write the log to this file")

    parser = CliParser(prog='bdiscord', description='discord geometry of Bell-diagonal states',
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('measures', parents=[common], help='correlation measures of a state')
    p.add_argument("--c", type=triple, required=True, help="correlation triple c1,c2,c3")
    p.add_argument("--format", choices=['json', 'csv'], default='json')

    p = sub.add_parser('classify', parents=[common], help='classify a state')
    p.add_argument("--c", type=triple, required=True, help="correlation triple c1,c2,c3")

    p = sub.add_parser('trajectory', parents=[common], help='flip-channel trajectory')
    p.add_argument("--initial", type=triple, required=True, help="initial correlation triple")
    p.add_argument("--channel", choices=CHANNELS, default='phase')
    p.add_argument("--gamma", type=float, default=channel_config.defaultRate, help="flip rate")
    p.add_argument("--t-max", type=float, default=channel_config.defaultTimeSpan, help="end of the time span")
    p.add_argument("--steps", type=at_least(channel_config.minSteps), default=channel_config.defaultSteps, help="number of samples (>= 2)")
    p.add_argument("--format", choices=['csv', 'json'], default='csv')
    p.add_argument("--out", help="write the table to this file instead of stdout")

    p = sub.add_parser('isosurface', parents=[common], help='level surface of a measure')
    p.add_argument("--field", choices=FIELDS, default='discord')
    p.add_argument("--level", type=float, required=True, help="level in bits")
    p.add_argument("--resolution", type=int, default=surface_config.defaultResolution, help="grid points per axis (odd, >= 9)")
    p.add_argument("--refine-tol", type=float, default=surface_config.refineTol, help="bisection residual in bits")
    p.add_argument("--out", help="mesh file to write")
    p.add_argument("--format", choices=['obj', 'csv'],
                   help="mesh file format (default: from the --out suffix, else obj)")

    p = sub.add_parser('verify-oracle', parents=[common], help='check the closed-form classical correlation')
    states = p.add_mutually_exclusive_group(required=True)
    states.add_argument("--c", type=triple, help="correlation triple c1,c2,c3")
    states.add_argument("--random", type=at_least(1), metavar='N', help="number of random physical states")
    p.add_argument("--seed", type=int, default=oracle_config.defaultSeed, help="seed of the random states and POVM scans")
    p.add_argument("--grid", type=int, default=oracle_config.gridResolution, help="points of the spherical search grid")
    p.add_argument("--no-refine", action='store_true', help="skip the local refinement")
    p.add_argument("--povm-trials", type=int, default=0, help="random POVMs tried per state")

    p = sub.add_parser('convexity', parents=[common], help='midpoint convexity test')
    p.add_argument("--field", choices=FIELDS, default='discord')
    p.add_argument("--trials", type=at_least(1), default=surface_config.defaultTrials, help="random state pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gap-tol", type=float, default=surface_config.convexityGapTol, help="smallest midpoint gap counted")

    return parser
