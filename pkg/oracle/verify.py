from utils import *
from bell.state import CorrelationVector
from bell.measures import binary_entropy
from . import config
from .measurement import minimize_conditional_entropy
from .povm import povm_sanity_scan


def closed_form_min_entropy(c):
    """ H2((1 + max|c_j|) / 2), the minimum the oracle should reproduce. """
    return binary_entropy((1 + min(CorrelationVector(*c).c_max, 1.)) / 2)

def verify_closed_form(states, grid_resolution=config.gridResolution, refine=True,
                       povm_trials=0, povm_outcomes=4, seed=config.defaultSeed):
    """ Oracle minimum vs closed form for each state, one row per state. """
    rows = []
    for i, c in enumerate(progress(states, desc='oracle')):
        c = CorrelationVector(*map(float, c))
        closed = closed_form_min_entropy(c)
        res = minimize_conditional_entropy(c, grid_resolution, refine)
        row = dict(c1=c.c1, c2=c.c2, c3=c.c3,
                   closed_form=closed,
                   oracle=res.min_entropy,
                   gap=abs(res.min_entropy - closed))
        if povm_trials:
            povm = povm_sanity_scan(c, povm_trials, povm_outcomes, seed=seed + i)
            row.update(povm=povm, povm_gain=res.min_entropy - povm)
        rows.append(row)
    df = pd.DataFrame(rows)
    if len(df):
        notice('oracle vs closed form over %d states: max gap %.3g', len(df), df.gap.max())
    return df

def passed(report, gap_tol=config.oracleGapTol, povm_slack=config.povmSlack):
    ok = bool((report.gap <= gap_tol).all())
    if 'povm_gain' in report:
        ok &= bool((report.povm_gain <= povm_slack).all())
    return ok
