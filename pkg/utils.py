# %%
import os
import re
import sys
import json
import time
import enum
import math
import atexit
import logging
import itertools
import numpy as np
import pandas as pd
from typing import *
from pathlib import Path
import dataclasses
from dataclasses import dataclass
from functools import wraps, partial
from collections import defaultdict
from tqdm import tqdm, trange
from config import DEBUG, PROGRESS

np.set_printoptions(precision=6)

logger = logging.getLogger('main')

NOTICE = 22
logging.addLevelName(NOTICE, "NOTICE")

debug = logger.debug
info = logger.info
warn = logger.warning

def notice(msg, *args, **kwds):
    logger.log(NOTICE, msg, *args, **kwds)

def set_log_level(level):
    level = level.upper() if isinstance(level, str) else level
    logger.setLevel(level)
    logging.basicConfig(
        format='%(levelname)s: %(message)s',
        level=level)

def set_log_file(log_file):
    if log_file is None:
        return
    open(log_file, 'w').close()
    handler = logging.FileHandler(log_file)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    logger.addHandler(handler)


class DomainError(ValueError):
    """ An input outside the mathematical domain of an operation. """


def fmt_float(x):
    """ 17 significant digits: round-trip safe for doubles. """
    return '%.17g' % x

FLOAT_FORMAT = '%.17g'

def kwds_str(**kwds):
    return ', '.join(f'{k}={v}' for k, v in kwds.items())

def progress(iterable, **kwds):
    return tqdm(iterable, file=sys.stderr, disable=not PROGRESS, **kwds)


class Profile:
    debug_counts, debug_times = defaultdict(int), defaultdict(float)

    @classmethod
    def print_debug_exit(cls):
        if not cls.debug_times:
            return
        lines = ['{}  COUNT --- TIME COST'.format('-' * 47)]
        for name, _ in sorted(cls.debug_times.items(), key=lambda x: -x[1]):
            lines.append(f"{name:<45} : {cls.debug_counts[name]:>6} {cls.debug_times[name]:>10.2f} ms")
        logger.debug('\n'.join(lines))

    def __init__(self, name=''):
        self.name = name

    def __enter__(self):
        self.st = time.time()

    def __exit__(self, *_):
        et = (time.time()-self.st)*1000.
        self.debug_counts[self.name] += 1
        self.debug_times[self.name] += et

def timeit(fn, name=None):
    @wraps(fn)
    def wrapper(*args, **kwds):
        with Profile(name or fn.__qualname__):
            return fn(*args, **kwds)
    return wrapper

if not DEBUG:
    timeit = lambda fn: fn
else:
    atexit.register(Profile.print_debug_exit)
