#!/usr/bin/env python
"""
Command-line front end. Only this module writes to standard output; the
libraries log to stderr through the 'main' logger.

Exit codes: 0 success, 1 usage, 2 domain error, 3 oracle verification failed,
4 output file could not be written.
"""
from utils import *
from arguments import get_config
from bell import CorrelationVector, all_measures, classify, random_physical
from oracle import verify_closed_form, passed
from decoherence import trajectory, trajectory_frame, analytic_event_times, reaches_axis
from isosurface import (
    extract_level_surface, export_obj, export_csv, convexity_witness, MeshExportError,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_UNVERIFIED, EXIT_IO = range(5)


def dumps(payload):
    """ Indented JSON; floats in repr form, which parses back to the same double. """
    return json.dumps(payload, indent=2) + '\n'

def to_csv(df):
    return df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')

def emit(text, out=None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as e:
        raise MeshExportError(f'cannot write {out}: {e}') from e
    notice('wrote %s', out)


def state_record(c):
    c = CorrelationVector(*c)
    record = dict(c1=c.c1, c2=c.c2, c3=c.c3)
    record.update(all_measures(c).to_dict())
    record.update(classify(c).to_dict())
    return record

def cmd_measures(args):
    record = state_record(args.c)
    if args.format == 'csv':
        record['dominant_vertex'] = '{}{}'.format(*record['dominant_vertex'])
        emit(to_csv(pd.DataFrame([record])))
    else:
        emit(dumps(record))
    return EXIT_OK

def cmd_classify(args):
    c = CorrelationVector(*args.c)
    emit(dumps(dict(c1=c.c1, c2=c.c2, c3=c.c3, **classify(c).to_dict())))
    return EXIT_OK

def cmd_trajectory(args):
    samples = trajectory(args.initial, args.channel, args.gamma, args.t_max, args.steps)
    events = analytic_event_times(args.initial, args.channel, args.gamma)
    if args.format == 'json':
        text = dumps(dict(samples=[s.to_dict() for s in samples],
                          events=[e.to_dict() for e in events],
                          reaches_axis=reaches_axis(args.initial, args.channel, args.gamma)))
    else:
        events_df = pd.DataFrame([e.to_dict() for e in events],
                                 columns=['kind', 't', 'c1', 'c2', 'c3'])
        text = to_csv(trajectory_frame(samples)) + '\n' + to_csv(events_df)
    emit(text, args.out)
    return EXIT_OK

def cmd_isosurface(args):
    mesh = extract_level_surface(args.field, args.level, args.resolution, args.refine_tol)
    summary = mesh.summary()
    if args.out:
        fmt = args.format or ('csv' if Path(args.out).suffix.lower() == '.csv' else 'obj')
        (export_csv if fmt == 'csv' else export_obj)(mesh, args.out)
        summary.update(out=str(args.out), format=fmt)
    emit(dumps(summary))
    return EXIT_OK

def cmd_verify_oracle(args):
    if args.c is not None:
        states = [args.c]
    else:
        states = random_physical(np.random.default_rng(args.seed), args.random)
    report = verify_closed_form(states, args.grid, not args.no_refine,
                                povm_trials=args.povm_trials, seed=args.seed)
    ok = passed(report)
    emit(dumps(dict(states=report.to_dict(orient='records'),
                    max_gap=float(report.gap.max()), passed=ok)))
    return EXIT_OK if ok else EXIT_UNVERIFIED

def cmd_convexity(args):
    report = convexity_witness(args.field, args.trials, args.seed, args.gap_tol)
    emit(dumps(report.summary()))
    return EXIT_OK


COMMANDS = {
    'measures': cmd_measures,
    'classify': cmd_classify,
    'trajectory': cmd_trajectory,
    'isosurface': cmd_isosurface,
    'verify-oracle': cmd_verify_oracle,
    'convexity': cmd_convexity,
}


def main(argv=None) -> int:
    parser = get_config()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    set_log_level(args.log_level)
    set_log_file(args.log_file)
    debug('arguments: %s', kwds_str(**vars(args)))
    try:
        return COMMANDS[args.command](args)
    except DomainError as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_DOMAIN
    except MeshExportError as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
