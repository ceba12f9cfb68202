import argparse
import json
import os
import sys
from Expansions import series
from Experiments import bias_curve
from Experiments import validate
from Experiments import vrf_curve


def build_parser():
    parser = argparse.ArgumentParser(prog='elfkit', description='Engineered Likelihood Functions')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    ## Variance Reduction Factor Curves ##
    curve = subparsers.add_parser('vrf-curve', help='ELF and CLF variance reduction factor curves')
    circuit_args = curve.add_argument_group('circuit')
    circuit_args.add_argument('--scheme', type=str, default='both', choices=['af', 'ab', 'both'],
                              help='circuit scheme (default: both)')
    circuit_args.add_argument('--L', type=int, default=1,
                              help='number of circuit layers (default: 1)')
    circuit_args.add_argument('--fidelity', type=float, default=1.0,
                              help='fidelity f scaling the bias (default: 1.0)')
    prior_args = curve.add_argument_group('prior')
    prior_args.add_argument('--sigma', type=float, nargs='+', default=[0.5, 0.2, 0.1, 0.05],
                            help='list of prior standard deviations (default: 0.5 0.2 0.1 0.05)')
    prior_args.add_argument('--mu-points', type=int, default=201,
                            help='number of prior means in (0, pi) (default: 201)')
    optimizer_args = curve.add_argument_group('optimizer')
    optimizer_args.add_argument('--restarts', type=int, default=4,
                                help='number of uniform random starts (default: 4)')
    optimizer_args.add_argument('--sweeps', type=int, default=50,
                                help='maximum number of coordinate sweeps per start (default: 50)')
    optimizer_args.add_argument('--seed', type=int, default=1,
                                help='random seed (default: 1)')
    curve.add_argument('--out', type=str, required=True,
                       help='path of the CSV file to write')
    curve.add_argument('--verbose', action='store_true',
                       help='show progress bars')

    ## Bias Curves ##
    bias = subparsers.add_parser('bias-curve', help='circuit bias against its cosine series')
    circuit_args = bias.add_argument_group('circuit')
    circuit_args.add_argument('--scheme', type=str, default='af', choices=['af', 'ab'],
                              help='circuit scheme (default: af)')
    circuit_args.add_argument('--L', type=int, default=1,
                              help='number of circuit layers (default: 1)')
    circuit_args.add_argument('--angles', type=float, nargs='*', default=[],
                              help='tunable angles x_1 ... x_2L (default: Chebyshev angles)')
    circuit_args.add_argument('--random', action='store_true',
                              help='draw seeded random angles instead of Chebyshev angles')
    circuit_args.add_argument('--fidelity', type=float, default=1.0,
                              help='fidelity f scaling the bias (default: 1.0)')
    bias.add_argument('--theta-points', type=int, default=257,
                      help='number of theta values in [0, pi] (default: 257)')
    bias.add_argument('--seed', type=int, default=1,
                      help='random seed (default: 1)')
    bias.add_argument('--out', type=str, required=True,
                      help='path of the CSV file to write')
    bias.add_argument('--verbose', action='store_true',
                      help='show progress bars')

    ## Validation ##
    check = subparsers.add_parser('validate', help='run the validation suites')
    check.add_argument('--level', type=str, default='fast', choices=['fast', 'full'],
                       help='validation depth (default: fast)')
    check.add_argument('--suites', type=str, nargs='+', default=list(validate.SUITES),
                       choices=list(validate.SUITES),
                       help='suites to run (default: all)')
    check.add_argument('--json', type=str, default='',
                       help='path of the JSON report (default: none)')
    check.add_argument('--verbose', action='store_true',
                       help='show progress bars')
    return parser


def check_args(parser, args):
    r"""Rejects configurations the experiments cannot run with (exit code 2).
    """
    if not 1 <= getattr(args, 'L', 1) <= series.NUMERIC_MAX:
        parser.error('--L must lie in 1..{}'.format(series.NUMERIC_MAX))
    if not 0.0 <= getattr(args, 'fidelity', 1.0) <= 1.0:
        parser.error('--fidelity must lie in [0, 1]')
    if args.command == 'vrf-curve':
        if any(not s > 0 for s in args.sigma):
            parser.error('--sigma values must be positive')
        if args.mu_points < 1 or args.restarts < 0 or args.sweeps < 1:
            parser.error('--mu-points and --sweeps must be positive, --restarts nonnegative')
    if args.command == 'bias-curve':
        if args.angles and len(args.angles) != 2 * args.L:
            parser.error('--angles needs exactly 2L = {} values'.format(2 * args.L))
        if args.theta_points < 2:
            parser.error('--theta-points must be at least 2')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    check_args(parser, args)

    ## Save Args ##
    out = getattr(args, 'out', '') or getattr(args, 'json', '')
    if out:
        result_dir = os.path.dirname(os.path.abspath(out))
        os.makedirs(result_dir, exist_ok=True)
        with open(os.path.join(result_dir, 'args.json'), 'w') as f:
            json.dump(args.__dict__, f, sort_keys=True, indent=4)

    ## Run Experiment ##
    if args.command == 'vrf-curve':
        return vrf_curve.run(args)
    if args.command == 'bias-curve':
        return bias_curve.run(args)
    if args.command == 'validate':
        return validate.run(args)


if __name__ == '__main__':
    sys.exit(main())
