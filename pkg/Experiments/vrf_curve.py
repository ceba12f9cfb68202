import torch
from Utils import generator
from Utils import load
from Utils import metrics
from curves import vrf_curve


def run(args):
    ## Random Seed ##
    torch.manual_seed(args.seed)

    ## Grid ##
    schemes = load.schemes(args.scheme)
    mus = generator.mu_grid(args.mu_points)
    print('Computing {} curves for L={} over {} sigma values and {} mu points.'.format(
        '/'.join(str(s) for s in schemes), args.L, len(args.sigma), len(mus)))

    ## Optimize ##
    curve = vrf_curve(schemes, args.L, args.sigma, mus, args.restarts, args.sweeps,
                      args.seed, args.fidelity, args.verbose)

    ## Display Results ##
    summary = metrics.curve_summary(curve)
    print("Curve summary:\n", summary)
    below = int(summary['points below'].sum())
    if below > 0:
        print("WARNING: the engineered optimum falls below the Chebyshev baseline at {} grid points.".format(below))

    ## Save Results ##
    print('Saving results.')
    curve.to_csv(args.out, index=False, lineterminator='\n')
    return 0
