import numpy as np
import torch
from Inference import chebyshev
from Models.params import ClfSpec, TunableParams
from Utils import generator
from Utils import load
from curves import bias_curve

DISCREPANCY_TOL = 1e-10


def run(args):
    ## Random Seed ##
    torch.manual_seed(args.seed)

    ## Parameters ##
    scheme = load.schemes(args.scheme)[0]
    if args.angles:
        x = TunableParams(np.array(args.angles), scheme)
    elif args.random:
        x = next(generator.random_params(scheme, args.L, 1, torch.Generator().manual_seed(args.seed)))
    else:
        x = chebyshev.clf_point(ClfSpec(scheme, args.L))
    print('Evaluating {} on {} theta points.'.format(x, args.theta_points))

    ## Compare ##
    curve = bias_curve(x, generator.theta_grid(args.theta_points), args.fidelity)
    discrepancy = curve['abs_diff'].iloc[-1]
    print("Maximum discrepancy between circuit and series: {:.3e}".format(discrepancy))
    if discrepancy > DISCREPANCY_TOL:
        print("WARNING: discrepancy exceeds {:.0e}.".format(DISCREPANCY_TOL))

    ## Save Results ##
    print('Saving results.')
    curve.to_csv(args.out, index=False, lineterminator='\n')
    return 0
