from tqdm import tqdm
import numpy as np
from Experiments.theory import clf
from Experiments.theory import combinatorics
from Experiments.theory import expansions
from Experiments.theory import inference
from Experiments.theory import optimality
from Utils import metrics
from Utils.errors import ElfError

SUITES = {
    'combinatorics' : combinatorics,
    'expansions' : expansions,
    'inference' : inference,
    'chebyshev' : clf,
    'optimality' : optimality,
}


def run(args):
    ## Run Suites ##
    rows = []
    for name in tqdm(args.suites, disable=not args.verbose):
        print('Running {} checks ({}).'.format(name, args.level))
        try:
            rows.extend(SUITES[name].run(args.level))
        except ElfError as error:
            rows.append([name, 'suite raised', False, np.nan, '{}: {}'.format(type(error).__name__, error)])

    ## Display Results ##
    report = metrics.report(rows)
    print("Validation results:\n", report.to_string(index=False))
    if args.json:
        print('Saving results.')
        report.to_json(args.json, orient='records', indent=4)

    failed = metrics.failures(report)
    if len(failed) > 0:
        for _, row in failed.iterrows():
            print("FAILED: {} / {} ({})".format(row['suite'], row['check'], row['detail']))
        return 1
    print("All {} checks passed.".format(len(report)))
    return 0
