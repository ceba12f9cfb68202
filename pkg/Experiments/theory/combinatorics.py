import numpy as np
import torch
from Expansions import words
from Utils import generator
from Utils import metrics

SUITE = 'combinatorics'
LEVELS = {
    'fast' : {'max_n': 10, 'partition_alpha': 16, 'confluence': 1000, 'closure_L': 2},
    'full' : {'max_n': 13, 'partition_alpha': 16, 'confluence': 10000, 'closure_L': 3},
}


def run(level):
    config = LEVELS[level]
    rows = []

    ## Theta cardinalities against enumeration ##
    mismatches = 0
    for n in range(1, config['max_n'] + 1):
        for u in (0, 1):
            for v in (0, 1):
                for k in range(n + 1):
                    if len(words.enumerate_theta(n, u, k, v)) != words.theta_cardinality(n, u, k, v):
                        mismatches += 1
    rows.append(metrics.check(SUITE, 'theta cardinality', mismatches, 0, 'n <= {}'.format(config['max_n'])))

    ## Xi classes partition all strings ##
    deficit = sum(abs(sum(words.xi_cardinality(alpha, l) for l in range(alpha + 2)) - 2**alpha)
                  for alpha in range(1, config['partition_alpha'] + 1))
    rows.append(metrics.check(SUITE, 'xi partition', deficit, 0, 'alpha <= {}'.format(config['partition_alpha'])))
    mismatches = 0
    for alpha in range(1, config['max_n'] + 1):
        counts = np.bincount(words.xi_classes(alpha), minlength=alpha + 2)
        expected = [words.xi_cardinality(alpha, l) for l in range(counts.size)]
        mismatches += int(np.count_nonzero(counts != expected))
    rows.append(metrics.check(SUITE, 'xi cardinality', mismatches, 0))

    ## Stack reduction against the class table ##
    mismatches, parity = 0, 0
    for n in range(1, config['max_n'] + 1):
        U, K, V = words.class_table(n)
        for s, x in enumerate(generator.bit_strings(n)):
            reduced = words.reduce_word(x)
            mismatches += tuple(reduced) != (U[s], K[s], V[s])
            parity += (reduced.length - x.count('1')) % 2
    rows.append(metrics.check(SUITE, 'stack reduction', mismatches, 0))
    rows.append(metrics.check(SUITE, 'reduction parity', parity, 0))

    ## Confluence ##
    rng = torch.Generator().manual_seed(0)
    mismatches = 0
    for i in range(config['confluence']):
        n = 1 + i % 20
        x = next(generator.random_bit_strings(n, 1, rng))
        mismatches += words.reduce_word(x) != words.reduce_word_randomized(x, rng)
    rows.append(metrics.check(SUITE, 'confluence', mismatches, 0, '{} strings'.format(config['confluence'])))

    ## Closure under reversal ##
    violations = sum(words.reversal_closure_violations(L) for L in range(1, config['closure_L'] + 1))
    rows.append(metrics.check(SUITE, 'closure under reversal', violations, 0, 'L <= {}'.format(config['closure_L'])))
    return rows
