from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Run the property suites for one (n, k) pair or a sweep up to --n-max/--k-max'
    command = 'verify'
    arguments = ('n', 'k', 'n_max', 'k_max', 'max_dense')
