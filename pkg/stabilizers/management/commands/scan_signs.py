from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Locate the negative expansion coefficients for 3 <= k < n <= n_max'
    command = 'scan-signs'
    arguments = ('n_max', 'k_max')
