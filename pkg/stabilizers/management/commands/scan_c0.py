from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Compare exact C_0 = 0 with the closed-form criterion for 2 <= k <= n <= n_max'
    command = 'scan-c0'
    arguments = ('n_max', 'k_max')
