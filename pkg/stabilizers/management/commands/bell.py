from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Classical bound and quantum value of the sum-of-stabilizers Bell functional'
    command = 'bell'
    arguments = ('n', 'k', 'n_max', 'k_max')
