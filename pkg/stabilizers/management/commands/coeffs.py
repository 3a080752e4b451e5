from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Exact expansion coefficients C_0..C_{n-1} of the complete k-uniform stabilizer'
    command = 'coeffs'
    arguments = ('n', 'k')
