from ._base import StabilizersCommand


class Command(StabilizersCommand):
    help = 'Sign vector of a hypergraph state, from --edges or the complete --n/--k hypergraph'
    command = 'state'
    arguments = ('n', 'k', 'edges', 'max_dense')
