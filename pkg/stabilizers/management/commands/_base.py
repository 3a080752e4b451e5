from django.core.management.base import BaseCommand, CommandError

from stabilizers import cli

ARGUMENTS = {
    'n': dict(type=int, help='Number of vertices'),
    'k': dict(help='Uniformity profile, comma separated (e.g. 3 or 2,3)'),
    'n_max': dict(type=int, help='Largest n of a sweep'),
    'k_max': dict(type=int, help='Largest k of a sweep'),
    'edges': dict(help='Hypergraph JSON file {"n": N, "edges": [[...], ...]}'),
    'max_dense': dict(type=int, help='Lower the dense statevector cap for this run'),
}


class StabilizersCommand(BaseCommand):
    """
    Base for the stabilizer commands: parse flags into a RunConfig and hand it
    to cli.execute; a non-zero status becomes a CommandError with that return code.
    """
    command = None
    arguments = ()

    def add_arguments(self, parser):
        for name in self.arguments:
            parser.add_argument(f'--{name.replace("_", "-")}', dest=name, **ARGUMENTS[name])
        parser.add_argument('--format', dest='fmt', choices=cli.FORMATS, help='Output format')
        parser.add_argument('--out', help='Write output to this file instead of stdout')

    def build_config(self, options):
        return cli.RunConfig(
            command=self.command,
            n=options.get('n'),
            profile=options.get('k'),
            n_max=options.get('n_max'),
            k_max=options.get('k_max'),
            fmt=options.get('fmt'),
            out=options.get('out'),
            edges=options.get('edges'),
            max_dense=options.get('max_dense'),
        )

    def handle(self, *args, **options):
        status, message = cli.execute(self.build_config(options), self.stdout)
        if status != cli.EXIT_OK:
            raise CommandError(message, returncode=status)
