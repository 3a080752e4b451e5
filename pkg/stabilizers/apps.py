from django.apps import AppConfig
from django.conf import settings

# Hard module limits; settings may lower a cap, never raise it.
CAP_LIMITS = {
    'VERTEX_MAX': 64,
    'DENSE_MAX_QUBITS': 20,
    'PRODUCT_MAX_QUBITS': 16,
    'ZX_MAX_QUBITS': 14,
    'PROJECTOR_MAX_QUBITS': 4,
    'MATRIX_MAX_QUBITS': 10,
    'PROBE_MAX_WIDTH': 24,
    'SCAN_MAX_QUBITS': 128,
    'BELL_FAST_MAX': 24,
    'BELL_EXHAUSTIVE_MAX': 12,
}


def cap(name):
    """Return the configured cap STABILIZERS_<name>, or its module limit."""
    if settings.configured:
        return getattr(settings, f'STABILIZERS_{name}', CAP_LIMITS[name])
    return CAP_LIMITS[name]


class StabilizersConfig(AppConfig):
    name = 'stabilizers'
    verbose_name = 'Hypergraph State Stabilizers'

    def ready(self):
        """Register system checks for the cap settings."""
        from django.core import checks

        @checks.register()
        def check_caps(app_configs, **kwargs):
            errors = []
            for name, limit in CAP_LIMITS.items():
                value = cap(name)
                if not isinstance(value, int) or value < 1 or value > limit:
                    errors.append(checks.Error(
                        f'STABILIZERS_{name}={value!r} must be an integer in [1, {limit}]',
                        id='stabilizers.E001',
                    ))
            return errors
