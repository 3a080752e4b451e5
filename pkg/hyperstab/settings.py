"""
Django settings for the hyperstab project.
Command-line only: no database, no URLs, no templates.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed; Django only needs the setting to exist
SECRET_KEY = 'hyperstab-no-signing'

# Application definition
INSTALLED_APPS = [
    'stabilizers',
]

# No persistence: every result is recomputed exactly on demand
DATABASES = {}

USE_TZ = True

# Computational caps. These are module limits; system checks reject larger values.
STABILIZERS_VERTEX_MAX = 64
STABILIZERS_DENSE_MAX_QUBITS = 20
STABILIZERS_PRODUCT_MAX_QUBITS = 16
STABILIZERS_ZX_MAX_QUBITS = 14
STABILIZERS_PROJECTOR_MAX_QUBITS = 4
STABILIZERS_MATRIX_MAX_QUBITS = 10
STABILIZERS_PROBE_MAX_WIDTH = 24
STABILIZERS_SCAN_MAX_QUBITS = 128
STABILIZERS_BELL_FAST_MAX = 24
STABILIZERS_BELL_EXHAUSTIVE_MAX = 12

# Logging: console goes to stderr so stdout stays machine-readable
LOG_LEVEL = os.getenv('STABILIZERS_LOG_LEVEL', 'INFO').upper()
LOG_FILE = os.getenv('STABILIZERS_LOG_FILE')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'stabilizers': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

if LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'INFO',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'formatter': 'verbose',
    }
    LOGGING['root']['handlers'].append('file')
    LOGGING['loggers']['stabilizers']['handlers'].append('file')
