FORMAT_HEADER = 'DIVPOLYv1'
"""
Format tag written into every JSON artifact
"""

QUATERNION = 'quaternion'
"""
Name of the built-in rational quaternion algebra
"""

QUATERNION_LABELS = ('1', 'i', 'j', 'k')

LOG_LEVEL_ENV = 'DIVPOLY_LOG_LEVEL'
"""
Environment variable overriding the command line log level
"""

__all__ = ['FORMAT_HEADER', 'QUATERNION', 'QUATERNION_LABELS', 'LOG_LEVEL_ENV']
