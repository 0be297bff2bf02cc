"""brauercert: exact computation and certification of Brauer-class data on curves."""

__version__ = "0.1.0"
