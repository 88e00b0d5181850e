"""mysticum: exact verification of the hexagram and octagram mysticum configurations."""

__version__ = "0.1.0"
