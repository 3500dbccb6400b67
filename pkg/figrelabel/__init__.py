"""
figrelabel - relabel text in Encapsulated PostScript figures
"""

__version__ = "0.1.0"
