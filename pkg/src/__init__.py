"""
Virtual geodesic triangulations - Main package
"""

__version__ = "1.0.0"
