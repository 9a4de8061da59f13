"""
Exact combinatorics of prepermutohedral varieties and the associated
Hessenberg varieties.
"""
__version__ = "1.0.0"
