"""Command layer of `gaugeqc`: settings, file formats and reports.
"""
