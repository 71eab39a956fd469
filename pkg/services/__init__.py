"""
Index assembly, datasets, file formats, verification, benchmarks and experiments.
"""
