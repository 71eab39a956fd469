"""
Subcommand handlers; each module registers its parsers and returns an exit code from its handler.
"""

from . import bench, experiment, gen, query, verify

__all__ = ['bench', 'experiment', 'gen', 'query', 'verify']
