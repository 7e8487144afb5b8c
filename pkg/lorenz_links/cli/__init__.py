"""Command line front end"""

from lorenz_links.cli.commands import cli
from lorenz_links.cli.enumeration import enumerate_vectors
from lorenz_links.cli.parsing import parse_braid_text, parse_tlink_spec, parse_vector_spec

__all__ = ["cli", "enumerate_vectors", "parse_braid_text", "parse_tlink_spec", "parse_vector_spec"]
