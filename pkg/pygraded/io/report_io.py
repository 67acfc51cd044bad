import logging

from .utilities import (
    replace_ext, save_json, load_json,
    serialize_networkx_graph, deserialize_networkx_graph)

logger = logging.getLogger(__name__)


def save_verdict_table(report, file_name):
    """Write the verdict table of a RunReport as CSV"""

    file_name = replace_ext(file_name, 'csv')
    try:
        report.to_dataframe().to_csv(file_name, index=False)
    except IOError as e:
        raise IOError(
            f"Cannot save to file {file_name}"
        ) from e

    logger.info(f"Verdict table saved to {file_name}")


def save_search_tree(tree, file_name):
    """Write a torsionfree search tree as node-link JSON"""
    save_json(serialize_networkx_graph(tree), file_name)


def load_search_tree(file_name):
    return deserialize_networkx_graph(load_json(file_name))
