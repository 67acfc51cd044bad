import hashlib
import json
import os

from networkx import node_link_graph, node_link_data


def replace_ext(file_name, extension):
    """If an extension exists on file_name,
    replace it with new extension. Otherwise
    add new extension"""

    path, ext = os.path.splitext(file_name)

    if ext != f'.{extension}':
        file_name = path + f'.{extension}'

    return file_name


def file_digest(file_name):
    """SHA-256 hex digest of the file contents"""

    try:
        with open(file_name, 'rb') as infile:
            return hashlib.sha256(infile.read()).hexdigest()
    except IOError as e:
        raise IOError(
            f"Cannot read file {file_name}"
        ) from e


def save_text(text, file_name):
    """Saves a string as a plain text file"""

    try:
        with open(file_name, 'w') as outfile:
            outfile.write(text)
    except IOError as e:
        raise IOError(
            f"Cannot save to file {file_name}"
        ) from e


def load_text(file_name):
    """Loads a plain text file as a string"""

    try:
        with open(file_name, 'r') as infile:
            text = infile.read()
    except IOError as e:
        raise IOError(
            f"Cannot read file {file_name}"
        ) from e

    return text


def save_json(data, file_name):
    """Saves data as JSON file"""

    file_name = replace_ext(file_name, 'json')

    try:
        with open(f"{file_name}", 'w') as outfile:
            json.dump(data, outfile, indent=4)
    except IOError as e:
        raise IOError(
            f"Cannot save to file {file_name}"
        ) from e


def load_json(file_name):
    """Loads JSON file as data"""

    file_name = replace_ext(file_name, 'json')

    try:
        with open(file_name, 'r') as infile:
            data = json.load(infile)
    except IOError as e:
        raise IOError(
            f"Cannot read file {file_name}"
        ) from e

    return data


def serialize_networkx_graph(graph):
    """Transform a networkx DiGraph object into
    a JSON serialised dictionary"""

    return node_link_data(graph)


def deserialize_networkx_graph(data):
    """Transform JSON serialised data into a
    networkx DiGraph object"""

    return node_link_graph(data)
