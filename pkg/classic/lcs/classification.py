import logging
import pandas as pd
from IPython.display import HTML
from .constants import PARTIAL
from .subsumption import check_subsumption


def classify(concepts, names=None, semantics=PARTIAL):
    """
    Performs pair-wise subsumption on the given concepts. The
    result is a square boolean data frame whose cell (i, j) is
    true iff concept *i* is subsumed by concept *j*.

    :param concepts: the concepts to classify
    :option names: the row and column names (default ``C1`` ..
        ``Cn``)
    :option semantics: the :const:`PARTIAL` or :const:`TOTAL`
        attribute semantics (default partial)
    :return: the subsumption data frame
    """
    concepts = list(concepts)
    if names is None:
        names = ["C%d" % i for i in range(1, len(concepts) + 1)]
    if len(names) != len(concepts):
        raise ValueError("The %d names do not match the %d concepts" %
                         (len(names), len(concepts)))
    data = [[check_subsumption(sub, sup, semantics) for sup in concepts]
            for sub in concepts]
    logging.info("Classified %d concepts" % len(concepts))
    frame = pd.DataFrame(data, index=list(names), columns=list(names))
    frame.index.name = 'subsumee'
    frame.columns.name = 'subsumer'
    return frame


def direct_subsumers(frame):
    """
    Finds the classified hierarchy of the given subsumption data
    frame. Equivalent concepts subsume each other but are not
    direct subsumers of each other.

    :param frame: the :meth:`classify` data frame
    :return: the name -> direct subsumer names dictionary
    """
    strict = {sub: [sup for sup in frame.columns
                    if frame.at[sub, sup] and not frame.at[sup, sub]]
              for sub in frame.index}
    direct = {}
    for sub, sups in strict.items():
        # A subsumer is direct if no other strict subsumer lies between.
        direct[sub] = [sup for sup in sups
                       if not any(sup in strict[mid] for mid in sups)]
    return direct


def print_classification(frame, qualifier=None, format='text'):
    """
    Represents the given subsumption data frame in a form suitable
    for printing.

    :param frame: the :meth:`classify` data frame
    :option qualifier: the optional qualifier to print in the
        HTML-formatted title
    :option format: 'text' or 'html' (default is text)
    :return: the printable string, or the IPython HTML object
    """
    printable = frame.apply(lambda col: col.map({True: 'x', False: '.'}))
    if format == 'text':
        return printable.to_string()
    elif format == 'html':
        start = '<h4>Subsumption'
        if qualifier:
            style = 'font-size:normal;font-weight:normal;'
            middle = "<span style=%s> (%s)</span>" % (style, qualifier)
        else:
            middle = ''
        end = '</h4>'
        return HTML(start + middle + end + printable.to_html())
    else:
        raise ValueError("Unrecognized classification print format: %s" %
                         format)
