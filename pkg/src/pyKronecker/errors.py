"""
INTENDED FOR KRONECKER REPRESENTATION USE
This file contains the exception hierarchy shared by all modules. Every
exception carries the process exit code the command line maps it to, and a
small dictionary of machine readable details.

copyright October 2026
"""

import logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_DOMAIN = 4
EXIT_REFUSAL = 5
EXIT_CLOSURE_GAP = 6


class KroneckerError(Exception):
    """ Base class for all errors raised by pyKronecker. """

    exit_code = EXIT_FAIL

    def __init__(self, msg, **details):
        super(KroneckerError, self).__init__(msg)
        self.msg = msg
        self.details = details

    def to_dict(self):
        """ Machine readable form used by the command line. """
        return {'type': type(self).__name__,
                'message': self.msg,
                'exit_code': self.exit_code,
                'details': self.details}


class DomainError(KroneckerError, ValueError):
    """ A precondition of an operation does not hold. """

    exit_code = EXIT_DOMAIN


class ContractError(DomainError):
    """ Matrix shapes do not fit together. """


class RefusalError(KroneckerError):
    """ An exhaustive scan would exceed its configured bound. """

    exit_code = EXIT_REFUSAL

    def __init__(self, msg, requested, limit, **details):
        super(RefusalError, self).__init__(msg, requested=requested,
                                           limit=limit, **details)
        self.requested = requested
        self.limit = limit


class FormatError(KroneckerError, ValueError):
    """ Malformed representation JSON or configuration text. """

    exit_code = EXIT_FORMAT


class VerificationError(KroneckerError):
    """ A verification routine could not produce its required witness. """

    exit_code = EXIT_FAIL


def refuse(what, requested, limit):
    """ Raise a RefusalError naming the scan, its size and the bound. """
    logger.warning('refusing %s: %d candidates, bound %d', what, requested,
                   limit)
    raise RefusalError('%s needs %d candidates, above the bound of %d'
                       % (what, requested, limit), requested, limit,
                       scan=what)
