"""
Configuration, errors and progress reporting shared by all of pypaq.
"""
import os
import time
import logging

import numba

logger = logging.getLogger(__name__)


class ResourceLimitError(RuntimeError):
    """
    Raised when a computation would exceed a configured limit

    The limits are the enumeration bound on n (see `config`) and the
    candidate budget of the symmetric-set survey.
    """
    pass


class WitnessError(ValueError):
    """
    Invalid input for which an explicit witness is available

    Parameters
    ----------
    message : str
        Human readable description of the violation.
    witness : object
        The offending object, for example the pattern occurrence that
        shows a permutation is not an avoider.
    """
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class config():
    """
    Run-time configuration

    Parameters
    ----------
    enumeration_bound : int, optional
        Largest n for which the symmetric group S_n may be enumerated.
        Default: 10
    threads : int or None, optional
        Number of threads used by the parallel numba kernels.  None means
        numba's default (all cores).  Default: None
    output : str, optional
        Either 'text' or 'json'.  Default: 'text'
    survey_budget : int, optional
        Maximum number of candidate pattern sets a survey may visit.
        Default: 1000000

    Notes
    -----
    The environment variable `QSYM_BOUND` overrides `enumeration_bound`
    when the configuration is built with `config.from_environment()`.
    """
    def __init__(self, enumeration_bound=10, threads=None, output='text',
                 survey_budget=10**6):
        if not isinstance(enumeration_bound, int) or enumeration_bound < 1:
            raise ValueError('enumeration_bound must be a positive integer, '
                             'not %r.' % (enumeration_bound,))
        if output not in ('text', 'json'):
            raise ValueError('output must be text or json, not %r.' % output)
        if threads is not None and threads < 1:
            raise ValueError('threads must be positive, not %r.' % threads)

        self.enumeration_bound = enumeration_bound
        self.threads = threads
        self.output = output
        self.survey_budget = survey_budget

    @classmethod
    def from_environment(cls, **kwargs):
        """
        Build a configuration, letting `QSYM_BOUND` override the bound
        """
        value = os.environ.get('QSYM_BOUND')
        if value is not None:
            try:
                kwargs['enumeration_bound'] = int(value)
            except ValueError:
                raise ValueError('QSYM_BOUND must be an integer, not %r.' % value)
        return cls(**kwargs)

    def apply_threads(self):
        """
        Forward the thread count to numba
        """
        if self.threads is not None:
            numba.set_num_threads(min(self.threads,
                                      numba.config.NUMBA_NUM_THREADS))

    def check_n(self, n):
        """
        Raise ResourceLimitError if S_n may not be enumerated
        """
        if n > self.enumeration_bound:
            raise ResourceLimitError('n=%d exceeds the enumeration bound %d.' %
                                     (n, self.enumeration_bound))

    def __repr__(self):
        return ('config(enumeration_bound=%d, threads=%r, output=%r)' %
                (self.enumeration_bound, self.threads, self.output))


default_config = config.from_environment()


def set_default_config(new_config):
    """
    Replace the configuration used when none is passed explicitly
    """
    global default_config
    if not isinstance(new_config, config):
        raise TypeError('new_config must be a pypaq.common.config.')
    default_config = new_config
    default_config.apply_threads()


def get_config(cfg=None):
    return default_config if cfg is None else cfg


def set_threads(threads):
    """
    Set the number of threads used by the parallel kernels
    """
    default_config.threads = threads
    default_config.apply_threads()


class progressBar(object):
    """
    Text progress bar counting enumerated objects

    Parameters
    ----------
    total : int
        Number of objects that will be visited.
    prefix : str, optional
        Label printed before the bar.
    length : int, optional
        Width of the bar in characters.
    update_rate : float, optional
        Minimum number of seconds between redraws.
    """
    def __init__(self, total, prefix='Progress:', fill='█', length=30,
                 update_rate=0.5):
        self.tic = time.time()
        self.total = max(int(total), 1)
        self.count = 0
        self.prefix = prefix
        self.fill = fill
        self.length = length
        self.update_rate = update_rate
        self.last_update = 0.
        self.max_written_length = 0
        self.finished = False

    def format_time(self, tic_toc):
        if tic_toc > 3600:
            return "%d:%02d:%02d" % (tic_toc/3600.0, (tic_toc/60.0) % 60.0,
                                     tic_toc % 60.0)
        elif tic_toc > 60:
            return "%d:%02d" % (tic_toc/60.0, tic_toc % 60.0)
        else:
            return "%.2f s" % tic_toc

    def print_string(self, string1):
        self.max_written_length = max(self.max_written_length, len(string1))
        pad = ' '*(self.max_written_length - len(string1))
        print(string1 + pad, end='\r')

    def advance(self, step=1):
        self.count += step
        fraction = self.count/self.total
        toc = time.time()
        if fraction < 1 and (toc - self.last_update) > self.update_rate:
            filled = int(self.length*fraction)
            bar = self.fill*filled + '-'*(self.length - filled)
            remaining = (1 - fraction)*(toc - self.tic)/max(fraction, 1e-12)
            self.print_string('%s |%s| %d/%d; time left: %s' %
                              (self.prefix, bar, self.count, self.total,
                               self.format_time(remaining)))
            self.last_update = toc
        elif fraction >= 1 and not self.finished:
            self.finished = True
            self.print_string('Completed %d in %s.' %
                              (self.count, self.format_time(toc - self.tic)))
            print()


class _nullProgress(object):
    def advance(self, step=1):
        pass


def make_progress(total, enabled, prefix='Progress:'):
    """
    Return a progressBar when enabled, otherwise a no-op stand-in
    """
    if enabled:
        return progressBar(total, prefix=prefix)
    return _nullProgress()
