"""A singleton metaclass shared by process-wide services (logger, registries)."""

import abc
import threading


class Singleton(abc.ABCMeta, type):
    """
    Metaclass keeping exactly one instance per class.

    Instance creation is guarded by a lock so concurrent first calls from
    worker threads still observe a single object.
    """

    _instances = {}
    _lock = threading.Lock()

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            with cls._lock:
                if cls not in cls._instances:
                    cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]
