import time
from contextlib import contextmanager


@contextmanager
def measure_time():
    # context manager to measure execution time
    start_time = time.perf_counter()
    # callers ask for the elapsed milliseconds at the end
    yield lambda: int((time.perf_counter() - start_time) * 1000)
