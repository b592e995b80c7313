import traceback
from multiprocessing.pool import Pool
import multiprocessing

# Shortcut to multiprocessing's logger
def error(msg, *args):
    return multiprocessing.get_logger().error(msg, *args)


class LogExceptions(object):
    """Runs one sweep chunk in a worker; a failing chunk logs its traceback under its label."""

    def __init__(self, callable, label):
        self.__callable = callable
        self.__label = label

    def __call__(self, *args, **kwargs):
        try:
            result = self.__callable(*args, **kwargs)

        except Exception:
            error("sweep chunk %s failed:\n%s", self.__label, traceback.format_exc())
            # Re-raise so the parent sees the failure from AsyncResult.get()
            raise

        return result


class LoggingPool(Pool):
    def apply_async(self, func, args=(), kwds={}, callback=None, label=None):
        return Pool.apply_async(self, LogExceptions(func, label or func.__name__), args, kwds, callback)


def split_chunks(items, count):
    """count contiguous slices of items whose sizes differ by at most one."""
    size, extra = divmod(len(items), count)
    chunks = []
    start = 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return chunks


def pool_runner(jobs, chunks_per_job=4):
    """
    Runner for verification sweeps: evaluates func(params, chunk) on
    contiguous chunks of items and concatenates the results in item order,
    so the output does not depend on the number of workers.
    """
    def run(func, params, items):
        items = list(items)
        if jobs <= 1 or len(items) < 2:
            return func(params, items)
        chunks = split_chunks(items, min(len(items), jobs * chunks_per_job))
        results = []
        with LoggingPool(jobs) as pool:
            pending = [
                pool.apply_async(func, (params, chunk), label=f"{i + 1}/{len(chunks)}")
                for i, chunk in enumerate(chunks)
            ]
            for result in pending:
                results.extend(result.get())
        return results

    return run
