#
# Copyright (C) 2026 The ksmodel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import concurrent.futures
import logging
import os


def abs_path(path):
    """Resolve the '.' and '~' in a path to get the absolute path.

    Args:
        path: The path to expand.

    Returns:
        The absolute path of the input path.
    """
    return os.path.abspath(os.path.expanduser(path))


def create_dir(path):
    """Creates a directory if it does not exist already.

    Args:
        path: The path of the directory to create.
    """
    full_path = abs_path(path)
    if not os.path.exists(full_path):
        os.makedirs(full_path)


def concurrent_exec(func, param_list, max_workers=1):
    """Executes a function with different parameters on a thread pool.

    This is basically an ordered map function. Each element (should be an
    iterable) in the param_list is unpacked and passed into the function.
    Results come back in the order of param_list no matter which worker
    finished first, so reductions over them are deterministic.

    numpy releases the GIL inside its vectorized kernels, which is where the
    work of the numeric engines happens.

    Args:
        func: The function that performs a task.
        param_list: A list of iterables, each being a set of params to be
            passed into the function.
        max_workers: int, number of threads. 1 runs inline.

    Returns:
        A list of return values, one per element of param_list.

    Raises:
        The first exception raised by any call, in param_list order.
    """
    param_list = list(param_list)
    if max_workers <= 1 or len(param_list) <= 1:
        return [func(*p) for p in param_list]
    logging.debug("Running %d tasks on %d workers", len(param_list),
                  max_workers)
    with concurrent.futures.ThreadPoolExecutor(
            max_workers=max_workers) as executor:
        futures = [executor.submit(func, *p) for p in param_list]
        return [future.result() for future in futures]
