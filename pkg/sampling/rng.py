"""
Copyright (C) 2026 The wydcheck authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""
import numpy as np

from helpers.errors import OutOfRange

MAX_SEED = 2 ** 64 - 1


def check_master_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed <= MAX_SEED:
        raise OutOfRange("Seed must be an integer in [0, 2^64 - 1], got {!r}".format(seed))
    return int(seed)


def trial_seed(master_seed, trial_index):
    """
    64-bit seed of a single trial, derived from the master seed and the trial
    index only, so that it does not depend on the worker running the trial
    """
    sequence = np.random.SeedSequence(check_master_seed(master_seed), spawn_key=(int(trial_index),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def trial_generator(seed):
    """
    Counter-based generator (Philox) for a trial seed
    """
    return np.random.Generator(np.random.Philox(check_master_seed(seed)))
