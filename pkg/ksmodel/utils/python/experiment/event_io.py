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
"""Reads and writes event streams as CSV."""

import csv
import io
import logging

import numpy as np

from ksmodel.runners.host import errors
from ksmodel.utils.python.experiment import event_record

_REAL_FORMAT = "%.16e"


def _open(path, mode):
    try:
        return open(path, mode, newline="")
    except (IOError, OSError) as e:
        raise errors.KsIOError(path, e.strerror or str(e))


def write_events(path, records):
    """Writes EventRecords with a header row.

    Returns:
        int, the number of records written.

    Raises:
        KsIOError: the file can not be written.
    """
    count = 0
    with _open(path, "w") as f:
        try:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(event_record.CSV_HEADER)
            for record in records:
                writer.writerow(record.toRow())
                count += 1
        except (IOError, OSError) as e:
            raise errors.KsIOError(path, str(e))
    logging.info("Wrote %d events to %s", count, path)
    return count


def _csv_field(text):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow([text])
    return buf.getvalue()


def _batch_format(batch):
    """Returns the savetxt row format of a batch.

    The label and mass are constant within a batch and are written into the
    format itself. savetxt needs one '%' per column, so a label holding '%'
    has no batch format and None is returned.
    """
    label = _csv_field(batch.setting_label)
    if "%" in label:
        return None
    mass = event_record.format_real(batch.mass)
    return ",".join(["%d", label] + [_REAL_FORMAT] * 18 + ["%d", "%d", mass])


def _batch_table(batch):
    """Stacks the numeric columns of a batch as one float64 array.

    trial_id and outcomes stay exact: they are integers below 2**53.
    """
    n = len(batch)
    return np.column_stack([
        batch.trial_id.astype(np.float64),
        np.broadcast_to(batch.n_a.asArray(), (n, 3)),
        np.broadcast_to(batch.n_b.asArray(), (n, 3)), batch.u, batch.v,
        batch.lambda1, batch.lambda2,
        batch.outcome_a.astype(np.float64),
        batch.outcome_b.astype(np.float64)
    ])


def write_event_batches(path, batches):
    """Writes EventBatches without building per-trial objects.

    The output is identical to write_events on the batches' records.
    """
    count = 0
    with _open(path, "w") as f:
        try:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(event_record.CSV_HEADER)
            for batch in batches:
                row_format = _batch_format(batch)
                if row_format is None:
                    writer.writerows(r.toRow() for r in batch.records())
                elif len(batch):
                    np.savetxt(f, _batch_table(batch), fmt=row_format,
                               newline="\n")
                count += len(batch)
        except (IOError, OSError) as e:
            raise errors.KsIOError(path, str(e))
    logging.info("Wrote %d events to %s", count, path)
    return count


def iter_events(path):
    """Yields the EventRecords of a file.

    An empty file yields nothing.

    Raises:
        KsIOError: the file can not be read.
        EventFormatError: the header or a row is malformed; the error carries
            the 1-based line number.
    """
    with _open(path, "r") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None:
            return
        if tuple(header) != event_record.CSV_HEADER:
            raise errors.EventFormatError(1, "unexpected header %r" % header)
        for row in reader:
            line_number = reader.line_num
            if not row:
                continue
            try:
                record = event_record.EventRecord.fromRow(row).validate()
            except (ValueError, errors.SimulationError) as e:
                raise errors.EventFormatError(line_number, str(e))
            yield record


def read_events(path):
    return list(iter_events(path))
