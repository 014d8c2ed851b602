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
"""The ksmodel command: verify, correlate, inequality and simulate.

Machine-readable output goes to stdout or to --out; logs go to stderr and,
with --log-path, to log files.
"""

import argparse
import logging
import math
import os
import re
import sys

import numpy as np

from ksmodel.runners.host import config_parser
from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.runners.host import keys
from ksmodel.runners.host import logger
from ksmodel.runners.host import test_runner
from ksmodel.runners.host import utils
from ksmodel.testcases.host.verification import suites
from ksmodel.utils.python.experiment import event_io
from ksmodel.utils.python.experiment import event_simulator
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.inequality import inequality_utils
from ksmodel.utils.python.inequality import settings_plan
from ksmodel.utils.python.model import ks_two
from ksmodel.utils.python.quantum import qm_reference
from ksmodel.utils.python.reporting import report_file_utils

CMD_VERIFY = "verify"
CMD_CORRELATE = "correlate"
CMD_INEQUALITY = "inequality"
CMD_SIMULATE = "simulate"

KIND_LEGGETT = "leggett"
KIND_CHSH = "chsh"

SOURCE_STATE = "state"
SOURCE_TENSOR = "tensor"
SOURCE_SINGLE_TERM = "single_term"
SINGLE_TERM_NAME = "fa"

INEQUALITY_CSV_HEADER = ("kind", "phi_deg", "lhs", "bound", "margin",
                         "violated")

_AXIS_PATTERN = re.compile(r"^([+-]?)([xyz])$")
_NAMED_AXES = {"x": sphere.E_X, "y": sphere.E_Y, "z": sphere.E_Z}
_SETTING_KEYS = (keys.ConfigKeys.KEY_SETTING_A, keys.ConfigKeys.KEY_SETTING_A2,
                 keys.ConfigKeys.KEY_SETTING_B, keys.ConfigKeys.KEY_SETTING_B2)


def parse_setting(text):
    """Parses a polarizer setting into a UnitVector.

    Accepted forms:
        "x", "-z": a named axis with an optional sign.
        "30": degrees in the x-z plane, from +z toward +x.
        "90:45": polar and azimuthal angle in degrees.
        "1,1,0": components, normalized.

    Raises:
        errors.USERError: the text is none of the above.
    """
    word = str(text).strip().lower()
    try:
        match = _AXIS_PATTERN.match(word)
        if match:
            axis = _NAMED_AXES[match.group(2)]
            return -axis if match.group(1) == "-" else axis
        if ":" in word:
            theta, phi = [float(part) for part in word.split(":")]
            return sphere.from_spherical(math.radians(theta),
                                         math.radians(phi % 360.0))
        if "," in word:
            components = [float(part) for part in word.split(",")]
            return sphere.UnitVector.fromArray(components, normalize=True)
        return sphere.in_plane(math.radians(float(word)))
    except ValueError as e:
        raise errors.USERError("bad setting %r: %s" % (text, e))


def parse_tensor(text):
    """Parses a correlation tensor: c (c * I), 3 numbers (diagonal) or 9
    numbers (row-major), separated by commas or whitespace.

    Raises:
        errors.USERError: wrong count, or entries outside [-1, 1].
    """
    parts = [part for part in re.split(r"[,\s]+", str(text).strip()) if part]
    try:
        values = [float(part) for part in parts]
        if len(values) == 1:
            return qm_reference.CorrelationTensor(values[0] * np.eye(3))
        if len(values) == 3:
            return qm_reference.CorrelationTensor.fromDiagonal(values)
        if len(values) == 9:
            return qm_reference.CorrelationTensor(
                np.reshape(values, (3, 3)))
    except ValueError as e:
        raise errors.USERError("bad tensor %r: %s" % (text, e))
    raise errors.USERError("tensor needs 1, 3 or 9 numbers, got %d" %
                           len(parts))


class ModelSource(object):
    """The hidden-variable distribution and quantum reference of a command.

    Attributes:
        kind: string, "state", "tensor" or "single_term".
        name: string or None, the state name.
        tensor: qm_reference.CorrelationTensor of the quantum reference.
        factory: callable (n_a, n_b) -> ks_two.PolarizationDistribution.
    """

    def __init__(self, kind, name, tensor, factory):
        self.kind = kind
        self.name = name
        self.tensor = tensor
        self.factory = factory

    def distribution(self, n_a, n_b):
        return self.factory(n_a, n_b)

    def qmCorrelation(self, n_a, n_b):
        return min(1.0, max(-1.0, self.tensor.correlation(n_a, n_b)))

    def getDict(self):
        return {
            "kind": self.kind,
            "name": self.name,
            "tensor": self.tensor.matrix.tolist(),
        }


def build_source(state=None, tensor=None):
    """Resolves --state / --tensor into a ModelSource.

    A tensor takes precedence over a state name. The singlet uses the
    contextual two-term distribution F_ab; the other Bell states use the
    fixed-axis distribution of their tensor; "fa" is the single-term route.

    Raises:
        errors.USERError: unknown state name or malformed tensor.
    """
    if tensor is not None:
        t = parse_tensor(tensor)
        f = ks_two.distribution_from_tensor(t)
        return ModelSource(SOURCE_TENSOR, None, t, lambda n_a, n_b: f)
    name = str(state).strip().lower()
    singlet_tensor = qm_reference.bell_tensor(qm_reference.PSI_MINUS)
    if name == SINGLE_TERM_NAME:
        return ModelSource(
            SOURCE_SINGLE_TERM, SINGLE_TERM_NAME, singlet_tensor,
            lambda n_a, n_b: ks_two.single_term_distribution(n_a))
    try:
        kind = qm_reference.normalize_kind(name)
    except errors.StateError as e:
        raise errors.USERError("%s (or %r)" % (e, SINGLE_TERM_NAME))
    if kind == qm_reference.PSI_MINUS:
        return ModelSource(SOURCE_STATE, kind, singlet_tensor,
                           ks_two.singlet_distribution)
    f = ks_two.bell_distribution(kind)
    return ModelSource(SOURCE_STATE, kind, qm_reference.bell_tensor(kind),
                       lambda n_a, n_b: f)


def _source_from_config(config):
    return build_source(config[keys.ConfigKeys.KEY_STATE],
                        config.get(keys.ConfigKeys.KEY_TENSOR))


def _required_setting(config, key):
    text = config.get(key)
    if text is None:
        raise errors.USERError("--%s is required" % key)
    return parse_setting(text)


def _chsh_plan(config):
    """The plan from --a --a2 --b --b2, or the standard one if none is set."""
    given = [config.get(key) is not None for key in _SETTING_KEYS]
    if not any(given):
        return settings_plan.standard_chsh_plan()
    if not all(given):
        raise errors.USERError("CHSH settings need all of --a --a2 --b --b2")
    return settings_plan.chsh_plan(
        *[parse_setting(config[key]) for key in _SETTING_KEYS])


def _numeric_options(config):
    method = config[keys.ConfigKeys.KEY_METHOD]
    if method == const.METHOD_GRID:
        return {"n_theta": config[keys.ConfigKeys.KEY_N_THETA]}
    if method == const.METHOD_MC:
        return {
            "n": config[keys.ConfigKeys.KEY_N_SAMPLES],
            "rng": rng_stream.RngStream(config[keys.ConfigKeys.KEY_SEED]),
            "workers": config[keys.ConfigKeys.KEY_WORKERS],
        }
    return {}


def _emit_json(document, config, schema_name):
    """Validates a document and writes it to --out or stdout."""
    out = config.get(keys.ConfigKeys.KEY_OUT)
    if out:
        report_file_utils.ReportFileUtil().SaveJson(document, out,
                                                    schema_name)
    else:
        report_file_utils.validateJson(document, schema_name)
        sys.stdout.write(report_file_utils.jsonString(document))


def _emit_csv(header, rows, config):
    out = config.get(keys.ConfigKeys.KEY_OUT)
    if out:
        report_file_utils.ReportFileUtil().SaveCsv(header, rows, out)
    else:
        sys.stdout.write(report_file_utils.csvString(header, rows))


def cmd_verify(config):
    """Runs every verification suite.

    Returns:
        0 if all suites pass, 1 otherwise.
    """
    out = config.get(keys.ConfigKeys.KEY_OUT)
    results, document = test_runner.runVerification(config,
                                                    suites.ALL_SUITES, out)
    if not out:
        sys.stdout.write(report_file_utils.jsonString(document))
    if results.passedAll:
        return const.EXIT_CODE_SUCCESS
    for record in results.getNonPassingRecords():
        logging.error("%s: %s", record.fullname, record.details)
    return const.EXIT_CODE_VERIFICATION_FAILURE


def cmd_correlate(config):
    """Emits the closed form, numeric and quantum correlation of one
    setting pair."""
    source = _source_from_config(config)
    n_a = _required_setting(config, keys.ConfigKeys.KEY_SETTING_A)
    n_b = _required_setting(config, keys.ConfigKeys.KEY_SETTING_B)
    f = source.distribution(n_a, n_b)
    numeric = ks_two.correlation_numeric(f, n_a, n_b,
                                         config[keys.ConfigKeys.KEY_METHOD],
                                         **_numeric_options(config))
    document = {
        "source": source.getDict(),
        "a": list(n_a.asTuple()),
        "b": list(n_b.asTuple()),
        "mass": f.mass(),
        "closed": ks_two.correlation_closed(f, n_a, n_b),
        "numeric": numeric.getDict(),
        "qm": source.qmCorrelation(n_a, n_b),
    }
    _emit_json(document, config, report_file_utils.SCHEMA_CORRELATION)
    return const.EXIT_CODE_SUCCESS


def _inequality_rows(kind, reports):
    rows = []
    for report in reports:
        d = report.getDict()
        rows.append([
            kind,
            "%.6f" % d["phi_deg"] if "phi_deg" in d else "",
            "%.12f" % d["lhs"],
            "%.12f" % d["bound"],
            "%.12f" % d["margin"],
            "true" if d["violated"] else "false",
        ])
    return rows


def cmd_inequality(config, kind):
    """Evaluates a Leggett-type scan or the CHSH value of the model.

    With --control the settings-independent distribution of the source's
    tensor, rescaled to unit mass, replaces the contextual one.
    """
    source = _source_from_config(config)
    control = config[keys.ConfigKeys.KEY_CONTROL]
    if control:
        model = ks_two.noncontextual_distribution(source.tensor)
    else:
        model = source.factory
    correlation_function = inequality_utils.model_correlation_function(
        model, config[keys.ConfigKeys.KEY_METHOD], **_numeric_options(config))
    document = {
        "kind": kind,
        "source": source.getDict(),
        "control": control,
    }
    if kind == KIND_LEGGETT:
        reports = inequality_utils.leggett_scan(
            correlation_function, config.phis(),
            config[keys.ConfigKeys.KEY_BOUND],
            config[keys.ConfigKeys.KEY_WORKERS])
        summary = inequality_utils.summarize_scan(reports)
        logging.info("Leggett scan: %d of %d angles violated, peak margin "
                     "%.6f at %.2f deg", summary.n_violations,
                     summary.n_points, summary.peak_margin,
                     summary.peak_phi_deg)
        document["summary"] = summary.getDict()
    else:
        reports = [
            inequality_utils.chsh_report(correlation_function,
                                         _chsh_plan(config))
        ]
        logging.info("CHSH value %.12f (local bound %.1f)", reports[0].lhs,
                     reports[0].bound)
    document["reports"] = [report.getDict() for report in reports]
    if config[keys.ConfigKeys.KEY_FORMAT] == "csv":
        _emit_csv(INEQUALITY_CSV_HEADER, _inequality_rows(kind, reports),
                  config)
    else:
        _emit_json(document, config, report_file_utils.SCHEMA_INEQUALITY)
    return const.EXIT_CODE_SUCCESS


def cmd_simulate(config):
    """Simulates events and writes events.csv and summary.json to --out."""
    out = config.get(keys.ConfigKeys.KEY_OUT)
    if not out:
        raise errors.USERError("simulate needs --out DIR")
    source = _source_from_config(config)
    if config.get(keys.ConfigKeys.KEY_PLAN) == KIND_CHSH:
        plan = _chsh_plan(config)
    else:
        plan = settings_plan.single_setting_plan(
            _required_setting(config, keys.ConfigKeys.KEY_SETTING_A),
            _required_setting(config, keys.ConfigKeys.KEY_SETTING_B))
    seed = config[keys.ConfigKeys.KEY_SEED]
    batches = event_simulator.run_batches(
        source.factory, plan, config[keys.ConfigKeys.KEY_TRIALS],
        rng_stream.RngStream(seed), config[keys.ConfigKeys.KEY_WORKERS])
    out_dir = utils.abs_path(out)
    try:
        utils.create_dir(out_dir)
    except OSError as e:
        raise errors.KsIOError(out_dir, e.strerror or str(e))
    count = event_io.write_event_batches(
        os.path.join(out_dir, const.EVENTS_FILE_NAME), batches)
    summaries = event_simulator.estimate_plan(batches, seed)
    report_file_utils.ReportFileUtil(out_dir).SaveJson(
        [summary.getDict() for summary in summaries],
        const.SUMMARY_FILE_NAME, report_file_utils.SCHEMA_RUN_SUMMARY)
    for summary in summaries:
        logging.info("%s: E = %.6f +- %.6f over %d trials",
                     summary.setting_label, summary.correlation,
                     summary.std_error, summary.n_trials)
    if config.get(keys.ConfigKeys.KEY_PLAN) == KIND_CHSH:
        value = inequality_utils.chsh_value(
            dict((s.setting_label, s.correlation) for s in summaries))
        logging.info("Event-level CHSH value %.6f", value)
    logging.info("Wrote %d events to %s", count, out_dir)
    return const.EXIT_CODE_SUCCESS


def _add_source_args(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--state", help="singlet (psi-), psi+, phi+, phi- "
                       "or fa")
    group.add_argument("--tensor", help="c, 'd1,d2,d3' or 9 numbers, "
                       "row-major")


def _add_numeric_args(parser):
    parser.add_argument("--method", choices=const.METHODS)
    parser.add_argument("--n-theta", dest="n_theta")
    parser.add_argument("--seed")
    parser.add_argument("--workers")
    parser.add_argument("--out")


def _add_setting_args(parser, chsh=False):
    parser.add_argument("--a", help="setting: x, -z, degrees, theta:phi or "
                        "x,y,z")
    parser.add_argument("--b")
    if chsh:
        parser.add_argument("--a2")
        parser.add_argument("--b2")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ksmodel",
        description="Contextual hidden-variable model of two-qubit "
        "correlations.")
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--log-path", dest="log_path")
    parser.add_argument("--log-severity", dest="log_severity",
                        choices=sorted(logger.log_severity_map))
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    verify = subparsers.add_parser(CMD_VERIFY, help="run the invariant "
                                   "suites")
    verify.add_argument("--quick", action="store_true", default=None)
    verify.add_argument("--include", dest="include_filter", nargs="+")
    verify.add_argument("--exclude", dest="exclude_filter", nargs="+")
    verify.add_argument("--debug-equator-double-count",
                        dest="debug_equator_double_count",
                        action="store_true", default=None)
    _add_numeric_args(verify)

    correlate = subparsers.add_parser(CMD_CORRELATE, help="model and "
                                      "quantum correlation")
    _add_source_args(correlate)
    _add_setting_args(correlate)
    _add_numeric_args(correlate)
    correlate.add_argument("--n-samples", "--trials", dest="n_samples")

    inequality = subparsers.add_parser(CMD_INEQUALITY, help="Leggett-type "
                                       "scan or CHSH value")
    inequality.add_argument("inequality", choices=(KIND_LEGGETT, KIND_CHSH))
    _add_source_args(inequality)
    _add_setting_args(inequality, chsh=True)
    _add_numeric_args(inequality)
    inequality.add_argument("--n-samples", dest="n_samples")
    inequality.add_argument("--control", action="store_true", default=None)
    inequality.add_argument("--phi-start", dest="phi_start")
    inequality.add_argument("--phi-stop", dest="phi_stop")
    inequality.add_argument("--phi-step", dest="phi_step")
    inequality.add_argument("--bound",
                            choices=sorted(inequality_utils.LEGGETT_BOUNDS))
    inequality.add_argument("--format", choices=("json", "csv"))

    simulate = subparsers.add_parser(CMD_SIMULATE, help="event-level "
                                     "simulation")
    _add_source_args(simulate)
    _add_setting_args(simulate, chsh=True)
    _add_numeric_args(simulate)
    simulate.add_argument("--trials")
    simulate.add_argument("--plan", choices=(KIND_CHSH,))
    return parser


def _cli_values(args):
    """Collects the flags that were given, coerced like config values.

    Raises:
        errors.USERError: a flag value does not parse.
    """
    values = {}
    for key in keys.ConfigKeys.FILE_KEYS:
        value = getattr(args, key, None)
        if value is None:
            continue
        if isinstance(value, str):
            try:
                value = config_parser.coerce_value(key, value)
            except ValueError as e:
                raise errors.USERError("bad value for --%s: %s" %
                                       (key.replace("_", "-"), e))
        values[key] = value
    return values


def _run(args):
    file_values = None
    if args.config:
        file_values = config_parser.load_config_file(args.config)
    config = config_parser.build_run_config(file_values, _cli_values(args))
    logger.setupLogger(config.get(keys.ConfigKeys.KEY_LOG_PATH),
                       filename="ksmodel.log",
                       log_severity=config[keys.ConfigKeys.KEY_LOG_SEVERITY])
    logging.debug("Running %s with %r", args.command, config)
    if args.command == CMD_VERIFY:
        return cmd_verify(config)
    if args.command == CMD_CORRELATE:
        return cmd_correlate(config)
    if args.command == CMD_INEQUALITY:
        return cmd_inequality(config, args.inequality)
    return cmd_simulate(config)


def main(argv=None):
    """Entry point of the ksmodel command.

    Args:
        argv: list of strings, the arguments without the program name;
            None reads sys.argv.

    Returns:
        The exit code: 0 success, 1 verification failure, 2 usage error,
        3 I/O error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    logger.setupLogger(log_severity=args.log_severity or "INFO")
    try:
        return _run(args)
    except errors.KsIOError as e:
        logging.error("I/O error: %s", e)
        return const.EXIT_CODE_IO_ERROR
    except (errors.USERError, ValueError) as e:
        logging.error("Usage error: %s", e)
        return const.EXIT_CODE_USAGE_ERROR
    except errors.KsModelError as e:
        logging.error("%s: %s", type(e).__name__, e)
        return const.EXIT_CODE_USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
