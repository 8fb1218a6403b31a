#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: command line interface
# Created: 09.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

"""
khmutation kh FILE [--t 0|1] [--format json|table] [--simplify]
khmutation oracle FILE [--t 0|1] [--format json|table]
khmutation jones FILE
khmutation verify-mutation --inner T.json --outer T2.json [--certificate OUT]
khmutation mutate --inner T.json --outer T2.json [-o OUT]

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 2 input
error, 3 the outer tangle is not crossed, 4 verification failed.
"""

from __future__ import absolute_import, print_function

import argparse
import json
import logging
import os
import sys

from .diagrams import DiagramError, dump_diagram, load_diagram
from .homology import HomologyError, khovanov_homology
from .mutation import HypothesisError, mutate_diagram, verify_mutation
from .oracle import jones_polynomial, oracle_state_sum

logger = logging.getLogger(__name__)

ENV_JOBS = 'KHMUTATION_JOBS'

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFICATION = 4


class RunConfig(object):
    """ Settings of one command line run. """
    __slots__ = ['command', 'paths', 't', 'format', 'jobs', 'simplify', 'certificate', 'output',
                 'skip_self_crossings', 'homology', 'verbose']

    def __init__(self, command, paths, t=0, format='table', jobs=None, simplify=False, certificate=None,
                 output=None, skip_self_crossings=False, homology=True, verbose=0):
        if t not in (0, 1):
            raise ValueError("t must be 0 or 1, got %r" % (t, ))
        if format not in ('json', 'table'):
            raise ValueError("unknown format %r" % (format, ))
        self.command = command
        self.paths = dict(paths)
        self.t = t
        self.format = format
        self.jobs = jobs
        self.simplify = simplify
        self.certificate = certificate
        self.output = output
        self.skip_self_crossings = skip_self_crossings
        self.homology = homology
        self.verbose = verbose

    @classmethod
    def from_args(cls, args, environ=None):
        environ = os.environ if environ is None else environ
        jobs = args.jobs
        if jobs is None and environ.get(ENV_JOBS):
            try:
                jobs = int(environ[ENV_JOBS])
            except ValueError:
                raise ValueError("%s must be an integer, got %r" % (ENV_JOBS, environ[ENV_JOBS]))
        paths = dict((name, getattr(args, name)) for name in ('file', 'inner', 'outer')
                     if getattr(args, name, None) is not None)
        return cls(args.command, paths, t=getattr(args, 't', 0), format=getattr(args, 'format', 'table'),
                   jobs=jobs, simplify=getattr(args, 'simplify', False),
                   certificate=getattr(args, 'certificate', None), output=getattr(args, 'output', None),
                   skip_self_crossings=getattr(args, 'skip_self_crossings', False),
                   homology=not getattr(args, 'no_homology', False), verbose=args.verbose)

    def check_paths(self):
        for name, path in sorted(self.paths.items()):
            if not os.path.isfile(path):
                raise IOError("%s file not found: %s" % (name, path))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help="more diagnostics on stderr")
    common.add_argument('--jobs', type=int, default=None,
                        help="worker processes for the cube (default $%s or 1)" % ENV_JOBS)

    parser = argparse.ArgumentParser(prog='khmutation',
                                     description="Khovanov and Lee homology over F_2 and mutation checks.")
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    for name, text in (('kh', "homology through the cobordism bracket"),
                       ('oracle', "homology through the state sum")):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('file', help="diagram as JSON or PD code")
        command.add_argument('--t', type=int, choices=(0, 1), default=0, help="0: Khovanov, 1: Lee")
        command.add_argument('--format', choices=('json', 'table'), default='table')
        if name == 'kh':
            command.add_argument('--simplify', action='store_true',
                                 help="deloop and eliminate identity entries first")

    command = commands.add_parser('jones', parents=[common], help="Jones polynomial by the Kauffman bracket")
    command.add_argument('file')

    command = commands.add_parser('verify-mutation', parents=[common], help="check the mutation isomorphism")
    command.add_argument('--inner', required=True, help="disk tangle T")
    command.add_argument('--outer', required=True, help="crossed disk-complement tangle T2")
    command.add_argument('--certificate', help="write the certificate JSON here")
    command.add_argument('--simplify', action='store_true', help="eliminate identity entries in D'(Kh(T))")
    command.add_argument('--skip-self-crossings', action='store_true')
    command.add_argument('--no-homology', action='store_true', help="skip the homology comparison")

    command = commands.add_parser('mutate', parents=[common], help="write the mutant diagram")
    command.add_argument('--inner', required=True)
    command.add_argument('--outer', required=True)
    command.add_argument('-o', '--output', help="output file (default stdout)")
    return parser


def _closed(path):
    diagram = load_diagram(path)
    if not diagram.is_closed:
        raise DiagramError("%s is not a closed diagram" % path)
    return diagram


def _emit(config, poincare, out):
    if config.format == 'json':
        print(json.dumps(poincare.to_json()), file=out)
    elif poincare.dims:
        print(poincare.format_table(), file=out)


def cmd_kh(config, out):
    diagram = _closed(config.paths['file'])
    _emit(config, khovanov_homology(diagram, config.t, simplify=config.simplify, jobs=config.jobs), out)
    return EXIT_OK


def cmd_oracle(config, out):
    _emit(config, oracle_state_sum(_closed(config.paths['file']), config.t), out)
    return EXIT_OK


def cmd_jones(config, out):
    diagram = _closed(config.paths['file'])
    print("J^(q) = %s" % jones_polynomial(diagram), file=out)
    print("J(q) = %s" % jones_polynomial(diagram, normalized=True), file=out)
    return EXIT_OK


def _write_json(path, data):
    with open(path, 'w') as fp:
        json.dump(data, fp, indent=2, sort_keys=True)
        fp.write('\n')


def cmd_verify_mutation(config, out):
    try:
        inner = load_diagram(config.paths['inner'])
        outer = load_diagram(config.paths['outer'])
        certificate = verify_mutation(inner, outer, simplify=config.simplify,
                                      skip_self_crossings=config.skip_self_crossings,
                                      homology=config.homology, jobs=config.jobs)
    except (HypothesisError, DiagramError) as error:
        if config.certificate:
            _write_json(config.certificate, {'valid': False, 'error': str(error)})
        raise
    if config.certificate:
        _write_json(config.certificate, certificate.to_json())
    for stage in certificate.stages:
        print("%-24s %s" % (stage.name, 'ok' if stage.ok else 'FAILED %r' % (stage.counterexample, )), file=out)
    print("valid" if certificate.valid else "invalid", file=out)
    return EXIT_OK if certificate.valid else EXIT_VERIFICATION


def cmd_mutate(config, out):
    mutant = mutate_diagram(load_diagram(config.paths['inner']), load_diagram(config.paths['outer']))
    data = dump_diagram(mutant)
    if config.output:
        _write_json(config.output, data)
    else:
        print(json.dumps(data, sort_keys=True), file=out)
    return EXIT_OK


COMMANDS = {
    'kh': cmd_kh,
    'oracle': cmd_oracle,
    'jones': cmd_jones,
    'verify-mutation': cmd_verify_mutation,
    'mutate': cmd_mutate,
}


def main(argv=None, out=None):
    """ main([argv, out]) -> exit code """
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(level=levels[min(args.verbose, 2)], stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig.from_args(args)
        config.check_paths()
        return COMMANDS[config.command](config, out)
    except HypothesisError as error:
        logger.error("%s", error)
        return EXIT_HYPOTHESIS
    except (DiagramError, HomologyError, ValueError, IOError, OSError) as error:
        logger.error("%s", error)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
