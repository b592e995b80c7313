"""
Command-line front end: normal forms, products, the block isomorphisms and
the structure checks of degenerate cyclotomic Yokonuma-Hecke algebras.

JSON goes to stdout (or --output), progress and errors to stderr.
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Optional

import logging_pool
from algebra import isomorphism, serialization, structure_analysis
from algebra.errors import (
	AlgebraError, DimensionBoundExceeded, FormatError, IndexOutOfRange,
	NotInYoungSubgroup, ParameterMismatch, VariantError,
)
from algebra.scalar_field import parse_rational
from algebra.t_presentation import TElement
from algebra.yokonuma_algebra import YElement, YokonumaAlgebra, YParams

logger = logging.getLogger('yokonuma')

EXHAUSTIVE_DIMENSION_LIMIT = 64
DEFAULT_SAMPLE_COUNT = 10000
DEFAULT_DIMENSION_BOUND = structure_analysis.DEFAULT_DIMENSION_BOUND
CONJUGATION_MAX_N = 3

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BOUND_EXCEEDED = 3

INPUT_ERRORS = (FormatError, ParameterMismatch, IndexOutOfRange, VariantError, NotInYoungSubgroup, OSError)


@dataclass
class JobConfig:
	command: str
	r: Optional[int] = None
	n: Optional[int] = None
	d: Optional[int] = None
	v: tuple = ()
	inputs: list = field(default_factory=list)
	output: Optional[str] = None
	exhaustive: bool = False
	samples: Optional[int] = None
	seed: Optional[int] = None
	jobs: int = 1
	max_dim: int = DEFAULT_DIMENSION_BOUND
	with_timing: bool = False
	form: str = 'rho-hat-n'
	round_trip: bool = False
	max_r: int = 4
	max_n: int = 5
	max_d: int = 3

	@classmethod
	def from_args(cls, args):
		config = cls(
			command=args.command,
			r=getattr(args, 'r', None),
			n=getattr(args, 'n', None),
			d=getattr(args, 'd', None),
			v=tuple(parse_rational(v) for v in (getattr(args, 'v', None) or [])),
			inputs=list(getattr(args, 'inputs', None) or []),
			output=args.output,
			exhaustive=getattr(args, 'exhaustive', False),
			samples=getattr(args, 'samples', None),
			seed=getattr(args, 'seed', None),
			jobs=getattr(args, 'jobs', 1),
			max_dim=getattr(args, 'max_dim', DEFAULT_DIMENSION_BOUND),
			with_timing=args.with_timing,
			form=getattr(args, 'form', 'rho-hat-n'),
			round_trip=getattr(args, 'round_trip', False),
			max_r=getattr(args, 'max_r', 4),
			max_n=getattr(args, 'max_n', 5),
			max_d=getattr(args, 'max_d', 3),
		)
		config.validate()
		return config

	def validate(self):
		if self.d is not None and len(self.v) != self.d:
			raise ParameterMismatch(f"--d {self.d} needs exactly {self.d} --v values, got {len(self.v)}")
		if self.d is None and self.v:
			raise ParameterMismatch("--v given without --d")
		if self.samples is not None and self.seed is None:
			raise ParameterMismatch("sampled verification needs --seed")
		if self.jobs < 1:
			raise ParameterMismatch("--jobs must be at least 1")

	def params(self):
		if self.r is None or self.n is None:
			raise ParameterMismatch(f"'{self.command}' needs --r and --n")
		return YParams(self.r, self.n, self.d, self.v)

	def cyclotomic_params(self):
		params = self.params()
		if not params.cyclotomic:
			raise VariantError(f"'{self.command}' needs --d and --v")
		if params.dimension > self.max_dim:
			raise DimensionBoundExceeded(f"dimension {params.dimension} exceeds --max-dim {self.max_dim}")
		return params


def emit(config, payload):
	text = serialization.dumps(payload)
	if config.output:
		with open(config.output, 'w') as f:
			f.write(text + '\n')
	else:
		print(text)


def read_document(path):
	if path == '-':
		return serialization.loads(sys.stdin.read())
	with open(path) as f:
		return serialization.loads(f.read())


def read_element(path):
	document = read_document(path)
	return serialization.element_from_json(serialization.require(document, 'element'))


def as_idempotent_basis(element):
	"""t-presentation inputs are converted; everything else is already normal."""
	if isinstance(element, TElement):
		params = element.algebra.params
		return element.algebra.to_idempotent_basis(element, YokonumaAlgebra(params))
	return element


# -- commands -----------------------------------------------------------------

def command_nf(config):
	element = as_idempotent_basis(read_element(config.inputs[0]))
	emit(config, {'element': serialization.element_to_json(element)})
	return EXIT_OK


def command_mult(config):
	if len(config.inputs) != 2:
		raise ParameterMismatch("'mult' needs exactly two input files")
	left, right = (as_idempotent_basis(read_element(path)) for path in config.inputs)
	product = left * right
	emit(config, {'element': serialization.element_to_json(product)})
	return EXIT_OK


def command_phi(config):
	element = as_idempotent_basis(read_element(config.inputs[0]))
	if not isinstance(element, YElement):
		raise FormatError("'phi' needs a Yokonuma-Hecke element")
	iso = isomorphism.context(element.algebra.params)
	element = YElement(iso.algebra, element.terms)
	images = iso.phi_full(element)
	payload = {
		'params': element.algebra.params.to_json(),
		'images': serialization.images_to_json(images),
	}
	status = EXIT_OK
	if config.round_trip:
		back = iso.psi_full(images)
		payload['round_trip'] = back == element
		if not payload['round_trip']:
			status = EXIT_VERIFICATION_FAILED
	emit(config, payload)
	return status


def command_psi(config):
	document = read_document(config.inputs[0])
	params = serialization.y_params_from_json(serialization.require(document, 'params'))
	iso = isomorphism.context(params)
	images = serialization.images_from_json(serialization.require(document, 'images'), iso)
	element = iso.psi_full(images)
	payload = {'element': serialization.element_to_json(element)}
	status = EXIT_OK
	if config.round_trip:
		again = iso.phi_full(element)
		payload['round_trip'] = all(again[mu] == matrix for mu, matrix in images.items())
		if not payload['round_trip']:
			status = EXIT_VERIFICATION_FAILED
	emit(config, payload)
	return status


def command_verify_iso(config):
	params = config.params()
	runner = logging_pool.pool_runner(config.jobs)
	basis_size = len(isomorphism.basis_of(params))
	if basis_size > config.max_dim:
		raise DimensionBoundExceeded(f"basis of {basis_size} monomials exceeds --max-dim {config.max_dim}")
	exhaustive = config.exhaustive or (
		config.samples is None and basis_size <= EXHAUSTIVE_DIMENSION_LIMIT
	)
	if exhaustive:
		pairs = isomorphism.all_pairs(basis_size)
	else:
		if config.seed is None:
			raise ParameterMismatch(
				f"dimension {basis_size} is above {EXHAUSTIVE_DIMENSION_LIMIT}: pass --seed for sampling or --exhaustive"
			)
		pairs = isomorphism.sample_pairs(basis_size, config.samples or DEFAULT_SAMPLE_COUNT, config.seed)
	logger.info("verifying %s on %d pairs (%s)", params, len(pairs), 'exhaustive' if exhaustive else 'sampled')
	reports = [
		isomorphism.verify_homomorphism(params, pairs, runner),
		isomorphism.verify_bijection(params),
	]
	if params.cyclotomic:
		reports.append(isomorphism.verify_coset_commutation(params))
	if params.n <= CONJUGATION_MAX_N:
		reports.append(isomorphism.verify_conjugation(params))
	passed = all(report.passed for report in reports)
	emit(config, {
		'params': params.to_json(),
		'mode': 'exhaustive' if exhaustive else 'sampled',
		'seed': None if exhaustive else config.seed,
		'status': 'pass' if passed else 'fail',
		'reports': [report.to_json(config.with_timing) for report in reports],
	})
	return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def command_gram(config):
	params = config.cyclotomic_params()
	algebra = isomorphism.context(params).algebra
	form = structure_analysis.named_form(algebra, config.form)
	gram_data = structure_analysis.gram_matrix(algebra, form, config.form, max_dim=config.max_dim)
	determinant = structure_analysis.gram_determinant(gram_data, algebra)
	trace = structure_analysis.verify_trace_property(algebra, form, config.form, gram_data.basis)
	emit(config, {
		'params': params.to_json(),
		'form': config.form,
		'basis': [serialization.monomial_to_json(m) for m in gram_data.basis],
		'gram': serialization.scalar_matrix_to_json(gram_data.gram),
		'determinant': determinant.to_json(),
		'invertible': bool(determinant),
		'trace_property': trace.to_json(config.with_timing),
	})
	return EXIT_OK if trace.passed else EXIT_VERIFICATION_FAILED


def command_semisimple(config):
	params = config.cyclotomic_params()
	algebra = isomorphism.context(params).algebra
	criterion = structure_analysis.semisimplicity_criterion(params)
	oracle = structure_analysis.radical_oracle(algebra, config.max_dim)
	blocks = structure_analysis.block_semisimplicity(params, config.max_dim)
	agree = criterion == oracle == all(blocks.values())
	emit(config, {
		'params': params.to_json(),
		'criterion': criterion,
		'oracle': oracle,
		'blocks': [{'mu': list(mu), 'semisimple': value} for mu, value in sorted(blocks.items())],
		'agree': agree,
	})
	return EXIT_OK if agree else EXIT_VERIFICATION_FAILED


def command_schur(config):
	params = config.cyclotomic_params()
	report = structure_analysis.schur_report(params)
	emit(config, {'report': report.to_json(config.with_timing)})
	return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def command_dims(config):
	rows = structure_analysis.dimension_table(config.max_r, config.max_n, config.max_d)
	emit(config, {'rows': rows})
	return EXIT_OK if all(row['holds'] for row in rows) else EXIT_VERIFICATION_FAILED


COMMANDS = {
	'nf': command_nf,
	'mult': command_mult,
	'phi': command_phi,
	'psi': command_psi,
	'verify-iso': command_verify_iso,
	'gram': command_gram,
	'semisimple': command_semisimple,
	'schur': command_schur,
	'dims': command_dims,
}


# -- argument parsing ---------------------------------------------------------

def build_parser():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--output', help='write JSON here instead of stdout')
	common.add_argument('--with-timing', action='store_true', help='embed wall-clock seconds in reports')
	common.add_argument('--verbose', action='store_true', help='debug logging on stderr')

	algebra = argparse.ArgumentParser(add_help=False)
	algebra.add_argument('--r', type=int, required=True)
	algebra.add_argument('--n', type=int, required=True)
	algebra.add_argument('--d', type=int)
	algebra.add_argument('--v', action='append', help='cyclotomic parameter "p/q", repeat d times')
	algebra.add_argument('--max-dim', type=int, default=DEFAULT_DIMENSION_BOUND)

	parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
	commands = parser.add_subparsers(dest='command', required=True)

	nf = commands.add_parser('nf', parents=[common], help='normal form of a JSON element')
	nf.add_argument('inputs', nargs=1, metavar='ELEMENT')

	mult = commands.add_parser('mult', parents=[common], help='product of two JSON elements')
	mult.add_argument('inputs', nargs=2, metavar='ELEMENT')

	for name, meta in (('phi', 'ELEMENT'), ('psi', 'IMAGES')):
		sub = commands.add_parser(name, parents=[common], help=f'apply {name} to a JSON document')
		sub.add_argument('inputs', nargs=1, metavar=meta)
		sub.add_argument('--round-trip', action='store_true', help='apply the inverse map and compare')

	verify = commands.add_parser('verify-iso', parents=[common, algebra], help='homomorphism and bijection suite')
	verify.add_argument('--exhaustive', action='store_true')
	verify.add_argument('--samples', type=int)
	verify.add_argument('--seed', type=int)
	verify.add_argument('--jobs', type=int, default=1)

	gram = commands.add_parser('gram', parents=[common, algebra], help='Gram matrix of a symmetrizing form')
	gram.add_argument('--form', choices=['tau', 'rho-hat-n', 'rho-n'], default='rho-hat-n')

	commands.add_parser('semisimple', parents=[common, algebra], help='criterion versus radical oracle')
	commands.add_parser('schur', parents=[common, algebra], help='Schur elements of the built-in simple modules')

	dims = commands.add_parser('dims', parents=[common], help='dimension identity table')
	dims.add_argument('--max-r', type=int, default=4)
	dims.add_argument('--max-n', type=int, default=5)
	dims.add_argument('--max-d', type=int, default=3)
	return parser


def main(argv=None):
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR
	logging.basicConfig(
		level=logging.DEBUG if args.verbose else logging.INFO,
		format='%(asctime)s %(name)s %(levelname)s %(message)s',
		stream=sys.stderr,
	)
	try:
		config = JobConfig.from_args(args)
		return COMMANDS[config.command](config)
	except DimensionBoundExceeded as e:
		print(f'error: {e}', file=sys.stderr)
		return EXIT_BOUND_EXCEEDED
	except INPUT_ERRORS as e:
		print(f'error: {e}', file=sys.stderr)
		return EXIT_INPUT_ERROR
	except AlgebraError as e:
		print(f'error: {e}', file=sys.stderr)
		return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
	sys.exit(main())
