"""Runs one subcommand and collects its outcome into a :class:`CommandReport`.

Mathematical failures are recorded on the report (exit code 1); misuse and
unreadable input propagate as exceptions and are mapped to exit code 2 by the
entry point.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from errors import EdgeIdealError
from config_loader import get_nested
from logger import ProgressTracker
from algebra.groebner import buchberger, is_groebner_basis
from algebra.ideals import (
    IdealHandle,
    colon_by_linear_form,
    colon_by_variable,
    colon_general,
    ideal_equal,
    initial_ideal,
    is_linearly_generated_mod,
    kernel_of_monomial_map,
    linear_quotient_steps,
    squarefree_veronese_images,
)
from algebra.orders import parse_order_spec
from algebra.poly_parser import parse_polynomial
from algebra.polynomial import PolynomialRing
from graphs.graph import is_closed_labeling, is_connected, relabel
from graphs.labeling import find_closed_labeling, random_relabelings_fail
from edge_ideals.binomial_edge import (
    build_context,
    build_koszul_filtration,
    c_universal_necessary,
    casetwo_colon,
    casetwo_regular,
    closed_iff_quadratic,
    colon_x_sequence,
    linear_quotient_report,
)
from koszul.filtration import Filtration, FiltrationReport, minimality_probe, recheck_certificate, verify
from lattices.hibi import (
    HibiRing,
    certify_covers,
    colon_cover,
    hibi_koszul_filtration,
    poset_ideals,
    reduced_family_check,
    reduced_family_filtration,
    upset_filtration,
)
from lattices.lattice import DistributiveLattice
from lattices.poset import Poset
from models import Command, CommandReport, Invocation
from readers import (
    FamilyReader,
    FiltrationReader,
    GraphReader,
    IdealReader,
    ImagesReader,
    LatticeReader,
    PosetReader,
    format_filtration,
    parse_subset,
)


def _texts(polys) -> List[str]:
    return [str(p) for p in polys]


def _subset_text(subset) -> List[str]:
    return sorted(subset)


class CommandRunner:
    """Dispatches an :class:`Invocation` to the matching ``run_*`` method."""

    def __init__(self, config: Dict[str, Any], logger: Optional[logging.Logger] = None):
        self.config = config
        self.logger = logger or logging.getLogger('koszul_toolkit.commands')
        self._handlers: Dict[Command, Callable[[Invocation, CommandReport], None]] = {
            Command.GB: self.run_gb,
            Command.COLON: self.run_colon,
            Command.CLOSED: self.run_closed,
            Command.BEI: self.run_bei,
            Command.KOSZUL_VERIFY: self.run_koszul_verify,
            Command.HIBI: self.run_hibi,
            Command.TORIC: self.run_toric,
        }

    def run(self, invocation: Invocation) -> CommandReport:
        report = CommandReport(invocation.command.value, list(invocation.inputs))
        self.logger.info(f"Running {invocation.command.value} on {invocation.inputs}")
        self._handlers[invocation.command](invocation, report)
        if report.failures:
            self.logger.warning(f"{invocation.command.value}: {len(report.failures)} failures")
        return report

    def _certify(self, invocation: Invocation) -> bool:
        return invocation.certify or bool(get_nested(self.config, 'cli.certify', False))

    @property
    def _workers(self) -> int:
        return get_nested(self.config, 'koszul.workers', 1)

    def _verify(self, F: Filtration, report: CommandReport, certify: bool) -> FiltrationReport:
        progress = bool(get_nested(self.config, 'koszul.progress_bars', False))
        outcome = verify(F, workers=self._workers, progress=progress)
        summary = outcome.to_dict(F)
        report.certificates.extend(summary['certificates'])
        for failure in summary['failures']:
            report.fail(failure['reason'], member=failure['member'], degree=failure['degree'])
        if certify and outcome.ok:
            for certificate in outcome.certificates.values():
                if not recheck_certificate(F, certificate):
                    report.fail("certificate does not survive recomputation",
                                member=F.members[certificate.member].labels())
        return outcome

    # gb / colon

    def _ideal_input(self, invocation: Invocation):
        ideal_file = IdealReader(self.config, self.logger).read(invocation.inputs[0])
        if invocation.order:
            ideal_file.order = parse_order_spec(invocation.order, ideal_file.ring)
        return ideal_file

    def run_gb(self, invocation: Invocation, report: CommandReport) -> None:
        ideal_file = self._ideal_input(invocation)
        naive = bool(invocation.options.get('naive'))
        basis = buchberger(ideal_file.ideal.generators, ideal_file.order, criteria=not naive)
        report.result = {
            'ring': list(ideal_file.ring.names),
            'order': ideal_file.order.spec(),
            'basis': _texts(basis.elements),
            'size': len(basis),
            'max_degree': basis.max_degree(),
            'quadratic': basis.is_quadratic(),
        }
        if self._certify(invocation):
            if not is_groebner_basis(list(basis.elements), ideal_file.order):
                report.fail("basis fails the S-pair criterion")
            other = buchberger(ideal_file.ideal.generators, ideal_file.order, criteria=naive)
            if other.elements != basis.elements:
                report.fail("basis differs between criteria and naive runs")
            report.certificates.append({'check': 'S-pair criterion and naive recomputation'})

    def run_colon(self, invocation: Invocation, report: CommandReport) -> None:
        ideal_file = self._ideal_input(invocation)
        I = ideal_file.ideal
        f = parse_polynomial(invocation.options['divisor'], ideal_file.ring, source='<argument>')
        if len(f) == 1 and f.total_degree() == 1 and f.coefficient(f.monomials()[0]) == 1:
            method = 'variable'
            result = colon_by_variable(I, f.variables_used()[0])
        elif f.is_linear_form() and I.is_homogeneous():
            method = 'linear form'
            result = colon_by_linear_form(I, f)
        else:
            method = 'elimination'
            result = colon_general(I, f)
        report.result = {
            'divisor': str(f),
            'method': method,
            'colon': _texts(result.groebner(ideal_file.order).elements),
            'linearly_generated_mod_ideal': is_linearly_generated_mod(I, result, ideal_file.order),
        }
        if self._certify(invocation) and method != 'elimination':
            oracle = colon_general(I, f)
            holds = ideal_equal(result, oracle, ideal_file.order)
            report.certificates.append({'check': 'colon by elimination', 'holds': holds})
            if not holds:
                report.fail("fast colon disagrees with elimination", divisor=str(f))

    # graphs and binomial edge ideals

    def run_closed(self, invocation: Invocation, report: CommandReport) -> None:
        G = GraphReader(self.config, self.logger).read(invocation.inputs[0])
        check = is_closed_labeling(G)
        report.result = {
            'closed': check.closed,
            'witness': list(check.witness) if check.witness else None,
            'connected': is_connected(G),
        }
        if not invocation.options.get('search'):
            if not check.closed:
                report.fail("labeling is not closed", witness=list(check.witness))
            return
        bound = get_nested(self.config, 'graphs.labeling_bound', 9)
        workers = get_nested(self.config, 'graphs.search_workers', 1)
        labeling = find_closed_labeling(G, bound=bound, workers=workers)
        report.result['labeling'] = list(labeling) if labeling else 'none'
        if labeling is None:
            sampled = random_relabelings_fail(G, seed=invocation.seed)
            report.result['random_relabelings_fail'] = sampled
            report.fail("no closed labeling exists")
        else:
            relabeled = relabel(G, labeling)
            report.result['relabeled_edges'] = [list(e) for e in relabeled.sorted_edges()]
            if not is_closed_labeling(relabeled).closed:
                report.fail("search returned a labeling that is not closed")

    def run_bei(self, invocation: Invocation, report: CommandReport) -> None:
        G = GraphReader(self.config, self.logger).read(invocation.inputs[0])
        ctx = build_context(G)
        mode = invocation.options.get('mode', 'check-closed')
        certify = self._certify(invocation)
        report.result = {'mode': mode, 'generators': _texts(ctx.ideal.generators)}

        if mode in ('check-closed', 'quadratic-gb'):
            closed, quadratic = closed_iff_quadratic(ctx)
            report.result.update({'closed': closed, 'quadratic': quadratic})
            if mode == 'quadratic-gb':
                report.result['basis'] = _texts(ctx.ideal.groebner(ctx.revlex).elements)
            if closed != quadratic:
                report.fail("closedness and quadratic basis disagree")
            elif not closed:
                report.fail("labeling is not closed", witness=list(is_closed_labeling(G).witness))

        elif mode == 'colon':
            i = int(invocation.options['vertex'])
            outcome = colon_x_sequence(ctx, i, use_elimination=False)
            report.result.update({
                'vertex': i,
                'closed': outcome.closed,
                'colon': _texts(outcome.colon.groebner(ctx.revlex).elements),
                'formula': outcome.formula.labels() if outcome.formula is not None else None,
            })
            if not outcome.closed:
                report.fail("labeling is not closed; no neighbourhood formula")
            elif not outcome.certified:
                report.fail("neighbourhood formula disagrees with the Gröbner colon", vertex=i)
            if certify and outcome.closed:
                oracle = colon_x_sequence(ctx, i)
                holds = ideal_equal(oracle.colon, outcome.colon, ctx.revlex)
                report.certificates.append({'check': 'colon by elimination', 'vertex': i, 'holds': holds})
                if not holds:
                    report.fail("fast colon disagrees with elimination", vertex=i)
                report.certificates.append({'check': 'formula by elimination', 'vertex': i, 'holds': bool(oracle.certified)})
                if not oracle.certified:
                    report.fail("neighbourhood formula disagrees with elimination", vertex=i)

        elif mode == 'linear-quotients':
            steps = linear_quotient_report(ctx)
            report.result['steps'] = [{'vertex': v, 'linear': linear} for v, linear in steps]
            for v, linear in steps:
                if not linear:
                    report.fail("colon is not generated by linear forms", vertex=v)

        elif mode == 'filtration':
            try:
                F = build_koszul_filtration(ctx)
            except EdgeIdealError as e:
                report.fail(str(e))
                return
            report.result['members'] = F.labels()
            self._verify(F, report, certify)
            if certify:
                self._certify_edge_identities(ctx, report)
            emit = invocation.options.get('emit')
            if emit:
                Path(emit).write_text(format_filtration(F, Path(invocation.inputs[0]).name), encoding='utf-8')
                self.logger.info(f"Filtration written to {emit}")

        elif mode == 'c-universal':
            check = c_universal_necessary(ctx)
            report.result['c_universal'] = check.to_dict()
            if not check.holds:
                report.fail("variable colon is not generated by variables",
                            vertex=check.vertex, witness=str(check.witness))
            if check.full is not None and check.full != check.holds:
                report.fail("full subset verification disagrees with the variable colon test")

    def _certify_edge_identities(self, ctx, report: CommandReport) -> None:
        """Re-validate the neighbourhood colon at every vertex and the y-colon identities by elimination."""
        with ProgressTracker(ctx.n, "x colons") as tracker:
            for i in range(1, ctx.n + 1):
                outcome = colon_x_sequence(ctx, i, use_elimination=True)
                holds = bool(outcome.certified)
                tracker.increment(holds)
                report.certificates.append({'check': 'x colon', 'vertex': i, 'holds': holds})
                if not holds:
                    report.fail("neighbourhood formula disagrees with elimination", vertex=i)
        for k in range(1, ctx.n):
            try:
                identity = casetwo_colon(ctx, k, use_elimination=True)
            except EdgeIdealError:
                continue
            report.certificates.append({'check': 'y colon', 'vertex': k, 'holds': identity.holds})
            if not identity.holds:
                report.fail("y colon identity fails", vertex=k)
            ell = max(ctx.graph.neighbors(k))
            for s in range(k + 2, ell + 1):
                regular = casetwo_regular(ctx, k, s, use_elimination=True)
                report.certificates.append({'check': 'regular y', 'vertex': k, 's': s, 'holds': regular})
                if not regular:
                    report.fail("y variable is not regular", vertex=k, s=s)

    # koszul

    def run_koszul_verify(self, invocation: Invocation, report: CommandReport) -> None:
        loaded = FiltrationReader(self.config, self.logger).read(invocation.inputs[0])
        F = loaded.filtration
        report.result = {
            'ring': list(F.host.ring.names),
            'members': F.labels(),
        }
        if loaded.context is not None:
            check = is_closed_labeling(loaded.context.graph)
            report.result['graph_closed'] = check.closed
        outcome = self._verify(F, report, self._certify(invocation))
        if invocation.options.get('minimality') and outcome.ok:
            bound = get_nested(self.config, 'koszul.minimality_exhaustive_bound', 12)
            report.result['minimality'] = minimality_probe(F, exhaustive_bound=bound).to_dict(F)

    # lattices

    def _lattice_input(self, path: str) -> DistributiveLattice:
        if Path(path).suffix == '.lattice':
            return LatticeReader(self.config, self.logger).read(path)
        poset: Poset = PosetReader(self.config, self.logger).read(path)
        return DistributiveLattice.from_poset(
            poset,
            get_nested(self.config, 'lattice.poset_bound', 6),
            get_nested(self.config, 'lattice.lattice_bound', 16),
        )

    def run_hibi(self, invocation: Invocation, report: CommandReport) -> None:
        L = self._lattice_input(invocation.inputs[0])
        hibi = HibiRing(L)
        mode = invocation.options.get('mode', 'ideals')
        certify = self._certify(invocation)
        report.result = {'mode': mode, 'elements': list(L.elements)}

        if mode == 'ideals':
            report.result['poset_ideals'] = [_subset_text(ideal) for ideal in poset_ideals(L)]

        elif mode == 'joinmeet':
            report.result['generators'] = _texts(hibi.ideal.generators)
            initial = initial_ideal(hibi.ideal, hibi.order)
            products = IdealHandle(hibi.ring, [hibi.ring.var(a) * hibi.ring.var(b) for a, b in L.incomparable_pairs()])
            holds = ideal_equal(initial, products, hibi.order)
            report.result['initial_ideal'] = _texts(initial.generators)
            report.certificates.append({'check': 'initial ideal is incomparable products', 'holds': holds})
            if not holds:
                report.fail("initial ideal differs from the incomparable products")

        elif mode == 'colon':
            lower = parse_subset(invocation.options['lower'], source='<argument>')
            upper = parse_subset(invocation.options['upper'], source='<argument>')
            outcome = colon_cover(hibi, lower, upper, use_elimination=certify)
            report.result.update({
                'lower': _subset_text(outcome.lower),
                'upper': _subset_text(outcome.upper),
                'element': outcome.element,
                'colon': _subset_text(outcome.cogenerated),
                'holds': outcome.holds,
            })
            if not outcome.holds:
                report.fail("colon differs from the co-generated ideal", element=outcome.element)

        elif mode in ('filtration', 'upsets'):
            builder = hibi_koszul_filtration if mode == 'filtration' else upset_filtration
            F = builder(L, hibi)
            report.result['members'] = F.labels()
            self._verify(F, report, certify)
            if certify and mode == 'filtration':
                for cover in certify_covers(hibi, workers=self._workers, use_elimination=True):
                    report.certificates.append({
                        'check': 'cover colon',
                        'lower': _subset_text(cover.lower),
                        'element': cover.element,
                        'holds': cover.holds,
                    })
                    if not cover.holds:
                        report.fail("cover colon fails", element=cover.element)

        elif mode == 'reduced':
            family = FamilyReader(self.config, self.logger).read(invocation.options['family'])
            conditions = reduced_family_check(L, family)
            report.result['conditions_hold'] = conditions
            if not conditions:
                report.fail("family misses a co-generated ideal or a one-element step")
                return
            F = reduced_family_filtration(L, family, hibi)
            report.result['members'] = F.labels()
            self._verify(F, report, certify)

    # toric

    def run_toric(self, invocation: Invocation, report: CommandReport) -> None:
        squarefree = invocation.options.get('squarefree')
        if squarefree:
            m, d = squarefree
            target, images = squarefree_veronese_images(m, d)
            source_names = None
        else:
            images_file = ImagesReader(self.config, self.logger).read(invocation.inputs[0])
            target = images_file.target
            images = [image.monomials()[0] for image in images_file.images]
            source_names = images_file.source_names
        kernel = kernel_of_monomial_map(images, target, source_names)
        ring: PolynomialRing = kernel.ring
        order = parse_order_spec(invocation.order, ring) if invocation.order else ring.default_order()
        basis = kernel.groebner(order)
        report.result = {
            'ring': list(ring.names),
            'order': order.spec(),
            'basis': _texts(basis.elements),
            'quadratic': basis.is_quadratic(),
            'max_degree': basis.max_degree(),
        }
        if invocation.options.get('linear_quotients'):
            sequence = list(range(ring.dimension - 1, -1, -1))
            steps = linear_quotient_steps(kernel, sequence)
            report.result['linear_quotients'] = [
                {'variable': ring.names[index], 'linear': linear} for index, linear in steps
            ]
            if not all(linear for _, linear in steps):
                report.fail("variable sequence does not have linear quotients")


__all__ = ['CommandRunner']
